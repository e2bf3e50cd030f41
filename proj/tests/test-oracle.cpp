#include <random>  // for mt19937

#include "test-main.hpp"

#include "semichain/classify.hpp"
#include "semichain/exception.hpp"
#include "semichain/grouplen.hpp"
#include "semichain/leagues.hpp"
#include "semichain/oracle.hpp"

namespace semichain {
  using test::make;

  namespace {
    size_t l(CayleyTable const& S) {
      return longest_chain_exact(S).length;
    }

    // Small semigroups of every kind, none with more than 8 elements.
    std::vector<CayleyTable> small_corpus() {
      std::vector<CayleyTable> out;
      for (auto s : {"null:1", "null:2", "null:5", "null:8", "mono:1,1",
                     "mono:2,1", "mono:3,2", "mono:4,4", "mono:1,6", "mono:5,3",
                     "brandt:triv,1", "brandt:triv,2", "brandt:c2,1",
                     "brandt:c3,1", "fb2", "cyc:4", "cyc:6", "cyc:8", "sym:3",
                     "T:2", "O:2", "I:2", "POI:2"}) {
        out.push_back(make(s));
      }
      // bands: left zero, right zero, rectangular
      auto const triv = make("cyc:1");
      out.push_back(build_family(family::ReesMatrixOverGroup{triv, 2, 3, {}}));
      out.push_back(build_family(family::ReesMatrixOverGroup{triv, 4, 1, {}}));
      out.push_back(build_family(family::ReesMatrixOverGroup{triv, 1, 3, {}}));
      out.push_back(build_family(
          family::ReesMatrixOverGroup{make("cyc:2"), 2, 2, {{0, 0}, {0, 1}}}));
      out.push_back(test::quaternion_group());
      std::mt19937 rng(2024);
      auto const   T3 = make("T:3");
      while (out.size() < 45) {
        auto S = test::random_subsemigroup(T3, 2, rng);
        if (S.size() <= 8) {
          out.push_back(std::move(S));
        }
      }
      return out;
    }
  }  // namespace

  SEMICHAIN_TEST_CASE("oracle", "001", "examples", "[quick]") {
    REQUIRE(l(make("null:4")) == 3);
    REQUIRE(l(make("brandt:triv,2")) == 4);
    REQUIRE(l(make("cyc:6")) == 2);
    REQUIRE(l(make("brandt:triv,3")) == 8);
    REQUIRE(l(make("brandt:c2,2")) == 7);
    REQUIRE(l(make("I:2")) == 6);
    REQUIRE(l(make("fb2")) == 4);
    REQUIRE(l(make("sym:4")) == 4);
  }

  SEMICHAIN_TEST_CASE("oracle", "002", "inverse chains", "[quick]") {
    auto linv = [](char const* s) {
      return longest_inverse_chain_exact(make(s)).length;
    };
    REQUIRE(linv("I:2") == 5);
    REQUIRE(linv("I:1") == 1);
    REQUIRE(linv("cyc:4") == 2);
    REQUIRE(linv("brandt:triv,2") == 3);
    REQUIRE(linv("brandt:c2,2") == 5);
    REQUIRE_THROWS_AS(longest_inverse_chain_exact(make("T:2")), NotInverse);
    auto const r = longest_inverse_chain_exact(make("I:2"));
    REQUIRE(r.witness.kind == ChainKind::inverse_subsemigroup);
    REQUIRE(verify_chain(make("I:2"), r.witness));
  }

  SEMICHAIN_TEST_CASE("oracle", "003", "verify_chain", "[quick]") {
    auto const N = make("null:4");
    auto const r = longest_chain_exact(N);
    REQUIRE(verify_chain(N, r.witness));
    REQUIRE(r.witness.length() == 3);

    auto const T2 = make("T:2");
    ChainCertificate bad;
    // {[2,1]} is not closed: its square is the identity
    bad.subsets = {ElementSet(4, {2})};
    auto const c = verify_chain(T2, bad);
    REQUIRE(!c);
    REQUIRE(c.violation.find("not closed") != std::string::npos);
    bad.subsets = {ElementSet(4, {0}), ElementSet(4, {0})};
    REQUIRE(!verify_chain(T2, bad));
    bad.subsets = {ElementSet(4)};
    REQUIRE(!verify_chain(T2, bad));
    bad.subsets = {};
    REQUIRE(!verify_chain(T2, bad));
    bad.subsets = {ElementSet(4, {0}), ElementSet(4, {3})};
    REQUIRE(!verify_chain(T2, bad));
    // a subsemigroup that is not closed under inverses
    auto const I2 = make("I:2");
    auto const g  = greens_structure(I2);
    ChainCertificate inv{ChainKind::inverse_subsemigroup, {}};
    for (size_t x = 0; x < I2.size(); ++x) {
      ElementSet const U = closure(I2, ElementSet(I2.size(), {x}));
      if (U.count() == 2 && !classify(subtable(I2, U)).inverse) {
        inv.subsets = {U};
        break;
      }
    }
    REQUIRE(!inv.subsets.empty());
    REQUIRE(!verify_chain(I2, inv));
    inv.kind = ChainKind::subsemigroup;
    REQUIRE(verify_chain(I2, inv));
  }

  SEMICHAIN_TEST_CASE("oracle", "004", "null semigroups", "[quick]") {
    for (size_t m = 1; m <= 12; ++m) {
      auto const N = make(("null:" + std::to_string(m)).c_str());
      auto const r = longest_chain_exact(N);
      REQUIRE(r.length == m - 1);
      REQUIRE(verify_chain(N, r.witness));
    }
    auto const big = make("null:300");
    auto const r   = longest_chain_exact(big);
    REQUIRE(r.length == 299);
    REQUIRE(r.enumerated == 0);
    REQUIRE(verify_chain(big, r.witness));
  }

  SEMICHAIN_TEST_CASE("oracle", "005", "monogenic and cyclic", "[quick]") {
    for (size_t m = 1; m < 10; ++m) {
      for (size_t r = 1; m + r <= 10; ++r) {
        auto const S = build_family(family::Monogenic{m, r});
        REQUIRE(l(S) == m + omega(r) - 1);
      }
    }
    for (size_t n = 1; n <= 12; ++n) {
      REQUIRE(l(make(("cyc:" + std::to_string(n)).c_str())) == omega(n));
    }
  }

  SEMICHAIN_TEST_CASE("oracle", "006", "groups agree with grouplen", "[quick]") {
    std::vector<CayleyTable> groups = {make("sym:3"), test::quaternion_group()};
    auto const S4 = make("sym:4");
    groups.push_back(subtable(S4, derived_subgroup(S4)));  // A_4
    for (size_t n = 1; n <= 12; ++n) {
      groups.push_back(make(("cyc:" + std::to_string(n)).c_str()));
    }
    for (auto const& G : groups) {
      REQUIRE(l(G) == group_length(G).length);
      REQUIRE(l(G) == longest_inverse_chain_exact(G).length);
    }
  }

  SEMICHAIN_TEST_CASE("oracle", "007", "ideal and quotient additivity", "[quick]") {
    auto const corpus = small_corpus();
    REQUIRE(corpus.size() >= 20);
    size_t pairs = 0;
    for (auto const& S : corpus) {
      REQUIRE(S.size() <= 8);
      size_t const lS = l(S);
      for (auto const& I : all_ideals(S)) {
        REQUIRE(lS == l(subtable(S, I)) + l(rees_quotient(S, I)));
        ++pairs;
      }
    }
    REQUIRE(pairs > corpus.size());
  }

  SEMICHAIN_TEST_CASE("oracle", "008", "regular: sum of principal factors", "[quick]") {
    size_t regular = 0;
    for (auto const& S : small_corpus()) {
      if (!classify(S).regular) {
        continue;
      }
      ++regular;
      auto const g   = greens_structure(S);
      size_t     sum = 0;
      for (size_t c = 0; c < g.number_of_j_classes; ++c) {
        sum += l(principal_factor(S, g, c));
      }
      REQUIRE(l(S) == sum - 1);
    }
    REQUIRE(regular >= 10);
  }

  SEMICHAIN_TEST_CASE("oracle", "009", "decompose_length", "[quick]") {
    REQUIRE(decompose_length(make("mono:3,4")).length == 4);
    REQUIRE(l(make("mono:3,4")) == 4);
    REQUIRE(decompose_length(make("I:2")).length == 6);
    REQUIRE(decompose_length(make("brandt:c2,2")).length == 7);
    REQUIRE(decompose_length(make("I:3")).length == 25);
    REQUIRE(decompose_length(make("POPI:3")).length == 24);
    REQUIRE(decompose_length(make("null:6")).length == 5);

    auto const T3 = make("T:3");
    SearchBudget tiny;
    tiny.max_subsemigroups = 5;
    REQUIRE_THROWS_AS(decompose_length(T3, tiny), NotDecomposable);
    auto const d = decompose_length(T3);
    REQUIRE(d.length == l(T3));
    REQUIRE(d.trace.children.size() == 3);
    bool searched = false;
    for (auto const& c : d.trace.children) {
      searched = searched || c.method == "oracle";
    }
    REQUIRE(searched);

    for (auto const& S : small_corpus()) {
      REQUIRE(decompose_length(S).length == l(S));
    }
    std::mt19937 rng(99);
    auto const   T3big = make("T:3");
    for (size_t i = 0; i < 40; ++i) {
      auto const S = test::random_subsemigroup(T3big, 1 + i % 4, rng);
      REQUIRE(decompose_length(S).length == l(S));
    }
  }

  SEMICHAIN_TEST_CASE("oracle", "010", "budget and determinism", "[quick]") {
    auto const   T3 = make("T:3");
    SearchBudget tiny;
    tiny.max_subsemigroups = 10;
    try {
      longest_chain_exact(T3, tiny);
      FAIL("budget ignored");
    } catch (BudgetExceeded const& e) {
      REQUIRE(e.enumerated == 10);
    }
    SearchBudget bad;
    bad.threads = 0;
    REQUIRE_THROWS(longest_chain_exact(T3, bad));

    auto const r1 = longest_chain_exact(T3);
    SearchBudget par;
    par.threads   = 3;
    auto const r3 = longest_chain_exact(T3, par);
    REQUIRE(r1.length == r3.length);
    REQUIRE(r1.witness == r3.witness);
    REQUIRE(r1.enumerated == r3.enumerated);
    REQUIRE(verify_chain(T3, r1.witness));
    // at least the league bound sum_k F(3, k) k! - 1
    REQUIRE(big(r1.length) >= tn_lower_bound(3, true));
  }

}  // namespace semichain
