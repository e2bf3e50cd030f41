#include <random>  // for mt19937

#include "test-main.hpp"

#include "semichain/exception.hpp"
#include "semichain/formulas.hpp"
#include "semichain/leagues.hpp"
#include "semichain/oracle.hpp"

namespace semichain {

  namespace {
    // number of maps in T_n of rank r
    BigNat rank_count(size_t n, size_t r) {
      return stirling2(n, r) * factorial(n) / factorial(n - r);
    }

    size_t F(size_t n, size_t k, bool interval = false) {
      return max_content_exact(n, k, interval, {}, n >= 7).optimum;
    }
  }  // namespace

  SEMICHAIN_TEST_CASE("leagues", "001", "enumeration", "[quick]") {
    REQUIRE(enumerate_partitions(3, 2, false).size() == 3);
    REQUIRE(enumerate_partitions(4, 2, true).size() == 3);
    REQUIRE(enumerate_partitions(7, 4, false).size() == 350);
    REQUIRE(enumerate_partitions(7, 4, true).size() == 20);
    for (size_t n = 1; n <= 8; ++n) {
      for (size_t k = 1; k <= n; ++k) {
        REQUIRE(big(enumerate_partitions(n, k, false).size()) == stirling2(n, k));
        REQUIRE(big(enumerate_partitions(n, k, true).size())
                == binomial(n - 1, k - 1));
        REQUIRE(big(k_subsets(n, k).size()) == binomial(n, k));
        for (auto const& Q : enumerate_partitions(n, k, true)) {
          REQUIRE(Q.is_interval());
        }
      }
    }
    auto const P = enumerate_partitions(3, 2, false);
    REQUIRE(P[0] == partition_from_labels({0, 0, 1}));
    REQUIRE(P[1] == partition_from_labels({0, 1, 0}));
    REQUIRE(P[2] == partition_from_labels({0, 1, 1}));
    REQUIRE(!P[1].is_interval());
    REQUIRE(k_subsets(4, 2).front() == std::vector<size_t>({1, 2}));
    REQUIRE(k_subsets(4, 2).back() == std::vector<size_t>({3, 4}));
  }

  SEMICHAIN_TEST_CASE("leagues", "002", "transversals and league_check", "[quick]") {
    auto const Q = partition_from_labels({0, 0, 1, 1});  // {1,2}{3,4}
    REQUIRE(is_transversal({1, 3}, Q));
    REQUIRE(is_transversal({2, 4}, Q));
    REQUIRE(!is_transversal({1, 2}, Q));
    REQUIRE(!is_transversal({3, 4}, Q));
    REQUIRE(!is_transversal({1}, Q));

    League L{4, 2, false, {Q}, {{1, 2}, {3, 4}}};
    REQUIRE(league_check(L));
    REQUIRE(L.content() == 2);
    L.subsets.push_back({1, 3});
    REQUIRE(!league_check(L));
    L.subsets.pop_back();
    L.subsets.push_back({2, 1});
    REQUIRE(!league_check(L));
    L.subsets.back() = {1, 2, 3};
    REQUIRE(!league_check(L));
    L.subsets.pop_back();
    L.interval = true;
    REQUIRE(league_check(L));
    L.partitions.push_back(partition_from_labels({0, 1, 0, 1}));
    REQUIRE(!league_check(L));
    REQUIRE(league_check(League{5, 3, false, {}, {}}));
  }

  SEMICHAIN_TEST_CASE("leagues", "003", "constructions reach their bounds", "[quick]") {
    for (size_t n = 2; n <= 8; ++n) {
      for (size_t k = 2; k < n; ++k) {
        auto const L1 = league_eq1(n, k);
        auto const L2 = league_eq2(n, k);
        auto const L3 = league_eq3(n, k);
        REQUIRE(league_check(L1));
        REQUIRE(league_check(L2));
        REQUIRE(league_check(L3));
        REQUIRE(L3.interval);
        REQUIRE(L1.content() == league_lb1(n, k));
        REQUIRE(L2.content() == league_lb2(n, k));
        REQUIRE(L3.content() == league_lb_interval(n, k));
      }
    }
    REQUIRE(league_lb1(5, 3) == 28);
    REQUIRE(league_lb2(5, 3) == 18);
    REQUIRE(league_lb1(4, 2) == 3);
    REQUIRE(league_lb_interval(5, 3) == 12);
  }

  SEMICHAIN_TEST_CASE("leagues", "004", "exact search", "[quick]") {
    REQUIRE(F(4, 2) == 3);
    REQUIRE(F(4, 3) == 3);
    REQUIRE(F(5, 3) == 28);
    REQUIRE(F(6, 3) == 150);
    for (size_t n = 2; n <= 7; ++n) {
      for (size_t k = 1; k <= n; ++k) {
        if (n == 7 && k == 4) {
          continue;  // covered by the acceptance run
        }
        auto const r = max_content_exact(n, k, false, {}, n >= 7);
        REQUIRE(r.status == SearchStatus::exact);
        REQUIRE(league_check(r.witness));
        REQUIRE(r.witness.content() == r.optimum);
        REQUIRE(big(r.optimum) >= std::max(league_lb1(n, k), league_lb2(n, k)));
        REQUIRE(cached_F(n, k) == r.optimum);
        auto const ri = max_content_exact(n, k, true);
        REQUIRE(league_check(ri.witness));
        REQUIRE(ri.witness.interval);
        REQUIRE(ri.optimum <= r.optimum);
        REQUIRE(big(ri.optimum) >= league_lb_interval(n, k));
      }
    }
    REQUIRE_THROWS_AS(max_content_exact(9, 4, false), SearchTooLarge);
  }

  SEMICHAIN_TEST_CASE("leagues", "005", "closed forms agree with search", "[quick]") {
    for (size_t n = 2; n <= 7; ++n) {
      for (size_t k = 1; k <= n; ++k) {
        if (auto const c = closed_form_F(n, k)) {
          REQUIRE(*c == F(n, k));
        }
        if (auto const c = closed_form_Fstar(n, k)) {
          REQUIRE(*c == F(n, k, true));
        }
      }
    }
    REQUIRE(!closed_form_F(6, 3).has_value());
    REQUIRE(*closed_form_F(3, 2) == 1);
    REQUIRE(*closed_form_F(10, 2) == 3 * 127);
  }

  SEMICHAIN_TEST_CASE("leagues", "006", "symmetry and threads", "[quick]") {
    for (auto [n, k] : {std::pair{5, 3}, {6, 3}, {6, 4}}) {
      auto const   plain = max_content_exact(n, k, false);
      auto const   sym   = max_content_exact(n, k, false, {}, true);
      SearchBudget par;
      par.threads    = 3;
      auto const thr = max_content_exact(n, k, false, par);
      REQUIRE(plain.optimum == sym.optimum);
      REQUIRE(plain.optimum == thr.optimum);
      REQUIRE(plain.witness == thr.witness);
      REQUIRE(sym.nodes_explored <= plain.nodes_explored);
    }
    SearchBudget tiny;
    tiny.max_subsemigroups = 3;
    auto const r = max_content_exact(6, 2, false, tiny);
    REQUIRE(r.status == SearchStatus::lower_bound_only);
    REQUIRE(league_check(r.witness));
    REQUIRE(big(r.optimum) >= league_lb1(6, 2));
  }

  SEMICHAIN_TEST_CASE("leagues", "007", "vandermonde", "[quick]") {
    for (size_t n = 2; n <= 20; ++n) {
      BigInt sum = 0;
      for (size_t k = 1; k <= n; ++k) {
        sum += league_lb_interval(n, k);
      }
      REQUIRE(sum - 1 == on_lower_bound(n).raw);
    }
    REQUIRE(on_lower_bound(2).raw == -1);
    REQUIRE(on_lower_bound(2).clamped == 0);
    REQUIRE(on_lower_bound(3).clamped == 0);
    REQUIRE(on_lower_bound(4).clamped == 4);
    REQUIRE(on_lower_bound(5).clamped == 20);
  }

  SEMICHAIN_TEST_CASE("leagues", "008", "chain bounds for T_n", "[quick]") {
    REQUIRE(tn_lower_bound(5, true) == 329);
    REQUIRE(tn_lower_bound(4, true) == 23);
    REQUIRE(tn_lower_bound(3, true) == 1);
    REQUIRE(tn_lower_bound(1, true) == 0);
    REQUIRE(tn_lower_bound(2, false) == 0);
    // max(lb1, lb2) at (4, 3) is 3, so the bound total is 3*6 + 3*2 - 1
    REQUIRE(tn_lower_bound(4, false) == 23);
    REQUIRE_THROWS_AS(tn_lower_bound(8, true), MissingExactValues);
    for (size_t n = 3; n <= 7; ++n) {
      REQUIRE(tn_lower_bound(n, false) <= tn_lower_bound(n, true));
    }
  }

  SEMICHAIN_TEST_CASE("leagues", "009", "null subsemigroups from leagues", "[quick]") {
    auto const r = max_content_exact(4, 3, false);
    auto const c = build_null_from_league(4, r.witness);
    REQUIRE(c.certificate.length() == 18);
    REQUIRE(c.null_part.count() == 18);
    REQUIRE(verify_chain(c.table, c.certificate));
    // null: every product of two members drops below rank 3
    c.null_part.for_each([&](size_t f) {
      c.null_part.for_each(
          [&](size_t g) { REQUIRE(c.ideal.contains(c.table(f, g))); });
    });

    auto const r3 = max_content_exact(3, 2, false);
    auto const c3 = build_null_from_league(3, r3.witness);
    REQUIRE(c3.null_part.count() == 2);
    REQUIRE(verify_chain(c3.table, c3.certificate));

    auto const empty = build_null_from_league(4, League{4, 2, false, {}, {}});
    REQUIRE(empty.certificate.length() == 0);
    REQUIRE(verify_chain(empty.table, empty.certificate));

    REQUIRE_THROWS_AS(build_null_from_league(6, league_eq1(6, 3)), TableTooLarge);
    REQUIRE_THROWS_AS(build_null_from_league(4, League{4, 1, false, {}, {}}),
                      std::invalid_argument);
    League bad{4, 2, false, {partition_from_labels({0, 0, 1, 1})}, {{1, 3}}};
    REQUIRE_THROWS_AS(build_null_from_league(4, bad), std::invalid_argument);

    std::mt19937 rng(7);
    for (size_t i = 0; i < 10; ++i) {
      auto L = league_eq2(5, 3);
      std::shuffle(L.subsets.begin(), L.subsets.end(), rng);
      L.subsets.resize(L.subsets.size() / 2);
      auto const d = build_null_from_league(5, L);
      REQUIRE(big(d.null_part.count()) == L.content() * 6);
      REQUIRE(verify_chain(d.table, d.certificate));
    }
  }

  SEMICHAIN_TEST_CASE("leagues", "010", "rank moments", "[quick]") {
    for (size_t n = 1; n <= 8; ++n) {
      BigRat m1 = 0, m2 = 0;
      BigNat total = 0;
      for (size_t r = 1; r <= n; ++r) {
        BigNat const c = rank_count(n, r);
        total += c;
        m1 += BigRat(c * r);
        m2 += BigRat(c * r * r);
      }
      REQUIRE(total == pow(big(n), n));
      m1 /= BigRat(total);
      m2 /= BigRat(total);
      REQUIRE(rank_expectation(n) == m1);
      REQUIRE(rank_variance(n) == m2 - m1 * m1);
    }
  }

}  // namespace semichain
