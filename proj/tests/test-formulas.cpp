#include <cmath>  // for fabs

#include "test-main.hpp"

#include "semichain/classify.hpp"
#include "semichain/formulas.hpp"
#include "semichain/grouplen.hpp"

namespace semichain {

  SEMICHAIN_TEST_CASE("formulas", "001", "counting", "[quick]") {
    REQUIRE(stirling2(4, 2) == 7);
    REQUIRE(stirling2(7, 4) == 350);
    REQUIRE(stirling2(0, 0) == 1);
    REQUIRE(stirling2(3, 0) == 0);
    REQUIRE(stirling2(2, 3) == 0);
    REQUIRE(binomial(6, 3) == 20);
    REQUIRE(binomial(1, 2) == 0);
    REQUIRE(binomial(3, -1) == 0);
    REQUIRE(binomial(-1, -1) == 0);
    REQUIRE(factorial(0) == 1);
    REQUIRE(factorial(10) == 3628800);
    REQUIRE(nmaps(3, 2) == 18);
    REQUIRE(nmaps_op(3, 2) == 6);
    for (size_t n = 1; n <= 8; ++n) {
      REQUIRE(nmaps(n, n) == factorial(n));
    }
    REQUIRE(symmetric_inverse_order(3) == 34);
  }

  SEMICHAIN_TEST_CASE("formulas", "002", "rank class sizes add up", "[quick]") {
    for (size_t n = 1; n <= 8; ++n) {
      BigNat total = 0;
      for (size_t k = 1; k <= n; ++k) {
        total += nmaps(n, k);
      }
      REQUIRE(total == pow(big(n), n));
    }
    for (size_t n = 1; n <= 10; ++n) {
      BigNat total = 0;
      for (size_t k = 1; k <= n; ++k) {
        total += nmaps_op(n, k);
      }
      REQUIRE(total == binomial(2 * n - 1, n));
    }
  }

  SEMICHAIN_TEST_CASE("formulas", "003", "brandt lengths", "[quick]") {
    REQUIRE(brandt_length(0, 1, 2) == 4);
    REQUIRE(brandt_length(1, 2, 2) == 7);
    REQUIRE(brandt_length(0, 1, 1) == 1);
    for (size_t g = 1; g <= 10; ++g) {
      for (size_t j = 1; j <= 20; ++j) {
        for (size_t k = 1; k <= 20; ++k) {
          size_t const l = omega(g);
          REQUIRE(1 + brandt_length(l, g, j) + brandt_length(l, g, k)
                      + big(j * k * g)
                  == brandt_length(l, g, j + k));
        }
      }
    }
    REQUIRE(inverse_star_brandt(0, 2) == 3);
  }

  SEMICHAIN_TEST_CASE("formulas", "004", "inverse lengths", "[quick]") {
    std::vector<JClassSummary> I2 = {{1, 0, 1}, {2, 0, 1}, {1, 1, 2}};
    REQUIRE(inverse_length(I2) == 6);
    REQUIRE(inverse_star_length(I2) == 5);
    std::vector<JClassSummary> one = {{1, 3, 24}};
    REQUIRE(inverse_length(one) == 3);
    REQUIRE(named_inverse_monoid_length(InverseMonoid::I, 3, false) == 25);
    REQUIRE(named_inverse_monoid_length(InverseMonoid::I, 4, false) == 116);
    REQUIRE(named_inverse_monoid_length(InverseMonoid::Istar, 4, false) == 180);
    REQUIRE(named_inverse_monoid_length(InverseMonoid::POPI, 3, false) == 24);
    REQUIRE(named_inverse_monoid_length(InverseMonoid::POI, 7, true) == 247);
    REQUIRE(named_inverse_monoid_length(InverseMonoid::POI, 5, true) == 57);
    REQUIRE(named_inverse_monoid_length(InverseMonoid::I, 2, true) == 5);
    REQUIRE(named_inverse_monoid_length(InverseMonoid::I, 3, true) == 16);
    for (size_t n = 1; n <= 9; ++n) {
      // trivial groups: class i contributes 2 C(n, i) - 1
      REQUIRE(named_inverse_monoid_length(InverseMonoid::POI, n, true)
              == pow(big(2), n + 1) - n - 2);
    }
  }

  SEMICHAIN_TEST_CASE("formulas", "005", "summaries read off I_n", "[quick]") {
    for (size_t n = 1; n <= 3; ++n) {
      auto const S = test::make(("I:" + std::to_string(n)).c_str());
      auto const g = greens_structure(S);
      std::vector<JClassSummary> classes;
      for (size_t c = 0; c < g.number_of_j_classes; ++c) {
        // the H-class of an idempotent in J
        size_t e = S.size();
        g.j_class_members[c].for_each([&](size_t x) {
          if (e == S.size() && S(x, x) == x) {
            e = x;
          }
        });
        ElementSet H(S.size());
        for (size_t x = 0; x < S.size(); ++x) {
          if (g.h_class_of[x] == g.h_class_of[e]) {
            H.insert(x);
          }
        }
        auto const G = subtable(S, H);
        classes.push_back({big(g.l_classes_in(c)),
                           exact_group_length(G),
                           big(G.size())});
      }
      REQUIRE(inverse_length(classes)
              == named_inverse_monoid_length(InverseMonoid::I, n, false));
      REQUIRE(inverse_star_length(classes)
              == named_inverse_monoid_length(InverseMonoid::I, n, true));
    }
  }

  SEMICHAIN_TEST_CASE("formulas", "006", "completely regular and free bands", "[quick]") {
    std::vector<size_t> zeros3 = {0, 0, 0};
    REQUIRE(completely_regular_length(4, 4, zeros3) == 4);
    std::vector<size_t> zero1 = {0};
    REQUIRE(completely_regular_length(3, 2, zero1) == 3);
    std::vector<size_t> l = {5};
    REQUIRE(completely_regular_length(1, 1, l) == 5);
    REQUIRE(band_jclass_count(1) == 1);
    REQUIRE(band_jclass_count(2) == 2);
    REQUIRE(band_jclass_count(3) == 12);
    REQUIRE(free_band_length(1) == 0);
    REQUIRE(free_band_length(2) == 4);
    REQUIRE(free_band_length(4) == 1264);
    REQUIRE(free_band_length(6) == BigNat("33022614177128"));
  }

  SEMICHAIN_TEST_CASE("formulas", "007", "general linear", "[quick]") {
    REQUIRE(gaussian_binomial(2, 1, 2) == 3);
    REQUIRE(gaussian_binomial(4, 2, 2) == 35);
    REQUIRE(gaussian_binomial(3, 0, 5) == 1);
    REQUIRE(gl_order(2, 2) == 6);
    REQUIRE(gl_order(3, 2) == 168);
    REQUIRE(gls_order(2, 3) == 81);
    for (size_t n = 0; n <= 5; ++n) {
      for (size_t q : {2, 3, 4, 5}) {
        BigNat total = 0;
        for (size_t k = 0; k <= n; ++k) {
          auto const g = gaussian_binomial(n, k, q);
          total += g * g * gl_order(k, q);
        }
        REQUIRE(total == gls_order(n, q));
      }
    }
    auto const b22 = gls_lower_bound(2, 2);
    REQUIRE(b22.raw == BigRat(-3, 8));
    REQUIRE(b22.clamped == 0);
    REQUIRE(gls_lower_bound(1, 2).raw == BigRat(-7, 8));
    auto const b32 = gls_lower_bound(3, 2);
    REQUIRE(b32.raw == BigRat(39, 4));
    REQUIRE(b32.clamped == 9);
  }

  SEMICHAIN_TEST_CASE("formulas", "008", "pentagonal series", "[quick]") {
    auto const c2 = c_q(2, 1e-9);
    REQUIRE(std::fabs(c2.value - 0.288788095) < 1e-9);
    REQUIRE(c2.error_bound < 1e-9);
    auto const c10 = c_q(10, 1e-6);
    REQUIRE(std::fabs(c10.value - 0.890010) <= 1e-6);
    for (size_t q = 2; q <= 20; ++q) {
      auto const c = c_q(q, 1e-12);
      REQUIRE(c.value < 1);
      double prod = 1;
      for (size_t k = 1; k < 200; ++k) {
        prod *= 1 - std::pow(double(q), -double(k));
      }
      REQUIRE(std::fabs(prod - c.value) <= c.error_bound + 1e-15);
    }
  }

  SEMICHAIN_TEST_CASE("formulas", "009", "null subsemigroups of T_n", "[quick]") {
    auto const n4 = tn_null_max_order(4);
    REQUIRE(n4.order == 18);
    REQUIRE(n4.argmax_k == 3);
    auto const n3 = tn_null_max_order(3);
    REQUIRE(n3.order == 2);
    REQUIRE(n3.argmax_k == 2);
    auto const n2 = tn_null_max_order(2);
    REQUIRE(n2.order == 0);
    REQUIRE(n2.argmax_k == 1);
  }

  SEMICHAIN_TEST_CASE("formulas", "010", "l(I_n) / |I_n| ratio", "[quick]") {
    for (size_t n = 6; n <= 12; ++n) {
      BigRat r(named_inverse_monoid_length(InverseMonoid::I, n, false),
               symmetric_inverse_order(n));
      r.canonicalize();
      REQUIRE(r > BigRat(2, 5));
      REQUIRE(r < BigRat(11, 20));
    }
  }

}  // namespace semichain
