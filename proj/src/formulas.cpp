#include "semichain/formulas.hpp"

#include <stdexcept>  // for invalid_argument

#include "semichain/grouplen.hpp"

namespace semichain {

  BigNat stirling2(size_t n, size_t k) {
    if (k > n) {
      return 0;
    }
    // row by row, S(i, j) = j S(i-1, j) + S(i-1, j-1)
    std::vector<BigNat> row(k + 1, 0);
    row[0] = 1;
    for (size_t i = 1; i <= n; ++i) {
      for (size_t j = std::min(i, k); j >= 1; --j) {
        row[j] = big(j) * row[j] + row[j - 1];
      }
      row[0] = 0;
    }
    return row[k];
  }

  BigNat binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) {
      return 0;
    }
    BigNat r;
    mpz_bin_uiui(r.get_mpz_t(),
                 static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
  }

  BigNat factorial(size_t n) {
    BigNat r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
  }

  BigNat nmaps(size_t n, size_t k) {
    return stirling2(n, k) * binomial(n, k) * factorial(k);
  }

  BigNat nmaps_op(size_t n, size_t k) {
    if (k == 0) {
      return n == 0 ? 1 : 0;
    }
    return binomial(n, k) * binomial(n - 1, k - 1);
  }

  BigNat symmetric_inverse_order(size_t n) {
    BigNat total = 0;
    for (size_t i = 0; i <= n; ++i) {
      BigNat const c = binomial(n, i);
      total += c * c * factorial(i);
    }
    return total;
  }

  BigNat brandt_length(size_t lG, BigNat const& orderG, BigNat const& n) {
    if (n < 1) {
      throw std::invalid_argument("brandt_length requires n >= 1");
    }
    return n * (lG + 1) + n * (n - 1) / 2 * orderG + n - 1;
  }

  BigNat inverse_length(std::span<JClassSummary const> classes) {
    if (classes.empty()) {
      throw std::invalid_argument("inverse_length requires a J-class");
    }
    BigNat total = 0;
    for (auto const& c : classes) {
      total += brandt_length(c.group_length, c.group_order, c.n_lr);
    }
    return total - 1;
  }

  BigNat inverse_star_brandt(size_t lG, BigNat const& n) {
    if (n < 1) {
      throw std::invalid_argument("inverse_star_brandt requires n >= 1");
    }
    return n * (lG + 2) - 1;
  }

  BigNat inverse_star_length(std::span<JClassSummary const> classes) {
    if (classes.empty()) {
      throw std::invalid_argument("inverse_star_length requires a J-class");
    }
    BigNat total = 0;
    for (auto const& c : classes) {
      total += inverse_star_brandt(c.group_length, c.n_lr);
    }
    return total - 1;
  }

  std::string to_string(InverseMonoid m) {
    switch (m) {
      case InverseMonoid::I:
        return "I";
      case InverseMonoid::Istar:
        return "Istar";
      case InverseMonoid::POI:
        return "POI";
      case InverseMonoid::POPI:
        return "POPI";
    }
    return "?";
  }

  std::vector<JClassSummary> named_inverse_monoid_classes(InverseMonoid m,
                                                          size_t        n) {
    std::vector<JClassSummary> out;
    switch (m) {
      case InverseMonoid::I:
        // rank i: C(n, i) L-classes, maximal subgroup S_i
        for (size_t i = 0; i <= n; ++i) {
          out.push_back({binomial(n, i), length_symmetric(i), factorial(i)});
        }
        break;
      case InverseMonoid::Istar:
        // i blocks: S(n, i) L-classes, maximal subgroup S_i
        for (size_t i = 1; i <= n; ++i) {
          out.push_back({stirling2(n, i), length_symmetric(i), factorial(i)});
        }
        break;
      case InverseMonoid::POI:
        for (size_t i = 0; i <= n; ++i) {
          out.push_back({binomial(n, i), 0, 1});
        }
        break;
      case InverseMonoid::POPI:
        // rank d >= 1: cyclic group of order d; rank 0: trivial
        for (size_t d = 0; d <= n; ++d) {
          size_t const order = d == 0 ? 1 : d;
          out.push_back({binomial(n, d), omega(order), big(order)});
        }
        break;
    }
    return out;
  }

  BigNat named_inverse_monoid_length(InverseMonoid m, size_t n, bool starred) {
    auto const classes = named_inverse_monoid_classes(m, n);
    return starred ? inverse_star_length(classes) : inverse_length(classes);
  }

  BigNat completely_regular_length(BigNat const&           m,
                                   BigNat const&           n,
                                   std::span<size_t const> group_lengths) {
    BigInt total = m + n - static_cast<unsigned long>(group_lengths.size()) - 1;
    for (size_t l : group_lengths) {
      total += l;
    }
    if (total < 0) {
      throw std::invalid_argument("inconsistent class counts");
    }
    return total;
  }

  BigNat band_jclass_count(size_t k) {
    if (k == 0) {
      throw std::invalid_argument("band_jclass_count requires k >= 1");
    }
    BigNat r = big(k);
    for (size_t i = 1; i + 2 <= k; ++i) {
      r *= pow(big(k - i), 1UL << i);
    }
    return r;
  }

  BigNat free_band_length(size_t n) {
    BigNat total = 0;
    for (size_t k = 1; k <= n; ++k) {
      total += binomial(n, k) * band_jclass_count(k);
    }
    return 2 * total - pow(big(2), n);
  }

  BigNat gaussian_binomial(size_t n, size_t k, size_t q) {
    if (k > n) {
      return 0;
    }
    BigNat num = 1, den = 1;
    BigNat const Q = big(q);
    for (size_t i = 0; i < k; ++i) {
      num *= pow(Q, n - i) - 1;
      den *= pow(Q, i + 1) - 1;
    }
    return num / den;
  }

  BigNat gl_order(size_t n, size_t q) {
    BigNat       r  = 1;
    BigNat const qn = pow(big(q), n);
    for (size_t k = 1; k <= n; ++k) {
      r *= qn - pow(big(q), n - k);
    }
    return r;
  }

  BigNat gls_order(size_t n, size_t q) {
    return pow(big(q), n * n);
  }

  Approximation c_q(size_t q, double tolerance) {
    if (q < 2 || !(tolerance > 0)) {
      throw std::invalid_argument("c_q requires q >= 2 and tolerance > 0");
    }
    // Exponents of the nonzero terms in increasing order are the generalised
    // pentagonal numbers j(3j - 1)/2, j(3j + 1)/2 for j = 1, 2, ..., both
    // with sign (-1)^j. The remaining terms are bounded in absolute value
    // by the geometric tail sum_{e >= next} q^-e <= 2 q^-next.
    BigRat       sum = 1;
    size_t       terms = 1;
    BigNat const Q     = big(q);
    auto tail_bound = [&](size_t e) {
      BigRat t(BigNat(2), pow(Q, e));
      t.canonicalize();
      return t;
    };
    BigRat const tol(tolerance);
    for (size_t j = 1;; ++j) {
      size_t const e1 = j * (3 * j - 1) / 2;
      if (tail_bound(e1) < tol) {
        return {sum.get_d(), tail_bound(e1).get_d(), terms};
      }
      for (size_t e : {e1, j * (3 * j + 1) / 2}) {
        BigRat term(BigNat(1), pow(Q, e));
        term.canonicalize();
        if (j % 2 == 1) {
          sum -= term;
        } else {
          sum += term;
        }
        ++terms;
      }
    }
  }

  GlsBound gls_lower_bound(size_t n, size_t q) {
    if (n < 1 || q < 2) {
      throw std::invalid_argument("gls_lower_bound requires n >= 1, q >= 2");
    }
    BigRat factor(BigNat(q - 1), BigNat(q));
    factor.canonicalize();
    BigRat scale(BigNat(1), pow(big(q), n));
    scale.canonicalize();
    BigRat raw = factor * factor * scale
                 * BigRat(gls_order(n, q) - gl_order(n, q))
                 - 1;
    BigInt const fl = floor(raw);
    return {raw, fl < 0 ? BigNat(0) : BigNat(fl)};
  }

  NullOrder tn_null_max_order(size_t n) {
    if (n < 2) {
      throw std::invalid_argument("tn_null_max_order requires n >= 2");
    }
    NullOrder best{0, 1};
    for (size_t k = 1; k <= n; ++k) {
      BigNat const v = big(n - k) * nmaps(n - 1, k - 1);
      if (v > best.order) {
        best = {v, k};
      }
    }
    return best;
  }

}  // namespace semichain
