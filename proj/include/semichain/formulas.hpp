// Exact closed forms for lengths of semigroups and the counting functions
// they are built from. Everything here is exact; the only floating point
// value is the pentagonal series approximation c_q.

#ifndef SEMICHAIN_FORMULAS_HPP_
#define SEMICHAIN_FORMULAS_HPP_

#include <cstddef>  // for size_t
#include <span>     // for span
#include <string>   // for string
#include <vector>   // for vector

#include "bignum.hpp"

namespace semichain {

  ////////////////////////////////////////////////////////////////////////
  // Counting
  ////////////////////////////////////////////////////////////////////////

  //! Stirling numbers of the second kind; S(0, 0) = 1.
  BigNat stirling2(size_t n, size_t k);

  //! Binomial coefficient, zero when k < 0 or k > n (n >= 0).
  BigNat binomial(long long n, long long k);

  BigNat factorial(size_t n);

  //! N(n, k) = S(n, k) C(n, k) k!, the number of rank k maps in T_n.
  BigNat nmaps(size_t n, size_t k);

  //! N*(n, k) = C(n, k) C(n - 1, k - 1), the number of rank k maps in O_n.
  BigNat nmaps_op(size_t n, size_t k);

  //! |I_n| = sum_i C(n, i)^2 i!.
  BigNat symmetric_inverse_order(size_t n);

  ////////////////////////////////////////////////////////////////////////
  // Inverse semigroups
  ////////////////////////////////////////////////////////////////////////

  //! l(B(G, n)) = n(l(G) + 1) + n(n - 1)|G| / 2 + n - 1.
  BigNat brandt_length(size_t lG, BigNat const& orderG, BigNat const& n);

  //! Data of one J-class of an inverse semigroup: the number of L-classes
  //! (equal to the number of R-classes) and a maximal subgroup.
  struct JClassSummary {
    BigNat n_lr;
    size_t group_length;
    BigNat group_order;
  };

  //! l(S) = -1 + sum of brandt_length over the J-classes.
  BigNat inverse_length(std::span<JClassSummary const> classes);

  //! l*(B(G, n)) = n(l(G) + 2) - 1.
  BigNat inverse_star_brandt(size_t lG, BigNat const& n);

  //! l*(S) = -1 + sum of inverse_star_brandt over the J-classes.
  BigNat inverse_star_length(std::span<JClassSummary const> classes);

  enum class InverseMonoid { I, Istar, POI, POPI };

  std::string to_string(InverseMonoid m);

  //! J-class data of the named monoid on an n-element set or chain, in
  //! increasing rank.
  std::vector<JClassSummary> named_inverse_monoid_classes(InverseMonoid m,
                                                          size_t        n);

  BigNat named_inverse_monoid_length(InverseMonoid m, size_t n, bool starred);

  ////////////////////////////////////////////////////////////////////////
  // Completely regular semigroups and free bands
  ////////////////////////////////////////////////////////////////////////

  //! m + n - r - 1 + sum of the group lengths, where m, n, r count L-, R-
  //! and J-classes and \p group_lengths has one entry per J-class.
  BigNat completely_regular_length(BigNat const&            m,
                                   BigNat const&            n,
                                   std::span<size_t const> group_lengths);

  //! a_k = k prod_{i=1}^{k-2} (k - i)^(2^i), the number of L-classes (and
  //! of R-classes) in a J-class of a free band with content of size k.
  BigNat band_jclass_count(size_t k);

  //! l(B_n) = 2 sum_k C(n, k) a_k - 2^n.
  BigNat free_band_length(size_t n);

  ////////////////////////////////////////////////////////////////////////
  // General linear semigroups
  ////////////////////////////////////////////////////////////////////////

  //! Number of k-dimensional subspaces of GF(q)^n.
  BigNat gaussian_binomial(size_t n, size_t k, size_t q);

  //! |GL(n, q)| = prod_{k=1}^n (q^n - q^(n-k)).
  BigNat gl_order(size_t n, size_t q);

  //! q^(n^2).
  BigNat gls_order(size_t n, size_t q);

  struct Approximation {
    double value;
    //! |value - true value| <= error_bound
    double error_bound;
    size_t terms;
  };

  //! Partial sum of sum_{k in Z} (-1)^k q^(-k(3k-1)/2) = prod_{k>=1} (1 -
  //! q^-k), summed exactly until the tail is provably below \p tolerance.
  Approximation c_q(size_t q, double tolerance);

  struct GlsBound {
    //! (1 - 1/q)^2 q^-n (|GLS(n,q)| - |GL(n,q)|) - 1
    BigRat raw;
    //! max(floor(raw), 0)
    BigNat clamped;
  };

  GlsBound gls_lower_bound(size_t n, size_t q);

  ////////////////////////////////////////////////////////////////////////
  // Null subsemigroups of T_n
  ////////////////////////////////////////////////////////////////////////

  struct NullOrder {
    BigNat order;
    size_t argmax_k;
  };

  //! max_k (n - k) N(n - 1, k - 1) and the least maximising k. The order is
  //! also a lower bound for log2 of the number of subsemigroups of T_n and
  //! for the minimal generating number d(n).
  NullOrder tn_null_max_order(size_t n);

}  // namespace semichain

#endif  // SEMICHAIN_FORMULAS_HPP_
