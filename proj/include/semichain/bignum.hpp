// Arbitrary precision naturals and rationals, backed by GMP.

#ifndef SEMICHAIN_BIGNUM_HPP_
#define SEMICHAIN_BIGNUM_HPP_

#include <gmpxx.h>

#include <cstdint>  // for uint64_t
#include <string>   // for string

namespace semichain {

  //! Exact natural number. Subtraction below zero is a caller error; the
  //! few formulas that can go negative use BigInt or BigRat instead.
  using BigNat = mpz_class;
  using BigInt = mpz_class;
  //! Exact rational, always kept canonical (reduced, positive denominator).
  using BigRat = mpq_class;

  inline BigNat big(uint64_t x) {
    BigNat r;
    mpz_import(r.get_mpz_t(), 1, -1, sizeof(x), 0, 0, &x);
    return r;
  }

  inline BigNat pow(BigNat const& base, unsigned long exp) {
    BigNat r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
  }

  inline std::string to_string(BigNat const& x) {
    return x.get_str();
  }

  inline std::string to_string(BigRat const& x) {
    return x.get_str();
  }

  //! Exact integer to uint64_t; throws std::overflow_error when it does not
  //! fit.
  uint64_t to_u64(BigNat const& x);

  //! Largest integer not exceeding \p x.
  BigInt floor(BigRat const& x);

}  // namespace semichain

#endif  // SEMICHAIN_BIGNUM_HPP_
