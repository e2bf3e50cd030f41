#include "semichain/bignum.hpp"

#include <stdexcept>  // for overflow_error

namespace semichain {

  uint64_t to_u64(BigNat const& x) {
    if (sgn(x) < 0 || mpz_sizeinbase(x.get_mpz_t(), 2) > 64) {
      throw std::overflow_error("value " + x.get_str()
                                + " does not fit in 64 bits");
    }
    uint64_t r     = 0;
    size_t   count = 0;
    mpz_export(&r, &count, -1, sizeof(r), 0, 0, x.get_mpz_t());
    return r;
  }

  BigInt floor(BigRat const& x) {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
  }

}  // namespace semichain
