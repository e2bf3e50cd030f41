// Structural predicates of finite semigroups.

#ifndef SEMICHAIN_CLASSIFY_HPP_
#define SEMICHAIN_CLASSIFY_HPP_

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <utility>   // for pair
#include <vector>    // for vector

#include "cayley-table.hpp"

namespace semichain {

  struct Classification {
    bool regular            = false;
    bool inverse            = false;
    bool completely_regular = false;
    bool band               = false;
    bool null               = false;
    bool group              = false;
    //! inverse_of[x] is the unique inverse of x; empty unless \c inverse.
    std::vector<size_t> inverse_of;
  };

  //! Decides each predicate directly from its definition.
  Classification classify(CayleyTable const& S);

  //! Every row and every column of the table is a permutation.
  bool is_group(CayleyTable const& S);

  //! The two-sided identity, if there is one.
  std::optional<size_t> find_identity(CayleyTable const& S);

  std::vector<size_t> idempotents(CayleyTable const& S);

  //! The least m, r >= 1 with x^(m + r) = x^m.
  std::pair<size_t, size_t> monogenic_index_period(CayleyTable const& S,
                                                   size_t             x);

}  // namespace semichain

#endif  // SEMICHAIN_CLASSIFY_HPP_
