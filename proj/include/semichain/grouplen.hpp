// Lengths of subgroup chains in finite groups.

#ifndef SEMICHAIN_GROUPLEN_HPP_
#define SEMICHAIN_GROUPLEN_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t
#include <string>   // for string

#include "cayley-table.hpp"
#include "element-set.hpp"

namespace semichain {

  //! Number of prime factors of n counted with multiplicity; omega(1) = 0.
  size_t omega(uint64_t n);

  //! Number of ones in the binary expansion of n.
  size_t binary_weight(uint64_t n);

  //! Length of the symmetric group S_n: ceil(3n / 2) - b(n) - 1, where b(n)
  //! is binary_weight(n). length_symmetric(0) = 0 (the trivial group).
  size_t length_symmetric(size_t n);

  enum class GroupLengthMethod { symmetric_formula, soluble_omega, exact_search };

  std::string to_string(GroupLengthMethod m);

  struct GroupLengthResult {
    size_t            length;
    GroupLengthMethod method;
  };

  //! l(G) for a group given by its table: Omega(|G|) when G is soluble,
  //! otherwise an exhaustive search of the subgroup lattice which throws
  //! SearchTooLarge after \p max_subgroups subgroups. Throws NotAGroup.
  GroupLengthResult group_length(CayleyTable const& G,
                                 size_t             max_subgroups = 200'000);

  //! Longest subgroup chain by exhaustive search, whatever G is.
  size_t exact_group_length(CayleyTable const& G,
                            size_t             max_subgroups = 200'000);

  //! Subgroup generated by the commutators.
  ElementSet derived_subgroup(CayleyTable const& G);

  //! True if the derived series reaches the trivial group.
  bool is_soluble(CayleyTable const& G);

  bool is_normal_subgroup(CayleyTable const& G, ElementSet const& N);

  //! G / N on the cosets of N, numbered by least member. Throws NotAGroup
  //! unless N is a normal subgroup.
  CayleyTable quotient_group(CayleyTable const& G, ElementSet const& N);

}  // namespace semichain

#endif  // SEMICHAIN_GROUPLEN_HPP_
