// Constructors for the concrete semigroups studied by this library.

#ifndef SEMICHAIN_FAMILIES_HPP_
#define SEMICHAIN_FAMILIES_HPP_

#include <cstddef>      // for size_t
#include <span>         // for span
#include <string>       // for string
#include <string_view>  // for string_view
#include <variant>      // for variant
#include <vector>       // for vector

#include "bignum.hpp"
#include "cayley-table.hpp"

namespace semichain {

  //! Tables larger than this are refused by build_family unless a larger
  //! cap is passed explicitly. T_5 (3125 elements) fits, T_6 does not.
  constexpr size_t default_size_cap = 10'000;

  namespace family {
    //! All maps {1..n} -> {1..n}; composition is left to right, so the
    //! product fg means "apply f, then g".
    struct FullTransformation {
      size_t n;
    };
    //! Order-preserving (x <= y implies f(x) <= f(y)) members of T_n.
    struct OrderPreserving {
      size_t n;
    };
    //! All partial injections of {1..n}.
    struct SymmetricInverse {
      size_t n;
    };
    //! Partial injections that are order-preserving on their domain.
    struct POI {
      size_t n;
    };
    //! Partial injections whose image sequence, read along the domain in
    //! increasing order, is a cyclic rotation of an increasing sequence.
    struct POPI {
      size_t n;
    };
    //! B(G, n): triples (i, g, j) plus a zero, with
    //! (i,g,j)(k,h,l) = (i,gh,l) when j = k and 0 otherwise.
    struct Brandt {
      CayleyTable group;
      size_t      n;
    };
    //! M[I, G, L; P] without zero: (i,g,l)(j,h,m) = (i, g P[l][j] h, m).
    //! \c matrix has \c cols rows of \c rows entries each (indices into
    //! the group table); an empty matrix means every entry is the identity.
    struct ReesMatrixOverGroup {
      CayleyTable                      group;
      size_t                           rows;
      size_t                           cols;
      std::vector<std::vector<size_t>> matrix;
    };
    //! m elements, element 0 is the zero and every product equals it.
    struct Null {
      size_t m;
    };
    struct CyclicGroup {
      size_t n;
    };
    struct SymmetricGroup {
      size_t n;
    };
    //! <s | s^(index + period) = s^index>, with m + r - 1 elements.
    struct Monogenic {
      size_t index;
      size_t period;
    };
    //! The free band on {a, b}: a, b, ab, ba, aba, bab.
    struct FreeBand2 {};
  }  // namespace family

  using FamilySpec = std::variant<family::FullTransformation,
                                  family::OrderPreserving,
                                  family::SymmetricInverse,
                                  family::POI,
                                  family::POPI,
                                  family::Brandt,
                                  family::ReesMatrixOverGroup,
                                  family::Null,
                                  family::CyclicGroup,
                                  family::SymmetricGroup,
                                  family::Monogenic,
                                  family::FreeBand2>;

  //! Builds the table of \p spec. Throws SizeCapExceeded if the semigroup
  //! would have more than \p cap elements, UnsupportedFamily if the spec
  //! is invalid (zero sizes, a non-group where a group is required, ...).
  CayleyTable build_family(FamilySpec const& spec,
                           size_t            cap = default_size_cap);

  //! Number of elements build_family would produce, without building.
  BigNat family_size(FamilySpec const& spec);

  //! Parses the compact grammar used on the command line:
  //! T:n, O:n, I:n, POI:n, POPI:n, brandt:<group>,<n>, null:m, mono:m,r,
  //! cyc:n, sym:n, fb2, with <group> one of triv, c<k>, s<k>.
  FamilySpec parse_family(std::string_view text);

  //! Index in build_family(FullTransformation{n}) of the map sending
  //! point i to images[i] (both 0-based): the maps are listed in
  //! lexicographic order of their image tuples.
  size_t full_transformation_index(std::span<size_t const> images);

  //! Inverse of parse_family where possible; Rees matrix semigroups are
  //! described but not re-parseable.
  std::string describe(FamilySpec const& spec);

}  // namespace semichain

#endif  // SEMICHAIN_FAMILIES_HPP_
