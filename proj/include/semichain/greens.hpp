// Green's relations, subsemigroup closure, ideals and their quotients.

#ifndef SEMICHAIN_GREENS_HPP_
#define SEMICHAIN_GREENS_HPP_

#include <cstddef>  // for size_t
#include <span>     // for span
#include <vector>   // for vector

#include "cayley-table.hpp"
#include "element-set.hpp"

namespace semichain {

  //! The smallest subsemigroup of \p S containing \p seed.
  ElementSet closure(CayleyTable const& S, ElementSet const& seed);

  //! closure(base + extra) for a \p base that is already closed. Cheaper
  //! than closure() since base * base is never recomputed.
  ElementSet extend_closure(CayleyTable const&      S,
                            ElementSet              base,
                            std::span<size_t const> extra);

  //! L, R, H and J classes of a finite semigroup, together with the partial
  //! order on J-classes.
  //!
  //! Classes are numbered in order of their least element, so class 0 is
  //! always the class of element 0. Computed as the strongly connected
  //! components of the right, left, and two-sided Cayley graphs, which
  //! coincide with the classes defined through S^1 x, x S^1 and S^1 x S^1.
  struct GreensStructure {
    std::vector<size_t> l_class_of;
    std::vector<size_t> r_class_of;
    std::vector<size_t> h_class_of;
    std::vector<size_t> j_class_of;

    size_t number_of_l_classes = 0;
    size_t number_of_r_classes = 0;
    size_t number_of_h_classes = 0;
    size_t number_of_j_classes = 0;

    std::vector<ElementSet> j_class_members;

    //! j_below[c] holds the J-classes strictly below class c.
    std::vector<ElementSet> j_below;

    //! J_a < J_b in the J-order.
    bool j_less(size_t a, size_t b) const {
      return j_below[b].contains(a);
    }

    //! J-classes not below any other.
    std::vector<size_t> maximal_j_classes() const;

    //! Number of distinct L-classes (resp. R-classes) inside J-class c.
    size_t l_classes_in(size_t c) const;
    size_t r_classes_in(size_t c) const;
  };

  GreensStructure greens_structure(CayleyTable const& S);

  //! J union {0}, with products leaving J sent to 0. The members of J keep
  //! their relative order and the zero is the last element.
  CayleyTable principal_factor(CayleyTable const&     S,
                               GreensStructure const& greens,
                               size_t                 j_class);

  bool is_ideal(CayleyTable const& S, ElementSet const& I);

  //! (S \ I) union {0}, zero last. Throws NotAnIdeal unless \p I is a
  //! nonempty two-sided ideal.
  CayleyTable rees_quotient(CayleyTable const& S, ElementSet const& I);

  //! All nonempty ideals of S, as unions of J-order down-sets; only meant
  //! for small tables (the count can be exponential).
  std::vector<ElementSet> all_ideals(CayleyTable const& S);

}  // namespace semichain

#endif  // SEMICHAIN_GREENS_HPP_
