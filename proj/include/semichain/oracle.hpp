// Exact lengths by exhaustive search of the subsemigroup poset, and the
// ideal-by-ideal decomposition that avoids the search where possible.

#ifndef SEMICHAIN_ORACLE_HPP_
#define SEMICHAIN_ORACLE_HPP_

#include <cstddef>  // for size_t
#include <string>   // for string
#include <vector>   // for vector

#include "budget.hpp"
#include "cayley-table.hpp"
#include "element-set.hpp"

namespace semichain {

  enum class ChainKind { subsemigroup, inverse_subsemigroup };

  std::string to_string(ChainKind k);

  //! A strictly increasing sequence of nonempty subsemigroups.
  struct ChainCertificate {
    ChainKind               kind = ChainKind::subsemigroup;
    std::vector<ElementSet> subsets;

    //! Number of subsets minus one.
    size_t length() const {
      return subsets.empty() ? 0 : subsets.size() - 1;
    }

    friend bool operator==(ChainCertificate const&,
                           ChainCertificate const&) = default;
  };

  struct ChainResult {
    size_t           length = 0;
    ChainCertificate witness;
    //! Closed subsets visited; 0 when a closed form short-circuited.
    size_t enumerated = 0;
  };

  //! l(S) with a witness chain. Enumerates every nonempty subsemigroup,
  //! then finds a longest path through the containment order. The witness
  //! is the lexicographically least longest chain, whatever the number of
  //! threads. Null tables with more than 20 elements skip the search.
  //! Throws BudgetExceeded.
  ChainResult longest_chain_exact(CayleyTable const&  S,
                                  SearchBudget const& budget = {});

  //! l*(S), the same search restricted to inverse subsemigroups. Throws
  //! NotInverse and BudgetExceeded.
  ChainResult longest_inverse_chain_exact(CayleyTable const&  S,
                                          SearchBudget const& budget = {});

  struct ChainCheck {
    bool        ok = true;
    std::string violation;

    explicit operator bool() const {
      return ok;
    }
  };

  //! Checks that every subset is a nonempty subsemigroup (closed under
  //! inverses too, for inverse chains) and that inclusions are strict.
  ChainCheck verify_chain(CayleyTable const& S, ChainCertificate const& c);

  //! One step of decompose_length.
  struct DecompositionNode {
    std::string                    description;
    std::string                    method;
    size_t                         length = 0;
    std::vector<DecompositionNode> children;
  };

  struct Decomposition {
    size_t            length = 0;
    DecompositionNode trace;
  };

  //! l(S) as a sum over principal factors. Regular semigroups are summed
  //! directly; otherwise a maximal J-class is split off and the rest
  //! handled recursively. Each principal factor is matched against the
  //! null, group, completely simple and Brandt cases, and anything else is
  //! searched within \p budget. Throws NotDecomposable when that fails.
  Decomposition decompose_length(CayleyTable const&  S,
                                 SearchBudget const& budget = {});

}  // namespace semichain

#endif  // SEMICHAIN_ORACLE_HPP_
