// Leagues: families of k-partitions and k-subsets with no transversal
// incidences, their maximal contents F(n, k) and F*(n, k), and the null
// subsemigroups of T_n they give rise to.

#ifndef SEMICHAIN_LEAGUES_HPP_
#define SEMICHAIN_LEAGUES_HPP_

#include <cstddef>     // for size_t
#include <functional>  // for function
#include <optional>    // for optional
#include <string>      // for string
#include <vector>      // for vector

#include "bignum.hpp"
#include "budget.hpp"
#include "cayley-table.hpp"
#include "element-set.hpp"
#include "oracle.hpp"

namespace semichain {

  //! A partition of {1, ..., n}. Blocks are sorted, and listed in order of
  //! their least points.
  struct SetPartition {
    size_t                           n = 0;
    std::vector<std::vector<size_t>> blocks;

    size_t block_count() const {
      return blocks.size();
    }

    //! block_of()[i - 1] is the block containing point i.
    std::vector<size_t> block_of() const;

    bool is_interval() const;

    friend bool operator==(SetPartition const&, SetPartition const&) = default;
  };

  //! Builds the partition whose point i lies in block label[i - 1].
  SetPartition partition_from_labels(std::vector<size_t> const& label);

  //! Calls \p f on every k-partition of {1..n} (restricted growth strings
  //! in lexicographic order) or, if \p interval, every partition into k
  //! intervals (divider positions in lexicographic order).
  void for_each_partition(size_t                                         n,
                          size_t                                         k,
                          bool                                           interval,
                          std::function<void(SetPartition const&)> const& f);

  std::vector<SetPartition> enumerate_partitions(size_t n,
                                                 size_t k,
                                                 bool   interval);

  //! All k-subsets of {1..n} in lexicographic order.
  std::vector<std::vector<size_t>> k_subsets(size_t n, size_t k);

  //! A meets every block of Q exactly once.
  bool is_transversal(std::vector<size_t> const& A, SetPartition const& Q);

  struct League {
    size_t                           n        = 0;
    size_t                           k        = 0;
    bool                             interval = false;
    std::vector<SetPartition>        partitions;
    std::vector<std::vector<size_t>> subsets;

    BigNat content() const {
      return big(partitions.size()) * big(subsets.size());
    }

    friend bool operator==(League const&, League const&) = default;
  };

  //! No member of L.subsets is a transversal of a member of L.partitions;
  //! also checks that every member has the right shape.
  bool league_check(League const& L);

  //! Partitions with {n} as a block; subsets avoiding n.
  League league_eq1(size_t n, size_t k);
  //! Partitions with 1 and 2 in one block; subsets containing 1 and 2.
  League league_eq2(size_t n, size_t k);
  //! Interval partitions ending in the block {n}; subsets avoiding n.
  League league_eq3(size_t n, size_t k);

  //! C(n - 1, k) S(n - 1, k - 1), the content of league_eq1.
  BigNat league_lb1(size_t n, size_t k);
  //! C(n - 2, k - 2) S(n - 1, k), the content of league_eq2.
  BigNat league_lb2(size_t n, size_t k);
  //! C(n - 1, k) C(n - 2, n - k), the content of league_eq3.
  BigNat league_lb_interval(size_t n, size_t k);

  //! F(n, k) for k in {1, 2, n - 1, n} (k = 2 only when n > 3).
  std::optional<BigNat> closed_form_F(size_t n, size_t k);

  //! F*(n, k) for k in {1, 2, n - 1, n}.
  std::optional<BigNat> closed_form_Fstar(size_t n, size_t k);

  enum class SearchStatus { exact, lower_bound_only };

  std::string to_string(SearchStatus s);

  struct LeagueSearchResult {
    size_t       optimum = 0;
    League       witness;
    SearchStatus status         = SearchStatus::exact;
    size_t       nodes_explored = 0;
  };

  //! F(n, k), or F*(n, k) if \p interval, by branch and bound over the
  //! closed leagues (those where neither side can grow). With \p symmetry
  //! only leagues containing the subset {1..k} are searched, which loses
  //! nothing since relabelling points preserves contents. Running out of
  //! \p budget gives status lower_bound_only and the best league found.
  //! Throws SearchTooLarge unless C(n, k) <= 128 and there are at most
  //! 2048 partitions.
  LeagueSearchResult max_content_exact(size_t              n,
                                       size_t              k,
                                       bool                interval,
                                       SearchBudget const& budget   = {},
                                       bool                symmetry = false);

  //! Known values of F(n, k) for n <= 7, all reproducible by
  //! max_content_exact; absent outside that range.
  std::optional<size_t> cached_F(size_t n, size_t k);

  //! sum_k F(n, k) k! - 1, with F from cached_F if \p exact (throwing
  //! MissingExactValues beyond it) and max(lb1, lb2) otherwise. Negative
  //! sums are reported as 0.
  BigNat tn_lower_bound(size_t n, bool exact);

  struct ClampedBound {
    BigInt raw;
    BigNat clamped;
  };

  //! C(2n - 3, n) - 1, with a clamped value for n = 2 where it is -1.
  ClampedBound on_lower_bound(size_t n);

  struct NullChain {
    CayleyTable table;
    //! The maps with kernel in L.partitions and image in L.subsets.
    ElementSet null_part;
    //! The maps of rank < k.
    ElementSet ideal;
    //! ideal, ideal + {f_1}, ideal + {f_1, f_2}, ...
    ChainCertificate certificate;
  };

  //! The null subsemigroup of the principal factor J_k of T_n defined by
  //! the league L, with the chain climbing from the ideal of maps of rank
  //! below k. Throws TableTooLarge if n > max_n.
  NullChain build_null_from_league(size_t        n,
                                   League const& L,
                                   size_t        max_n = 5);

  //! Mean rank of a uniformly random element of T_n,
  //! n(1 - (1 - 1/n)^n).
  BigRat rank_expectation(size_t n);

  //! Variance of the rank, n((1-1/n)^n - (1-2/n)^n)
  //! + n^2((1-2/n)^n - (1-1/n)^(2n)).
  BigRat rank_variance(size_t n);

}  // namespace semichain

#endif  // SEMICHAIN_LEAGUES_HPP_
