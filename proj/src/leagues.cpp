#include "semichain/leagues.hpp"

#include <algorithm>  // for sort, max
#include <array>      // for array
#include <atomic>     // for atomic
#include <bit>        // for popcount
#include <mutex>      // for mutex
#include <stdexcept>  // for invalid_argument
#include <thread>     // for thread

#include "semichain/exception.hpp"
#include "semichain/families.hpp"
#include "semichain/formulas.hpp"

namespace semichain {

  ////////////////////////////////////////////////////////////////////////
  // Partitions and subsets
  ////////////////////////////////////////////////////////////////////////

  std::vector<size_t> SetPartition::block_of() const {
    std::vector<size_t> label(n, 0);
    for (size_t b = 0; b < blocks.size(); ++b) {
      for (size_t x : blocks[b]) {
        label[x - 1] = b;
      }
    }
    return label;
  }

  bool SetPartition::is_interval() const {
    for (auto const& b : blocks) {
      if (b.back() - b.front() + 1 != b.size()) {
        return false;
      }
    }
    return true;
  }

  SetPartition partition_from_labels(std::vector<size_t> const& label) {
    SetPartition        Q;
    std::vector<size_t> renumber(label.size(), SIZE_MAX);
    Q.n = label.size();
    for (size_t i = 0; i < label.size(); ++i) {
      if (label[i] >= label.size()) {
        throw IndexOutOfRange("block label out of range");
      }
      if (renumber[label[i]] == SIZE_MAX) {
        renumber[label[i]] = Q.blocks.size();
        Q.blocks.emplace_back();
      }
      Q.blocks[renumber[label[i]]].push_back(i + 1);
    }
    return Q;
  }

  namespace {
    void check_nk(size_t n, size_t k) {
      if (k < 1 || k > n) {
        throw std::invalid_argument("require 1 <= k <= n, got n = "
                                    + std::to_string(n)
                                    + ", k = " + std::to_string(k));
      }
    }

    // Restricted growth strings a with a[0] = 0, a[i] <= 1 + max(a[..i)),
    // using exactly k labels, in lexicographic order.
    template <typename F>
    void for_each_rgs(size_t n, size_t k, F&& f) {
      std::vector<size_t> a(n, 0), mx(n, 0);
      // mx[i] = max(a[0..i])
      auto rec = [&](auto&& self, size_t i) -> void {
        if (i == n) {
          if (mx[n - 1] + 1 == k) {
            f(a);
          }
          return;
        }
        size_t const prev = mx[i - 1];
        // the remaining n - i points must be able to reach k labels
        for (size_t v = 0; v <= prev + 1 && v < k; ++v) {
          size_t const m = std::max(prev, v);
          if (m + 1 + (n - i - 1) < k) {
            continue;
          }
          a[i]  = v;
          mx[i] = m;
          self(self, i + 1);
        }
      };
      if (n == 0) {
        return;
      }
      if (k == 1 || n > 1) {
        a[0] = mx[0] = 0;
        if (n == 1) {
          f(a);
        } else {
          rec(rec, 1);
        }
      }
    }

    // Labels of interval partitions: choose k - 1 of the n - 1 gaps.
    template <typename F>
    void for_each_interval_labels(size_t n, size_t k, F&& f) {
      std::vector<size_t> gaps(k - 1);
      for (size_t i = 0; i + 1 < k; ++i) {
        gaps[i] = i + 1;  // a divider after point gaps[i]
      }
      std::vector<size_t> label(n);
      while (true) {
        size_t b = 0, g = 0;
        for (size_t x = 1; x <= n; ++x) {
          label[x - 1] = b;
          if (g < gaps.size() && gaps[g] == x) {
            ++b;
            ++g;
          }
        }
        f(label);
        // next combination of k - 1 gaps from {1..n-1}
        size_t i = gaps.size();
        while (i > 0 && gaps[i - 1] == n - 1 - (gaps.size() - i)) {
          --i;
        }
        if (i == 0) {
          return;
        }
        ++gaps[i - 1];
        for (size_t j = i; j < gaps.size(); ++j) {
          gaps[j] = gaps[j - 1] + 1;
        }
      }
    }

    template <typename F>
    void for_each_labels(size_t n, size_t k, bool interval, F&& f) {
      check_nk(n, k);
      if (interval) {
        for_each_interval_labels(n, k, f);
      } else {
        for_each_rgs(n, k, f);
      }
    }
  }  // namespace

  void for_each_partition(size_t                                          n,
                          size_t                                          k,
                          bool                                            interval,
                          std::function<void(SetPartition const&)> const& f) {
    for_each_labels(n, k, interval, [&](std::vector<size_t> const& label) {
      f(partition_from_labels(label));
    });
  }

  std::vector<SetPartition> enumerate_partitions(size_t n,
                                                 size_t k,
                                                 bool   interval) {
    std::vector<SetPartition> out;
    for_each_partition(n, k, interval, [&out](SetPartition const& Q) {
      out.push_back(Q);
    });
    return out;
  }

  std::vector<std::vector<size_t>> k_subsets(size_t n, size_t k) {
    std::vector<std::vector<size_t>> out;
    if (k > n) {
      return out;
    }
    std::vector<size_t> A(k);
    for (size_t i = 0; i < k; ++i) {
      A[i] = i + 1;
    }
    while (true) {
      out.push_back(A);
      size_t i = k;
      while (i > 0 && A[i - 1] == n - (k - i)) {
        --i;
      }
      if (i == 0) {
        return out;
      }
      ++A[i - 1];
      for (size_t j = i; j < k; ++j) {
        A[j] = A[j - 1] + 1;
      }
    }
  }

  bool is_transversal(std::vector<size_t> const& A, SetPartition const& Q) {
    if (A.size() != Q.block_count()) {
      return false;
    }
    auto const        label = Q.block_of();
    std::vector<bool> hit(Q.block_count(), false);
    for (size_t x : A) {
      if (x < 1 || x > Q.n || hit[label[x - 1]]) {
        return false;
      }
      hit[label[x - 1]] = true;
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Leagues
  ////////////////////////////////////////////////////////////////////////

  bool league_check(League const& L) {
    for (auto const& Q : L.partitions) {
      if (Q.n != L.n || Q.block_count() != L.k
          || (L.interval && !Q.is_interval())) {
        return false;
      }
    }
    for (auto const& A : L.subsets) {
      if (A.size() != L.k) {
        return false;
      }
      for (size_t i = 0; i < A.size(); ++i) {
        if (A[i] < 1 || A[i] > L.n || (i > 0 && A[i - 1] >= A[i])) {
          return false;
        }
      }
    }
    for (auto const& Q : L.partitions) {
      for (auto const& A : L.subsets) {
        if (is_transversal(A, Q)) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    template <typename PartitionPred, typename SubsetPred>
    League make_league(size_t        n,
                       size_t        k,
                       bool          interval,
                       PartitionPred keep_partition,
                       SubsetPred    keep_subset) {
      League L{n, k, interval, {}, {}};
      for_each_partition(n, k, interval, [&](SetPartition const& Q) {
        if (keep_partition(Q)) {
          L.partitions.push_back(Q);
        }
      });
      for (auto& A : k_subsets(n, k)) {
        if (keep_subset(A)) {
          L.subsets.push_back(std::move(A));
        }
      }
      return L;
    }

    bool contains(std::vector<size_t> const& A, size_t x) {
      return std::find(A.begin(), A.end(), x) != A.end();
    }
  }  // namespace

  League league_eq1(size_t n, size_t k) {
    return make_league(
        n,
        k,
        false,
        [n](SetPartition const& Q) {
          return std::find(Q.blocks.begin(),
                           Q.blocks.end(),
                           std::vector<size_t>{n})
                 != Q.blocks.end();
        },
        [n](std::vector<size_t> const& A) { return !contains(A, n); });
  }

  League league_eq2(size_t n, size_t k) {
    return make_league(
        n,
        k,
        false,
        [](SetPartition const& Q) {
          auto const label = Q.block_of();
          return label.size() >= 2 && label[0] == label[1];
        },
        [](std::vector<size_t> const& A) {
          return contains(A, 1) && contains(A, 2);
        });
  }

  League league_eq3(size_t n, size_t k) {
    return make_league(
        n,
        k,
        true,
        [n](SetPartition const& Q) {
          return Q.blocks.back() == std::vector<size_t>{n};
        },
        [n](std::vector<size_t> const& A) { return !contains(A, n); });
  }

  BigNat league_lb1(size_t n, size_t k) {
    check_nk(n, k);
    return binomial(n - 1, k) * stirling2(n - 1, k - 1);
  }

  BigNat league_lb2(size_t n, size_t k) {
    check_nk(n, k);
    auto const nn = static_cast<long long>(n);
    auto const kk = static_cast<long long>(k);
    return binomial(nn - 2, kk - 2) * stirling2(n - 1, k);
  }

  BigNat league_lb_interval(size_t n, size_t k) {
    check_nk(n, k);
    auto const nn = static_cast<long long>(n);
    auto const kk = static_cast<long long>(k);
    return binomial(nn - 1, kk) * binomial(nn - 2, nn - kk);
  }

  std::optional<BigNat> closed_form_F(size_t n, size_t k) {
    check_nk(n, k);
    if (k == 1 || k == n) {
      return BigNat(0);
    }
    if (k == 2 && n > 3) {
      return 3 * (pow(big(2), n - 3) - 1);
    }
    if (k == n - 1) {
      BigNat const s = big(n / 3);
      switch (n % 3) {
        case 0:
          return s * s * (2 * s - 1);
        case 1:
          return s * s * (2 * s + 1);
        default:
          return s * (s + 1) * (2 * s + 1);
      }
    }
    return std::nullopt;
  }

  std::optional<BigNat> closed_form_Fstar(size_t n, size_t k) {
    check_nk(n, k);
    if (k == 1 || k == n) {
      return BigNat(0);
    }
    if (k == 2) {
      // r* = (2(n + 1) - sqrt(n^2 - n + 1)) / 3; floor(r*) is the largest
      // r with sqrt(D) <= 2n + 2 - 3r
      BigInt const D = big(n) * n - n + 1;
      BigInt       r = n;
      while (true) {
        BigInt const t = 2 * big(n) + 2 - 3 * r;
        if (t >= 0 && D <= t * t) {
          break;
        }
        --r;
      }
      BigInt const t      = 2 * big(n) + 2 - 3 * r;
      bool const   exact  = D == t * t;
      auto value = [n](BigInt const& x) {
        BigInt const v = (big(n) - x + 1) * (big(n) - x) * (x - 1) / 2;
        return v;
      };
      BigInt best = value(r);
      if (!exact) {
        best = std::max(best, value(r + 1));
      }
      return best;
    }
    if (k == n - 1) {
      return big((n - 1) / 2) * big(n / 2);
    }
    return std::nullopt;
  }

  std::string to_string(SearchStatus s) {
    return s == SearchStatus::exact ? "exact" : "lowerBoundOnly";
  }

  ////////////////////////////////////////////////////////////////////////
  // Branch and bound
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Leagues correspond to bicliques of the "not a transversal" relation
    // between k-subsets (objects) and k-partitions (attributes); maximal
    // ones are the formal concepts, enumerated with Close-by-One.
    template <size_t W>
    struct Bits {
      std::array<uint64_t, W> w{};

      void set(size_t i) {
        w[i >> 6] |= uint64_t(1) << (i & 63);
      }
      bool test(size_t i) const {
        return (w[i >> 6] >> (i & 63)) & 1;
      }
      size_t count() const {
        size_t c = 0;
        for (auto x : w) {
          c += std::popcount(x);
        }
        return c;
      }
      Bits operator&(Bits const& o) const {
        Bits r;
        for (size_t i = 0; i < W; ++i) {
          r.w[i] = w[i] & o.w[i];
        }
        return r;
      }
      bool subset_of(Bits const& o) const {
        for (size_t i = 0; i < W; ++i) {
          if (w[i] & ~o.w[i]) {
            return false;
          }
        }
        return true;
      }
      // the members below i agree
      bool same_below(Bits const& o, size_t i) const {
        size_t const full = i >> 6;
        for (size_t j = 0; j < full; ++j) {
          if (w[j] != o.w[j]) {
            return false;
          }
        }
        if (full < W && (i & 63) != 0) {
          uint64_t const mask = (uint64_t(1) << (i & 63)) - 1;
          return ((w[full] ^ o.w[full]) & mask) == 0;
        }
        return true;
      }
    };

    struct Concept {
      size_t              value = 0;
      std::vector<size_t> objects;
      std::vector<size_t> attributes;
    };

    template <size_t OW, size_t AW>
    class Search {
      using Obj = Bits<OW>;
      using Att = Bits<AW>;

     public:
      Search(std::vector<std::vector<bool>> const& incidence,
             size_t                                 num_attributes,
             SearchBudget const&                    budget)
          : _m(incidence.size()),
            _p(num_attributes),
            _compat(_m),
            _budget(budget),
            _deadline(budget.max_millis) {
        for (size_t i = 0; i < _p; ++i) {
          _all.set(i);
        }
        for (size_t b = 0; b < _m; ++b) {
          for (size_t i = 0; i < _p; ++i) {
            if (incidence[b][i]) {
              _compat[b].set(i);
            }
          }
        }
      }

      // The concept generated by a set of objects.
      Concept close(std::vector<size_t> const& objects) const {
        Att P = _all;
        for (size_t b : objects) {
          P = P & _compat[b];
        }
        return to_concept(extent(P), P);
      }

      Concept run(Concept const& seed, bool symmetry, size_t threads) {
        Att const P0 = _all;
        Obj const E0 = extent(P0);
        _global      = seed.value;
        Concept best = seed;
        {
          Concept root = to_concept(E0, P0);
          if (root.value > best.value) {
            best    = root;
            _global = root.value;
          }
        }
        std::vector<size_t> tasks;
        for (size_t b = 0; b < _m; ++b) {
          if (!E0.test(b) && (!symmetry || b == 0)) {
            tasks.push_back(b);
          }
        }
        std::vector<Concept> found(tasks.size());
        std::atomic<size_t>  next{0};
        size_t const         floor = best.value;
        auto worker = [&]() {
          for (size_t t; (t = next++) < tasks.size();) {
            Local local{floor, {}, {}, false};
            child(E0, E0.count(), P0, tasks[t], local);
            if (local.found) {
              found[t] = to_concept(local.E, local.P);
            }
          }
        };
        threads = std::max<size_t>(1, std::min(threads, tasks.size()));
        if (threads == 1) {
          worker();
        } else {
          std::vector<std::thread> pool;
          for (size_t i = 0; i < threads; ++i) {
            pool.emplace_back(worker);
          }
          for (auto& th : pool) {
            th.join();
          }
        }
        for (auto& c : found) {
          if (c.value > best.value) {
            best = std::move(c);
          }
        }
        return best;
      }

      size_t nodes() const {
        return _nodes;
      }

      bool aborted() const {
        return _aborted;
      }

     private:
      struct Local {
        size_t best;
        Obj    E;
        Att    P;
        bool   found;
      };

      Obj extent(Att const& P) const {
        Obj E;
        for (size_t b = 0; b < _m; ++b) {
          if (P.subset_of(_compat[b])) {
            E.set(b);
          }
        }
        return E;
      }

      Concept to_concept(Obj const& E, Att const& P) const {
        Concept c;
        for (size_t b = 0; b < _m; ++b) {
          if (E.test(b)) {
            c.objects.push_back(b);
          }
        }
        for (size_t i = 0; i < _p; ++i) {
          if (P.test(i)) {
            c.attributes.push_back(i);
          }
        }
        c.value = c.objects.size() * c.attributes.size();
        return c;
      }

      bool prune(size_t bound, Local const& local) const {
        return bound <= local.best || bound < _global.load();
      }

      // Visit the child of (E, P) generated by object b, then its subtree.
      void child(Obj const&  E,
                 size_t      ecount,
                 Att const&  P,
                 size_t      b,
                 Local&      local) {
        if (_aborted) {
          return;
        }
        Att const    Pc = P & _compat[b];
        size_t const pc = Pc.count();
        if (pc == 0 || prune((ecount + _m - b) * pc, local)) {
          return;
        }
        Obj const Ec = extent(Pc);
        if (!Ec.same_below(E, b)) {
          return;  // not canonical; reached from an earlier generator
        }
        size_t const nodes = ++_nodes;
        if (nodes >= _budget.max_subsemigroups
            || (nodes % 4096 == 0 && _deadline.passed())) {
          _aborted = true;
          return;
        }
        size_t const ec    = Ec.count();
        size_t const value = ec * pc;
        if (value > local.best) {
          local = {value, Ec, Pc, true};
          update_global(value);
        }
        descend(Ec, ec, Pc, b + 1, local);
      }

      void descend(Obj const&  E,
                   size_t      ecount,
                   Att const&  P,
                   size_t      from,
                   Local&      local) {
        // every concept below adds some candidates t to E and keeps at most
        // min c_b of the attributes, so (|E| + t) * (t-th largest c) bounds
        // its content
        std::vector<std::pair<size_t, size_t>> cand;  // (c_b, b)
        for (size_t b = from; b < _m; ++b) {
          if (!E.test(b)) {
            size_t const c = (P & _compat[b]).count();
            if (c > 0) {
              cand.emplace_back(c, b);
            }
          }
        }
        if (cand.empty()) {
          return;
        }
        std::vector<size_t> cs(cand.size());
        for (size_t i = 0; i < cand.size(); ++i) {
          cs[i] = cand[i].first;
        }
        std::sort(cs.begin(), cs.end(), std::greater<>());
        size_t bound = 0;
        for (size_t t = 0; t < cs.size(); ++t) {
          bound = std::max(bound, (ecount + t + 1) * cs[t]);
        }
        if (prune(bound, local)) {
          return;
        }
        for (size_t i = 0; i < cand.size(); ++i) {
          auto const [c, b] = cand[i];
          // at most the candidates from here on can join
          if (prune((ecount + cand.size() - i) * c, local)) {
            continue;
          }
          child(E, ecount, P, b, local);
        }
      }

      void update_global(size_t value) {
        size_t cur = _global.load();
        while (value > cur && !_global.compare_exchange_weak(cur, value)) {
        }
      }

      size_t              _m;
      size_t              _p;
      std::vector<Att>    _compat;
      Att                 _all;
      SearchBudget        _budget;
      Deadline            _deadline;
      std::atomic<size_t> _global{0};
      std::atomic<size_t> _nodes{0};
      std::atomic<bool>   _aborted{false};
    };

    struct Outcome {
      Concept concept_;
      size_t  nodes;
      bool    aborted;
    };

    template <size_t OW, size_t AW>
    Outcome run_search(std::vector<std::vector<bool>> const& incidence,
                       size_t                                 p,
                       std::vector<size_t> const&             seed_objects,
                       SearchBudget const&                    budget,
                       bool                                   symmetry) {
      Search<OW, AW> s(incidence, p, budget);
      Concept const  seed = s.close(seed_objects);
      Concept        best = s.run(seed, symmetry, budget.threads);
      return {std::move(best), s.nodes(), s.aborted()};
    }

    template <size_t OW>
    Outcome dispatch_attributes(std::vector<std::vector<bool>> const& inc,
                                size_t                                 p,
                                std::vector<size_t> const&             seed,
                                SearchBudget const&                    budget,
                                bool                                   sym) {
      size_t const words = (p + 63) / 64;
      if (words <= 1) {
        return run_search<OW, 1>(inc, p, seed, budget, sym);
      } else if (words <= 2) {
        return run_search<OW, 2>(inc, p, seed, budget, sym);
      } else if (words <= 4) {
        return run_search<OW, 4>(inc, p, seed, budget, sym);
      } else if (words <= 8) {
        return run_search<OW, 8>(inc, p, seed, budget, sym);
      } else if (words <= 16) {
        return run_search<OW, 16>(inc, p, seed, budget, sym);
      }
      return run_search<OW, 32>(inc, p, seed, budget, sym);
    }
  }  // namespace

  LeagueSearchResult max_content_exact(size_t              n,
                                       size_t              k,
                                       bool                interval,
                                       SearchBudget const& budget,
                                       bool                symmetry) {
    check_nk(n, k);
    budget.validate();
    if (binomial(n, k) > 128
        || (interval ? binomial(n - 1, k - 1) : stirling2(n, k)) > 2048) {
      throw SearchTooLarge("league search is limited to 128 subsets and "
                           "2048 partitions");
    }
    auto const subsets    = k_subsets(n, k);
    auto const partitions = enumerate_partitions(n, k, interval);
    size_t const m = subsets.size(), p = partitions.size();

    std::vector<std::vector<bool>> incidence(m, std::vector<bool>(p));
    for (size_t b = 0; b < m; ++b) {
      for (size_t i = 0; i < p; ++i) {
        incidence[b][i] = !is_transversal(subsets[b], partitions[i]);
      }
    }

    // start from the better of the standard constructions
    League const        seed_league = interval ? league_eq3(n, k)
                                      : league_lb1(n, k) >= league_lb2(n, k)
                                          ? league_eq1(n, k)
                                          : league_eq2(n, k);
    std::vector<size_t> seed;
    for (auto const& A : seed_league.subsets) {
      seed.push_back(static_cast<size_t>(
          std::find(subsets.begin(), subsets.end(), A) - subsets.begin()));
    }

    Outcome const out
        = m <= 64 ? dispatch_attributes<1>(incidence, p, seed, budget, symmetry)
                  : dispatch_attributes<2>(incidence, p, seed, budget, symmetry);

    LeagueSearchResult r;
    r.optimum        = out.concept_.value;
    r.status         = out.aborted ? SearchStatus::lower_bound_only
                                   : SearchStatus::exact;
    r.nodes_explored = out.nodes;
    r.witness        = League{n, k, interval, {}, {}};
    if (r.optimum > 0) {
      for (size_t i : out.concept_.attributes) {
        r.witness.partitions.push_back(partitions[i]);
      }
      for (size_t b : out.concept_.objects) {
        r.witness.subsets.push_back(subsets[b]);
      }
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Bounds for T_n and O_n
  ////////////////////////////////////////////////////////////////////////

  std::optional<size_t> cached_F(size_t n, size_t k) {
    if (n < 1 || n > 7 || k < 1 || k > n) {
      return std::nullopt;
    }
    if (k == 1 || k == n) {
      return 0;
    }
    // row n, column k = 2..n-1
    static constexpr size_t values[8][6] = {{},
                                            {},
                                            {},
                                            {1},
                                            {3, 3},
                                            {9, 28, 6},
                                            {21, 150, 125, 12},
                                            {45, 760, 1350, 390, 20}};
    return values[n][k - 2];
  }

  BigNat tn_lower_bound(size_t n, bool exact) {
    if (n < 1) {
      throw std::invalid_argument("tn_lower_bound requires n >= 1");
    }
    BigInt total = 0;
    for (size_t k = 1; k <= n; ++k) {
      BigNat F;
      if (exact) {
        auto const v = cached_F(n, k);
        if (!v) {
          throw MissingExactValues("no exact value of F(" + std::to_string(n)
                                   + ", " + std::to_string(k) + ")");
        }
        F = big(*v);
      } else {
        F = std::max(league_lb1(n, k), league_lb2(n, k));
      }
      total += F * factorial(k);
    }
    total -= 1;
    return total < 0 ? BigNat(0) : BigNat(total);
  }

  ClampedBound on_lower_bound(size_t n) {
    if (n < 2) {
      throw std::invalid_argument("on_lower_bound requires n >= 2");
    }
    auto const   nn  = static_cast<long long>(n);
    BigInt const raw = binomial(2 * nn - 3, nn) - 1;
    return {raw, raw < 0 ? BigNat(0) : BigNat(raw)};
  }

  NullChain build_null_from_league(size_t n, League const& L, size_t max_n) {
    if (n > max_n) {
      throw TableTooLarge("T_" + std::to_string(n) + " is beyond the limit n <= "
                          + std::to_string(max_n));
    }
    if (L.n != n || L.k < 2 || !league_check(L)) {
      throw std::invalid_argument("not a league of rank >= 2 on {1.."
                                  + std::to_string(n) + "}");
    }
    NullChain out{build_family(family::FullTransformation{n}),
                  ElementSet(),
                  ElementSet(),
                  {}};
    size_t const N = out.table.size();
    out.null_part  = ElementSet(N);
    out.ideal      = ElementSet(N);

    // rank of every map, read off its index
    std::vector<size_t> images(n);
    for (size_t f = 0; f < N; ++f) {
      size_t            x = f;
      std::vector<bool> hit(n, false);
      size_t            rank = 0;
      for (size_t i = n; i-- > 0;) {
        size_t const y = x % n;
        x /= n;
        rank += hit[y] ? 0 : 1;
        hit[y] = true;
      }
      if (rank < L.k) {
        out.ideal.insert(f);
      }
    }

    std::vector<size_t> perm(L.k);
    for (auto const& Q : L.partitions) {
      auto const label = Q.block_of();
      for (auto const& A : L.subsets) {
        for (size_t i = 0; i < L.k; ++i) {
          perm[i] = i;
        }
        do {
          // block b goes to A[perm[b]]
          for (size_t x = 0; x < n; ++x) {
            images[x] = A[perm[label[x]]] - 1;
          }
          out.null_part.insert(full_transformation_index(images));
        } while (std::next_permutation(perm.begin(), perm.end()));
      }
    }

    out.certificate.kind = ChainKind::subsemigroup;
    ElementSet U         = out.ideal;
    out.certificate.subsets.push_back(U);
    out.null_part.for_each([&](size_t f) {
      U.insert(f);
      out.certificate.subsets.push_back(U);
    });
    return out;
  }

  namespace {
    BigRat rat_pow(BigRat const& x, size_t e) {
      BigRat r = 1;
      for (size_t i = 0; i < e; ++i) {
        r *= x;
      }
      return r;
    }

    BigRat fraction(long a, long b) {
      BigRat r{BigInt(a), BigInt(b)};
      r.canonicalize();
      return r;
    }
  }  // namespace

  BigRat rank_expectation(size_t n) {
    if (n < 1) {
      throw std::invalid_argument("rank_expectation requires n >= 1");
    }
    auto const nn = static_cast<long>(n);
    return BigRat(nn) * (1 - rat_pow(fraction(nn - 1, nn), n));
  }

  BigRat rank_variance(size_t n) {
    if (n < 1) {
      throw std::invalid_argument("rank_variance requires n >= 1");
    }
    auto const   nn = static_cast<long>(n);
    BigRat const a  = rat_pow(fraction(nn - 1, nn), n);
    BigRat const b  = rat_pow(fraction(nn - 2, nn), n);
    return BigRat(nn) * (a - b) + BigRat(nn * nn) * (b - a * a);
  }

}  // namespace semichain
