#include "semichain/oracle.hpp"

#include <algorithm>      // for sort, max
#include <thread>         // for thread
#include <unordered_map>  // for unordered_map
#include <utility>        // for move

#include "semichain/classify.hpp"
#include "semichain/exception.hpp"
#include "semichain/formulas.hpp"
#include "semichain/greens.hpp"
#include "semichain/grouplen.hpp"

namespace semichain {

  std::string to_string(ChainKind k) {
    return k == ChainKind::subsemigroup ? "subsemigroup"
                                        : "inverseSubsemigroup";
  }

  namespace {
    constexpr size_t null_shortcut_size = 20;

    // The poset of closed sets reachable from the seeds, with an edge
    // U -> closure(U + g) for every g outside U. Every covering pair is an
    // edge, so longest paths here are longest chains.
    struct Poset {
      std::vector<ElementSet>            nodes;
      std::vector<std::vector<uint32_t>> up;
    };

    template <typename Generators>
    Poset enumerate(CayleyTable const&  S,
                    SearchBudget const& budget,
                    Generators&&        gens) {
      budget.validate();
      Deadline const deadline(budget.max_millis);
      size_t const   n = S.size();

      Poset                                              P;
      std::unordered_map<ElementSet, uint32_t, ElementSetHash> index;

      auto intern = [&](ElementSet&& U) -> uint32_t {
        auto [it, fresh] = index.try_emplace(U, P.nodes.size());
        if (fresh) {
          if (P.nodes.size() >= budget.max_subsemigroups) {
            throw BudgetExceeded("subsemigroups", P.nodes.size());
          }
          P.nodes.push_back(std::move(U));
          P.up.emplace_back();
        }
        return it->second;
      };

      ElementSet const empty(n);
      for (size_t x = 0; x < n; ++x) {
        auto g = gens(x);
        intern(extend_closure(S, empty, g));
      }

      // Breadth first; each frontier is expanded (possibly in parallel)
      // and then merged in order, so node ids do not depend on threads.
      size_t begin = 0;
      while (begin < P.nodes.size()) {
        size_t const end   = P.nodes.size();
        size_t const count = end - begin;
        std::vector<std::vector<ElementSet>> found(count);
        auto work = [&](size_t lo, size_t hi) {
          for (size_t i = lo; i < hi; ++i) {
            ElementSet const& U = P.nodes[begin + i];
            for (size_t x = 0; x < n; ++x) {
              if (!U.contains(x)) {
                auto g = gens(x);
                found[i].push_back(extend_closure(S, U, g));
              }
            }
          }
        };
        size_t const threads = std::min(budget.threads, count);
        if (threads <= 1) {
          work(0, count);
        } else {
          std::vector<std::thread> pool;
          for (size_t t = 0; t < threads; ++t) {
            pool.emplace_back(work, count * t / threads,
                              count * (t + 1) / threads);
          }
          for (auto& th : pool) {
            th.join();
          }
        }
        for (size_t i = 0; i < count; ++i) {
          std::vector<uint32_t> ups;
          for (auto& V : found[i]) {
            ups.push_back(intern(std::move(V)));
          }
          std::sort(ups.begin(), ups.end());
          ups.erase(std::unique(ups.begin(), ups.end()), ups.end());
          P.up[begin + i] = std::move(ups);
        }
        begin = end;
        if (deadline.passed()) {
          throw BudgetExceeded("time", P.nodes.size());
        }
      }
      return P;
    }

    ChainResult longest_path(Poset const& P, ChainKind kind) {
      size_t const          N = P.nodes.size();
      std::vector<uint32_t> order(N);
      for (uint32_t i = 0; i < N; ++i) {
        order[i] = i;
      }
      std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        return P.nodes[a].count() > P.nodes[b].count();
      });
      // height[u] is the longest path starting at u
      std::vector<size_t> height(N, 0);
      for (uint32_t u : order) {
        for (uint32_t v : P.up[u]) {
          height[u] = std::max(height[u], height[v] + 1);
        }
      }
      uint32_t start = 0;
      for (uint32_t u = 1; u < N; ++u) {
        if (height[u] > height[start]
            || (height[u] == height[start]
                && lex_less(P.nodes[u], P.nodes[start]))) {
          start = u;
        }
      }
      ChainResult result;
      result.length     = height[start];
      result.enumerated = N;
      result.witness.kind = kind;
      uint32_t u          = start;
      result.witness.subsets.push_back(P.nodes[u]);
      while (height[u] > 0) {
        uint32_t next = UINT32_MAX;
        for (uint32_t v : P.up[u]) {
          if (height[v] + 1 == height[u]
              && (next == UINT32_MAX || lex_less(P.nodes[v], P.nodes[next]))) {
            next = v;
          }
        }
        u = next;
        result.witness.subsets.push_back(P.nodes[u]);
      }
      return result;
    }

    bool is_null_table(CayleyTable const& S) {
      auto const z = S(0, 0);
      for (auto v : S.flat()) {
        if (v != z) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  ChainResult longest_chain_exact(CayleyTable const&  S,
                                  SearchBudget const& budget) {
    budget.validate();
    if (S.size() > null_shortcut_size && is_null_table(S)) {
      // every set containing the zero is closed; add the other elements
      // in increasing order
      size_t const z = S(0, 0);
      ChainResult  r;
      r.length = S.size() - 1;
      ElementSet U(S.size());
      U.insert(z);
      r.witness.subsets.push_back(U);
      for (size_t x = 0; x < S.size(); ++x) {
        if (x != z) {
          U.insert(x);
          r.witness.subsets.push_back(U);
        }
      }
      return r;
    }
    auto P = enumerate(S, budget, [](size_t x) {
      return std::vector<size_t>{x};
    });
    return longest_path(P, ChainKind::subsemigroup);
  }

  ChainResult longest_inverse_chain_exact(CayleyTable const&  S,
                                          SearchBudget const& budget) {
    auto const c = classify(S);
    if (!c.inverse) {
      throw NotInverse("the semigroup is not an inverse semigroup");
    }
    auto const& inv = c.inverse_of;
    auto P = enumerate(S, budget, [&inv](size_t x) {
      return std::vector<size_t>{x, inv[x]};
    });
    return longest_path(P, ChainKind::inverse_subsemigroup);
  }

  ChainCheck verify_chain(CayleyTable const& S, ChainCertificate const& c) {
    auto fail = [](std::string msg) {
      return ChainCheck{false, std::move(msg)};
    };
    if (c.subsets.empty()) {
      return fail("empty chain");
    }
    std::vector<size_t> inv;
    if (c.kind == ChainKind::inverse_subsemigroup) {
      auto const cls = classify(S);
      if (!cls.inverse) {
        return fail("inverse chain in a semigroup that is not inverse");
      }
      inv = cls.inverse_of;
    }
    for (size_t i = 0; i < c.subsets.size(); ++i) {
      auto const& U   = c.subsets[i];
      auto const  pos = "subset " + std::to_string(i);
      if (U.universe() != S.size()) {
        return fail(pos + " has the wrong universe");
      }
      if (U.empty()) {
        return fail(pos + " is empty");
      }
      if (!is_closed(S, U)) {
        return fail(pos + " is not closed");
      }
      if (!inv.empty()) {
        bool ok = true;
        U.for_each([&](size_t x) { ok = ok && U.contains(inv[x]); });
        if (!ok) {
          return fail(pos + " is not closed under inverses");
        }
      }
      if (i > 0
          && (!c.subsets[i - 1].is_subset_of(U) || c.subsets[i - 1] == U)) {
        return fail(pos + " does not strictly contain its predecessor");
      }
    }
    return {};
  }

  ////////////////////////////////////////////////////////////////////////
  // Decomposition
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string describe_factor(size_t size) {
      return "principal factor with " + std::to_string(size) + " elements";
    }

    // l(F) for a principal factor F = J + {0}, zero last.
    DecompositionNode resolve(CayleyTable const& F, SearchBudget const& budget) {
      size_t const      m    = F.size() - 1;
      size_t const      zero = m;
      DecompositionNode node;
      node.description = describe_factor(m);

      bool null = true, closed = true;
      for (size_t a = 0; a < m; ++a) {
        for (size_t b = 0; b < m; ++b) {
          null   = null && F(a, b) == zero;
          closed = closed && F(a, b) != zero;
        }
      }
      if (null) {
        node.method = "null";
        node.length = m;
        return node;
      }
      ElementSet J = ElementSet::full(F.size());
      J.erase(zero);
      try {
        if (closed) {
          auto const sub = subtable(F, J);
          if (is_group(sub)) {
            auto const g = group_length(sub);
            node.method  = "group with zero";
            node.length  = g.length + 1;
            return node;
          }
          // completely simple: l(J) = #L + #R - 2 + l(G), plus one for 0
          auto const gr = greens_structure(sub);
          ElementSet H(sub.size());
          for (size_t x = 0; x < sub.size(); ++x) {
            if (gr.h_class_of[x] == gr.h_class_of[0]) {
              H.insert(x);
            }
          }
          auto const g = group_length(subtable(sub, closure(sub, H)));
          node.method  = "completely simple";
          node.length  = gr.number_of_l_classes + gr.number_of_r_classes
                        + g.length - 1;
          return node;
        }
        if (classify(F).inverse) {
          // Brandt semigroup over the H-class of any idempotent
          auto const gr = greens_structure(F);
          size_t     e  = zero;
          for (size_t x = 0; x < m && e == zero; ++x) {
            if (F(x, x) == x) {
              e = x;
            }
          }
          ElementSet H(F.size());
          for (size_t x = 0; x < m; ++x) {
            if (gr.h_class_of[x] == gr.h_class_of[e]) {
              H.insert(x);
            }
          }
          auto const G   = subtable(F, H);
          auto const g   = group_length(G);
          size_t const n = gr.l_classes_in(gr.j_class_of[e]);
          node.method    = "brandt";
          node.length    = to_u64(brandt_length(g.length, big(G.size()), big(n)));
          return node;
        }
      } catch (SearchTooLarge const&) {
        // fall through to the search
      }
      try {
        node.method = "oracle";
        node.length = longest_chain_exact(F, budget).length;
        return node;
      } catch (BudgetExceeded const& e) {
        throw NotDecomposable(node.description + " matches no closed form ("
                              + e.what() + ")");
      }
    }

    DecompositionNode decompose(CayleyTable const& S, SearchBudget const& budget) {
      auto const        gr = greens_structure(S);
      DecompositionNode node;
      node.description = "semigroup with " + std::to_string(S.size())
                         + " elements and "
                         + std::to_string(gr.number_of_j_classes)
                         + " J-classes";
      if (classify(S).regular) {
        node.method = "sum of principal factors";
        size_t total = 0;
        for (size_t c = 0; c < gr.number_of_j_classes; ++c) {
          node.children.push_back(resolve(principal_factor(S, gr, c), budget));
          total += node.children.back().length;
        }
        node.length = total - 1;
        return node;
      }
      size_t const top = gr.maximal_j_classes().front();
      ElementSet   rest = gr.j_class_members[top].complement();
      auto         factor = resolve(principal_factor(S, gr, top), budget);
      if (rest.empty()) {
        node.method = "single principal factor";
        node.length = factor.length - 1;
        node.children.push_back(std::move(factor));
        return node;
      }
      node.method = "ideal and quotient";
      node.children.push_back(decompose(subtable(S, rest), budget));
      node.children.push_back(std::move(factor));
      node.length = node.children[0].length + node.children[1].length;
      return node;
    }
  }  // namespace

  Decomposition decompose_length(CayleyTable const&  S,
                                 SearchBudget const& budget) {
    budget.validate();
    Decomposition d;
    d.trace  = decompose(S, budget);
    d.length = d.trace.length;
    return d;
  }

}  // namespace semichain
