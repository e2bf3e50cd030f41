#include "semichain/greens.hpp"

#include <algorithm>  // for find
#include <map>        // for map
#include <utility>    // for move

#include "semichain/exception.hpp"

namespace semichain {

  ElementSet closure(CayleyTable const& S, ElementSet const& seed) {
    auto const members = seed.members();
    return extend_closure(S, ElementSet(S.size()), members);
  }

  ElementSet extend_closure(CayleyTable const&      S,
                            ElementSet              base,
                            std::span<size_t const> extra) {
    std::vector<size_t> elts = base.members();
    size_t              next = elts.size();
    for (size_t x : extra) {
      if (!base.contains(x)) {
        base.insert(x);
        elts.push_back(x);
      }
    }
    // every pair with at least one element at position >= next still has
    // to be multiplied; pairs are handled when the later one is processed
    for (; next < elts.size(); ++next) {
      size_t const x = elts[next];
      for (size_t i = 0; i <= next; ++i) {
        size_t const y = elts[i];
        size_t const a = S(x, y);
        if (!base.contains(a)) {
          base.insert(a);
          elts.push_back(a);
        }
        size_t const b = S(y, x);
        if (!base.contains(b)) {
          base.insert(b);
          elts.push_back(b);
        }
      }
    }
    return base;
  }

  namespace {
    // Tarjan's algorithm, iterative. succ(x, i) is the i-th successor of x
    // for i < degree. Returns component ids numbered by least element.
    template <typename Successor>
    std::vector<size_t> strongly_connected_components(size_t    n,
                                                      size_t    degree,
                                                      Successor succ,
                                                      size_t&   count) {
      constexpr size_t    unvisited = static_cast<size_t>(-1);
      std::vector<size_t> index(n, unvisited), low(n, 0), comp(n, unvisited);
      std::vector<char>   on_stack(n, 0);
      std::vector<size_t> stack;
      std::vector<std::pair<size_t, size_t>> call;  // (node, next edge)
      size_t                                 counter = 0, raw_count = 0;

      for (size_t root = 0; root < n; ++root) {
        if (index[root] != unvisited) {
          continue;
        }
        call.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
          auto& [v, e] = call.back();
          if (e < degree) {
            size_t const w = succ(v, e++);
            if (index[w] == unvisited) {
              index[w] = low[w] = counter++;
              stack.push_back(w);
              on_stack[w] = 1;
              call.emplace_back(w, 0);
            } else if (on_stack[w]) {
              low[v] = std::min(low[v], index[w]);
            }
          } else {
            size_t const node = v;
            call.pop_back();
            if (!call.empty()) {
              size_t const parent = call.back().first;
              low[parent]         = std::min(low[parent], low[node]);
            }
            if (low[node] == index[node]) {
              size_t w;
              do {
                w = stack.back();
                stack.pop_back();
                on_stack[w] = 0;
                comp[w]     = raw_count;
              } while (w != node);
              ++raw_count;
            }
          }
        }
      }
      // renumber by least element
      std::vector<size_t> renumber(raw_count, unvisited);
      count = 0;
      for (size_t x = 0; x < n; ++x) {
        if (renumber[comp[x]] == unvisited) {
          renumber[comp[x]] = count++;
        }
        comp[x] = renumber[comp[x]];
      }
      return comp;
    }
  }  // namespace

  std::vector<size_t> GreensStructure::maximal_j_classes() const {
    std::vector<char> below_something(number_of_j_classes, 0);
    for (auto const& b : j_below) {
      b.for_each([&](size_t c) { below_something[c] = 1; });
    }
    std::vector<size_t> out;
    for (size_t c = 0; c < number_of_j_classes; ++c) {
      if (!below_something[c]) {
        out.push_back(c);
      }
    }
    return out;
  }

  size_t GreensStructure::l_classes_in(size_t c) const {
    ElementSet seen(number_of_l_classes);
    j_class_members[c].for_each([&](size_t x) { seen.insert(l_class_of[x]); });
    return seen.count();
  }

  size_t GreensStructure::r_classes_in(size_t c) const {
    ElementSet seen(number_of_r_classes);
    j_class_members[c].for_each([&](size_t x) { seen.insert(r_class_of[x]); });
    return seen.count();
  }

  GreensStructure greens_structure(CayleyTable const& S) {
    size_t const    n = S.size();
    GreensStructure g;
    // R: x -> xs, L: x -> sx, J: both
    g.r_class_of = strongly_connected_components(
        n, n, [&](size_t x, size_t s) { return S(x, s); }, g.number_of_r_classes);
    g.l_class_of = strongly_connected_components(
        n, n, [&](size_t x, size_t s) { return S(s, x); }, g.number_of_l_classes);
    g.j_class_of = strongly_connected_components(
        n,
        2 * n,
        [&](size_t x, size_t s) { return s < n ? S(x, s) : S(s - n, x); },
        g.number_of_j_classes);

    std::map<std::pair<size_t, size_t>, size_t> h_ids;
    g.h_class_of.resize(n);
    for (size_t x = 0; x < n; ++x) {
      auto [it, inserted] = h_ids.emplace(
          std::make_pair(g.l_class_of[x], g.r_class_of[x]), h_ids.size());
      g.h_class_of[x] = it->second;
    }
    g.number_of_h_classes = h_ids.size();

    size_t const m = g.number_of_j_classes;
    g.j_class_members.assign(m, ElementSet(n));
    for (size_t x = 0; x < n; ++x) {
      g.j_class_members[g.j_class_of[x]].insert(x);
    }

    // Direct successors of each J-class in the condensation.
    std::vector<std::vector<size_t>> succ(m);
    std::vector<size_t>              mark(m, static_cast<size_t>(-1));
    for (size_t c = 0; c < m; ++c) {
      g.j_class_members[c].for_each([&](size_t x) {
        for (size_t s = 0; s < n; ++s) {
          for (size_t y : {static_cast<size_t>(S(x, s)),
                           static_cast<size_t>(S(s, x))}) {
            size_t const d = g.j_class_of[y];
            if (d != c && mark[d] != c) {
              mark[d] = c;
              succ[c].push_back(d);
            }
          }
        }
      });
    }
    // Reachability, memoised depth first.
    g.j_below.assign(m, ElementSet(m));
    std::vector<char> done(m, 0);
    std::vector<std::pair<size_t, size_t>> call;
    for (size_t root = 0; root < m; ++root) {
      if (done[root]) {
        continue;
      }
      call.emplace_back(root, 0);
      while (!call.empty()) {
        auto& [c, i] = call.back();
        if (i < succ[c].size()) {
          size_t const d = succ[c][i++];
          if (!done[d]) {
            call.emplace_back(d, 0);
          }
        } else {
          for (size_t d : succ[c]) {
            g.j_below[c].insert(d);
            g.j_below[c] |= g.j_below[d];
          }
          done[c] = 1;
          call.pop_back();
        }
      }
    }
    return g;
  }

  CayleyTable principal_factor(CayleyTable const&     S,
                               GreensStructure const& greens,
                               size_t                 j_class) {
    if (j_class >= greens.number_of_j_classes) {
      throw IndexOutOfRange("no J-class with id " + std::to_string(j_class));
    }
    auto const   members = greens.j_class_members[j_class].members();
    size_t const k       = members.size();
    size_t const m       = k + 1;
    auto const   zero    = static_cast<CayleyTable::value_type>(k);
    std::vector<CayleyTable::value_type> index(S.size(), zero);
    for (size_t i = 0; i < k; ++i) {
      index[members[i]] = static_cast<CayleyTable::value_type>(i);
    }
    std::vector<CayleyTable::value_type> table(m * m, zero);
    for (size_t i = 0; i < k; ++i) {
      for (size_t j = 0; j < k; ++j) {
        table[i * m + j] = index[S(members[i], members[j])];
      }
    }
    std::vector<std::string> labels;
    for (size_t x : members) {
      labels.push_back(S.label(x));
    }
    labels.emplace_back("0");
    return CayleyTable::make_unchecked(m, std::move(table), std::move(labels));
  }

  bool is_ideal(CayleyTable const& S, ElementSet const& I) {
    bool ok = true;
    I.for_each([&](size_t x) {
      for (size_t s = 0; s < S.size() && ok; ++s) {
        ok = I.contains(S(x, s)) && I.contains(S(s, x));
      }
    });
    return ok;
  }

  CayleyTable rees_quotient(CayleyTable const& S, ElementSet const& I) {
    if (I.universe() != S.size() || I.empty() || !is_ideal(S, I)) {
      throw NotAnIdeal("the given set is not a nonempty two-sided ideal");
    }
    auto const   rest = I.complement().members();
    size_t const k    = rest.size();
    size_t const m    = k + 1;
    auto const   zero = static_cast<CayleyTable::value_type>(k);
    std::vector<CayleyTable::value_type> index(S.size(), zero);
    for (size_t i = 0; i < k; ++i) {
      index[rest[i]] = static_cast<CayleyTable::value_type>(i);
    }
    std::vector<CayleyTable::value_type> table(m * m, zero);
    for (size_t i = 0; i < k; ++i) {
      for (size_t j = 0; j < k; ++j) {
        table[i * m + j] = index[S(rest[i], rest[j])];
      }
    }
    std::vector<std::string> labels;
    for (size_t x : rest) {
      labels.push_back(S.label(x));
    }
    labels.emplace_back("0");
    return CayleyTable::make_unchecked(m, std::move(table), std::move(labels));
  }

  std::vector<ElementSet> all_ideals(CayleyTable const& S) {
    auto const   g = greens_structure(S);
    size_t const m = g.number_of_j_classes;
    // an ideal is a nonempty union of J-classes closed downwards
    std::vector<ElementSet> out;
    // enumerate down-closed sets of classes by search over class subsets
    std::vector<ElementSet> frontier;
    for (size_t c = 0; c < m; ++c) {
      ElementSet down = g.j_below[c];
      down.insert(c);
      frontier.push_back(down);
    }
    std::vector<ElementSet> downsets;
    auto                    known = [&](ElementSet const& d) {
      return std::find(downsets.cbegin(), downsets.cend(), d) != downsets.cend();
    };
    for (auto const& d : frontier) {
      if (!known(d)) {
        downsets.push_back(d);
      }
    }
    for (size_t i = 0; i < downsets.size(); ++i) {
      for (auto const& p : frontier) {
        ElementSet u = downsets[i];
        u |= p;
        if (!known(u)) {
          downsets.push_back(u);
        }
      }
    }
    for (auto const& d : downsets) {
      ElementSet I(S.size());
      d.for_each([&](size_t c) { I |= g.j_class_members[c]; });
      out.push_back(std::move(I));
    }
    std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) {
      return a.count() != b.count() ? a.count() < b.count() : lex_less(a, b);
    });
    return out;
  }

}  // namespace semichain
