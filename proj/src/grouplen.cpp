#include "semichain/grouplen.hpp"

#include <algorithm>      // for max
#include <bit>            // for popcount
#include <unordered_map>  // for unordered_map

#include "semichain/classify.hpp"
#include "semichain/exception.hpp"
#include "semichain/greens.hpp"

namespace semichain {

  size_t omega(uint64_t n) {
    size_t count = 0;
    for (uint64_t p = 2; p * p <= n; ++p) {
      while (n % p == 0) {
        n /= p;
        ++count;
      }
    }
    return n > 1 ? count + 1 : count;
  }

  size_t binary_weight(uint64_t n) {
    return static_cast<size_t>(std::popcount(n));
  }

  size_t length_symmetric(size_t n) {
    if (n == 0) {
      return 0;
    }
    return (3 * n + 1) / 2 - binary_weight(n) - 1;
  }

  std::string to_string(GroupLengthMethod m) {
    switch (m) {
      case GroupLengthMethod::symmetric_formula:
        return "symmetricFormula";
      case GroupLengthMethod::soluble_omega:
        return "solubleOmega";
      case GroupLengthMethod::exact_search:
        return "exactSearch";
    }
    return "unknown";
  }

  namespace {
    std::vector<size_t> inverses(CayleyTable const& G, size_t e) {
      std::vector<size_t> inv(G.size());
      for (size_t a = 0; a < G.size(); ++a) {
        for (size_t b = 0; b < G.size(); ++b) {
          if (G(a, b) == e) {
            inv[a] = b;
            break;
          }
        }
      }
      return inv;
    }

    size_t require_identity(CayleyTable const& G) {
      if (!is_group(G)) {
        throw NotAGroup("the table is not a group");
      }
      return *find_identity(G);
    }
  }  // namespace

  ElementSet derived_subgroup(CayleyTable const& G) {
    size_t const e   = require_identity(G);
    auto const   inv = inverses(G, e);
    ElementSet   seed(G.size());
    for (size_t a = 0; a < G.size(); ++a) {
      for (size_t b = 0; b < G.size(); ++b) {
        seed.insert(G(G(inv[a], inv[b]), G(a, b)));
      }
    }
    return closure(G, seed);
  }

  bool is_soluble(CayleyTable const& G) {
    CayleyTable H = G;
    while (H.size() > 1) {
      ElementSet const D = derived_subgroup(H);
      if (D.count() == H.size()) {
        return false;
      }
      H = subtable(H, D);
    }
    return true;
  }

  bool is_normal_subgroup(CayleyTable const& G, ElementSet const& N) {
    size_t const e = require_identity(G);
    if (!N.contains(e) || !is_closed(G, N)) {
      return false;
    }
    auto const inv = inverses(G, e);
    bool       ok  = true;
    N.for_each([&](size_t x) {
      for (size_t g = 0; g < G.size() && ok; ++g) {
        ok = N.contains(G(G(inv[g], x), g));
      }
    });
    return ok;
  }

  CayleyTable quotient_group(CayleyTable const& G, ElementSet const& N) {
    if (!is_normal_subgroup(G, N)) {
      throw NotAGroup("not a normal subgroup");
    }
    size_t const        n = G.size();
    constexpr size_t    none = static_cast<size_t>(-1);
    std::vector<size_t> coset(n, none), rep;
    for (size_t g = 0; g < n; ++g) {
      if (coset[g] == none) {
        N.for_each([&](size_t x) { coset[G(g, x)] = rep.size(); });
        rep.push_back(g);
      }
    }
    size_t const                         m = rep.size();
    std::vector<CayleyTable::value_type> table(m * m);
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = 0; j < m; ++j) {
        table[i * m + j]
            = static_cast<CayleyTable::value_type>(coset[G(rep[i], rep[j])]);
      }
    }
    return CayleyTable::make_unchecked(m, std::move(table));
  }

  size_t exact_group_length(CayleyTable const& G, size_t max_subgroups) {
    size_t const e = require_identity(G);
    // Every subgroup chain refines to one where each step adjoins a single
    // element, so the longest path in the "adjoin one element" graph
    // starting at the trivial subgroup is l(G).
    std::unordered_map<ElementSet, size_t, ElementSetHash> id;
    std::vector<ElementSet>                                subgroups;
    std::vector<std::vector<size_t>>                       succ;
    ElementSet                                             trivial(G.size(), {e});
    id.emplace(trivial, 0);
    subgroups.push_back(trivial);
    succ.emplace_back();
    for (size_t i = 0; i < subgroups.size(); ++i) {
      for (size_t g = 0; g < G.size(); ++g) {
        if (subgroups[i].contains(g)) {
          continue;
        }
        size_t const extra[] = {g};
        ElementSet   H       = extend_closure(G, subgroups[i], extra);
        auto [it, inserted]  = id.emplace(H, subgroups.size());
        if (inserted) {
          if (subgroups.size() >= max_subgroups) {
            throw SearchTooLarge("more than " + std::to_string(max_subgroups)
                                 + " subgroups");
          }
          subgroups.push_back(std::move(H));
          succ.emplace_back();
        }
        succ[i].push_back(it->second);
      }
    }
    // successors are strictly larger, so process by decreasing order
    std::vector<size_t> order(subgroups.size());
    for (size_t i = 0; i < order.size(); ++i) {
      order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      return subgroups[a].count() > subgroups[b].count();
    });
    std::vector<size_t> longest(subgroups.size(), 0);
    for (size_t v : order) {
      for (size_t w : succ[v]) {
        longest[v] = std::max(longest[v], longest[w] + 1);
      }
    }
    return longest[0];
  }

  GroupLengthResult group_length(CayleyTable const& G, size_t max_subgroups) {
    require_identity(G);
    if (is_soluble(G)) {
      return {omega(G.size()), GroupLengthMethod::soluble_omega};
    }
    return {exact_group_length(G, max_subgroups),
            GroupLengthMethod::exact_search};
  }

}  // namespace semichain
