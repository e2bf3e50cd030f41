#include "semichain/classify.hpp"

#include <unordered_map>  // for unordered_map

namespace semichain {

  bool is_group(CayleyTable const& S) {
    size_t const      n = S.size();
    std::vector<char> seen(n);
    for (size_t a = 0; a < n; ++a) {
      std::fill(seen.begin(), seen.end(), 0);
      for (size_t b = 0; b < n; ++b) {
        if (seen[S(a, b)]++) {
          return false;
        }
      }
      std::fill(seen.begin(), seen.end(), 0);
      for (size_t b = 0; b < n; ++b) {
        if (seen[S(b, a)]++) {
          return false;
        }
      }
    }
    return n > 0;
  }

  std::optional<size_t> find_identity(CayleyTable const& S) {
    for (size_t e = 0; e < S.size(); ++e) {
      bool ok = true;
      for (size_t x = 0; x < S.size() && ok; ++x) {
        ok = S(e, x) == x && S(x, e) == x;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  std::vector<size_t> idempotents(CayleyTable const& S) {
    std::vector<size_t> out;
    for (size_t x = 0; x < S.size(); ++x) {
      if (S(x, x) == x) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::pair<size_t, size_t> monogenic_index_period(CayleyTable const& S,
                                                   size_t             x) {
    // first_seen[p] is the exponent at which p first appeared as a power
    std::unordered_map<size_t, size_t> first_seen;
    size_t                             p = x;
    for (size_t k = 1;; ++k) {
      auto [it, inserted] = first_seen.emplace(p, k);
      if (!inserted) {
        return {it->second, k - it->second};
      }
      p = S(p, x);
    }
  }

  Classification classify(CayleyTable const& S) {
    Classification c;
    size_t const   n = S.size();

    c.band = true;
    for (size_t x = 0; x < n && c.band; ++x) {
      c.band = S(x, x) == x;
    }

    c.null = true;
    for (auto v : S.flat()) {
      if (v != S.flat()[0]) {
        c.null = false;
        break;
      }
    }

    c.group = is_group(S);

    c.completely_regular = true;
    for (size_t x = 0; x < n && c.completely_regular; ++x) {
      c.completely_regular = monogenic_index_period(S, x).first == 1;
    }

    // x is regular iff it has an inverse y (xyx = x, yxy = y); S is
    // inverse iff every x has exactly one
    c.regular  = true;
    c.inverse  = true;
    std::vector<size_t> inv(n, 0);
    for (size_t x = 0; x < n; ++x) {
      size_t found = 0;
      for (size_t y = 0; y < n; ++y) {
        if (S(S(x, y), x) == x && S(S(y, x), y) == y) {
          inv[x] = y;
          if (++found > 1) {
            break;
          }
        }
      }
      if (found == 0) {
        c.regular = false;
        c.inverse = false;
        break;
      } else if (found > 1) {
        c.inverse = false;
      }
    }
    if (c.inverse) {
      c.inverse_of = std::move(inv);
    }
    return c;
  }

}  // namespace semichain
