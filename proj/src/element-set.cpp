#include "semichain/element-set.hpp"

#include <algorithm>  // for lexicographical_compare

namespace semichain {

  ElementSet::ElementSet(size_t universe, std::initializer_list<size_t> xs)
      : ElementSet(universe) {
    for (size_t x : xs) {
      insert(x);
    }
  }

  ElementSet ElementSet::full(size_t universe) {
    ElementSet s(universe);
    for (size_t x = 0; x < universe; ++x) {
      s.insert(x);
    }
    return s;
  }

  ElementSet ElementSet::from_indices(size_t                     universe,
                                      std::vector<size_t> const& members) {
    ElementSet s(universe);
    for (size_t x : members) {
      s.insert(x);
    }
    return s;
  }

  size_t ElementSet::count() const noexcept {
    size_t c = 0;
    for (uint64_t w : _words) {
      c += static_cast<size_t>(std::popcount(w));
    }
    return c;
  }

  bool ElementSet::empty() const noexcept {
    for (uint64_t w : _words) {
      if (w != 0) {
        return false;
      }
    }
    return true;
  }

  bool ElementSet::is_subset_of(ElementSet const& that) const noexcept {
    for (size_t i = 0; i < _words.size(); ++i) {
      if ((_words[i] & ~that._words[i]) != 0) {
        return false;
      }
    }
    return true;
  }

  ElementSet& ElementSet::operator|=(ElementSet const& that) noexcept {
    for (size_t i = 0; i < _words.size(); ++i) {
      _words[i] |= that._words[i];
    }
    return *this;
  }

  ElementSet& ElementSet::operator&=(ElementSet const& that) noexcept {
    for (size_t i = 0; i < _words.size(); ++i) {
      _words[i] &= that._words[i];
    }
    return *this;
  }

  ElementSet ElementSet::complement() const {
    ElementSet r(_universe);
    for (size_t x = 0; x < _universe; ++x) {
      if (!contains(x)) {
        r.insert(x);
      }
    }
    return r;
  }

  std::vector<size_t> ElementSet::members() const {
    std::vector<size_t> out;
    out.reserve(count());
    for_each([&out](size_t x) { out.push_back(x); });
    return out;
  }

  size_t ElementSet::first_missing() const noexcept {
    for (size_t w = 0; w < _words.size(); ++w) {
      if (~_words[w] != 0) {
        size_t x = w * 64 + static_cast<size_t>(std::countr_zero(~_words[w]));
        return x < _universe ? x : _universe;
      }
    }
    return _universe;
  }

  size_t ElementSet::hash() const noexcept {
    // FNV-1a over the words
    size_t h = 1469598103934665603ULL;
    for (uint64_t w : _words) {
      h ^= static_cast<size_t>(w);
      h *= 1099511628211ULL;
    }
    return h;
  }

  bool lex_less(ElementSet const& a, ElementSet const& b) {
    auto const x = a.members();
    auto const y = b.members();
    return std::lexicographical_compare(x.cbegin(), x.cend(), y.cbegin(),
                                        y.cend());
  }

  bool lex_less(std::vector<ElementSet> const& a,
                std::vector<ElementSet> const& b) {
    return std::lexicographical_compare(
        a.cbegin(),
        a.cend(),
        b.cbegin(),
        b.cend(),
        [](ElementSet const& x, ElementSet const& y) {
          return lex_less(x, y);
        });
  }

}  // namespace semichain
