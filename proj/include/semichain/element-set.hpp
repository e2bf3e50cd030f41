// A set of element indices of one finite semigroup, stored as a bit vector.

#ifndef SEMICHAIN_ELEMENT_SET_HPP_
#define SEMICHAIN_ELEMENT_SET_HPP_

#include <bit>               // for countr_zero, popcount
#include <cstddef>           // for size_t
#include <cstdint>           // for uint64_t
#include <functional>        // for hash
#include <initializer_list>  // for initializer_list
#include <vector>            // for vector

namespace semichain {

  class ElementSet {
   public:
    ElementSet() = default;

    //! The empty subset of {0, ..., universe - 1}.
    explicit ElementSet(size_t universe)
        : _universe(universe), _words((universe + 63) / 64, 0) {}

    ElementSet(size_t universe, std::initializer_list<size_t> members);

    static ElementSet full(size_t universe);

    static ElementSet from_indices(size_t                     universe,
                                   std::vector<size_t> const& members);

    size_t universe() const noexcept {
      return _universe;
    }

    bool contains(size_t x) const noexcept {
      return (_words[x >> 6] >> (x & 63)) & 1;
    }

    void insert(size_t x) noexcept {
      _words[x >> 6] |= uint64_t(1) << (x & 63);
    }

    void erase(size_t x) noexcept {
      _words[x >> 6] &= ~(uint64_t(1) << (x & 63));
    }

    size_t count() const noexcept;

    bool empty() const noexcept;

    bool is_subset_of(ElementSet const& that) const noexcept;

    ElementSet& operator|=(ElementSet const& that) noexcept;
    ElementSet& operator&=(ElementSet const& that) noexcept;

    //! Complement relative to the universe.
    ElementSet complement() const;

    std::vector<size_t> members() const;

    //! Calls \p f on each member in increasing order.
    template <typename F>
    void for_each(F&& f) const {
      for (size_t w = 0; w < _words.size(); ++w) {
        uint64_t bits = _words[w];
        while (bits != 0) {
          f(w * 64 + static_cast<size_t>(std::countr_zero(bits)));
          bits &= bits - 1;
        }
      }
    }

    //! Index of the least member not in the set, or universe() if full.
    size_t first_missing() const noexcept;

    std::vector<uint64_t> const& words() const noexcept {
      return _words;
    }

    size_t hash() const noexcept;

    friend bool operator==(ElementSet const&, ElementSet const&) = default;

   private:
    size_t                _universe = 0;
    std::vector<uint64_t> _words;
  };

  //! Lexicographic comparison of the increasing member sequences.
  bool lex_less(ElementSet const& a, ElementSet const& b);

  //! Lexicographic comparison of two sequences of sets.
  bool lex_less(std::vector<ElementSet> const& a,
                std::vector<ElementSet> const& b);

  struct ElementSetHash {
    size_t operator()(ElementSet const& s) const noexcept {
      return s.hash();
    }
  };

}  // namespace semichain

#endif  // SEMICHAIN_ELEMENT_SET_HPP_
