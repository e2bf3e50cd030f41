// Finite semigroups given by their multiplication table.

#ifndef SEMICHAIN_CAYLEY_TABLE_HPP_
#define SEMICHAIN_CAYLEY_TABLE_HPP_

#include <cstddef>      // for size_t
#include <cstdint>      // for uint32_t
#include <span>         // for span
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include "element-set.hpp"

namespace semichain {

  //! A finite semigroup on the elements {0, ..., size() - 1}.
  //!
  //! Instances are immutable. The only ways to obtain one are
  //! validate_table, which checks every triple for associativity, and the
  //! constructors in this library whose output is associative by
  //! construction (families, quotients, subtables).
  class CayleyTable {
   public:
    using value_type = uint32_t;

    CayleyTable() = default;

    size_t size() const noexcept {
      return _size;
    }

    value_type operator()(size_t a, size_t b) const noexcept {
      return _table[a * _size + b];
    }

    std::span<value_type const> row(size_t a) const noexcept {
      return {_table.data() + a * _size, _size};
    }

    std::vector<value_type> const& flat() const noexcept {
      return _table;
    }

    //! Per-element display strings; empty when the table carries none.
    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    //! The label of \p a if present, otherwise its index.
    std::string label(size_t a) const;

    //! Trusted constructor: the caller guarantees the table is associative
    //! and every entry is in range.
    static CayleyTable make_unchecked(size_t                   n,
                                      std::vector<value_type>  table,
                                      std::vector<std::string> labels = {});

    friend bool operator==(CayleyTable const&, CayleyTable const&) = default;

   private:
    size_t                   _size = 0;
    std::vector<value_type>  _table;
    std::vector<std::string> _labels;
  };

  //! Checks dimensions, entry ranges and associativity (all size^3
  //! triples). Throws IndexOutOfRange, NonAssociative or ParseError.
  CayleyTable validate_table(size_t                          n,
                             std::vector<CayleyTable::value_type> table,
                             std::vector<std::string>        labels = {});

  //! Finds a non-associative triple, if any.
  bool find_nonassociative_triple(size_t                                n,
                                  std::vector<CayleyTable::value_type> const& t,
                                  size_t& a,
                                  size_t& b,
                                  size_t& c);

  //! Reads the plain text format: a line with n, then n rows of n
  //! whitespace separated 0-based indices, then optional "# label" lines.
  CayleyTable parse_table_text(std::string_view text);

  std::string to_text(CayleyTable const& S);

  //! The subsemigroup on the members of a closed set \p T, reindexed in
  //! increasing order of the original indices. Labels are carried over.
  CayleyTable subtable(CayleyTable const& S, ElementSet const& T);

  //! True if T * T is contained in T.
  bool is_closed(CayleyTable const& S, ElementSet const& T);

}  // namespace semichain

#endif  // SEMICHAIN_CAYLEY_TABLE_HPP_
