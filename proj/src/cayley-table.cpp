#include "semichain/cayley-table.hpp"

#include <sstream>  // for istringstream, ostringstream
#include <utility>  // for move

#include "semichain/exception.hpp"

namespace semichain {

  std::string CayleyTable::label(size_t a) const {
    if (a < _labels.size()) {
      return _labels[a];
    }
    return std::to_string(a);
  }

  CayleyTable CayleyTable::make_unchecked(size_t                   n,
                                          std::vector<value_type>  table,
                                          std::vector<std::string> labels) {
    CayleyTable S;
    S._size   = n;
    S._table  = std::move(table);
    S._labels = std::move(labels);
    return S;
  }

  bool find_nonassociative_triple(size_t                                n,
                                  std::vector<CayleyTable::value_type> const& t,
                                  size_t& a,
                                  size_t& b,
                                  size_t& c) {
    for (a = 0; a < n; ++a) {
      for (b = 0; b < n; ++b) {
        size_t const ab = t[a * n + b];
        for (c = 0; c < n; ++c) {
          if (t[ab * n + c] != t[a * n + t[b * n + c]]) {
            return true;
          }
        }
      }
    }
    return false;
  }

  CayleyTable validate_table(size_t                               n,
                             std::vector<CayleyTable::value_type> table,
                             std::vector<std::string>             labels) {
    if (n == 0) {
      throw ParseError("a semigroup table must have at least one element");
    }
    if (table.size() != n * n) {
      throw ParseError("expected " + std::to_string(n * n)
                       + " table entries, found "
                       + std::to_string(table.size()));
    }
    if (!labels.empty() && labels.size() != n) {
      throw ParseError("expected " + std::to_string(n) + " labels, found "
                       + std::to_string(labels.size()));
    }
    for (size_t i = 0; i < table.size(); ++i) {
      if (table[i] >= n) {
        throw IndexOutOfRange("entry " + std::to_string(table[i])
                              + " at row " + std::to_string(i / n)
                              + ", column " + std::to_string(i % n)
                              + " is not less than " + std::to_string(n));
      }
    }
    size_t a, b, c;
    if (find_nonassociative_triple(n, table, a, b, c)) {
      throw NonAssociative(a, b, c);
    }
    return CayleyTable::make_unchecked(n, std::move(table), std::move(labels));
  }

  CayleyTable parse_table_text(std::string_view text) {
    std::istringstream       in{std::string(text)};
    std::string              line;
    std::vector<std::string> rows;
    std::vector<std::string> labels;
    while (std::getline(in, line)) {
      auto const first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) {
        continue;
      }
      if (line[first] == '#') {
        auto start = line.find_first_not_of(" \t", first + 1);
        auto end   = line.find_last_not_of(" \t\r");
        labels.push_back(start == std::string::npos
                             ? std::string()
                             : line.substr(start, end - start + 1));
      } else {
        if (!labels.empty()) {
          throw ParseError("table rows must precede the label lines");
        }
        rows.push_back(line);
      }
    }
    if (rows.empty()) {
      throw ParseError("empty table file");
    }
    long long          n = -1;
    std::istringstream head(rows[0]);
    if (!(head >> n) || n <= 0) {
      throw ParseError("first line must be a positive element count");
    }
    std::string rest;
    if (head >> rest) {
      throw ParseError("unexpected text after the element count");
    }
    auto const size = static_cast<size_t>(n);
    if (rows.size() != size + 1) {
      throw ParseError("expected " + std::to_string(size) + " table rows, found "
                       + std::to_string(rows.size() - 1));
    }
    std::vector<CayleyTable::value_type> table;
    table.reserve(size * size);
    for (size_t r = 1; r <= size; ++r) {
      std::istringstream row(rows[r]);
      std::string        tok;
      size_t             count = 0;
      while (row >> tok) {
        size_t pos = 0;
        long long v = -1;
        try {
          v = std::stoll(tok, &pos);
        } catch (std::exception const&) {
          pos = 0;
        }
        if (pos != tok.size()) {
          throw ParseError("row " + std::to_string(r) + ": '" + tok
                           + "' is not an integer");
        }
        if (v < 0 || static_cast<unsigned long long>(v) >= size) {
          throw IndexOutOfRange("row " + std::to_string(r) + ": entry "
                                + tok + " is not in [0, "
                                + std::to_string(size) + ")");
        }
        table.push_back(static_cast<CayleyTable::value_type>(v));
        ++count;
      }
      if (count != size) {
        throw ParseError("row " + std::to_string(r) + " has "
                         + std::to_string(count) + " entries, expected "
                         + std::to_string(size));
      }
    }
    return validate_table(size, std::move(table), std::move(labels));
  }

  std::string to_text(CayleyTable const& S) {
    std::ostringstream out;
    out << S.size() << '\n';
    for (size_t a = 0; a < S.size(); ++a) {
      for (size_t b = 0; b < S.size(); ++b) {
        out << (b == 0 ? "" : " ") << S(a, b);
      }
      out << '\n';
    }
    for (auto const& l : S.labels()) {
      out << "# " << l << '\n';
    }
    return out.str();
  }

  CayleyTable subtable(CayleyTable const& S, ElementSet const& T) {
    auto const                           members = T.members();
    std::vector<CayleyTable::value_type> index(S.size(), 0);
    for (size_t i = 0; i < members.size(); ++i) {
      index[members[i]] = static_cast<CayleyTable::value_type>(i);
    }
    size_t const                         m = members.size();
    std::vector<CayleyTable::value_type> table(m * m);
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = 0; j < m; ++j) {
        table[i * m + j] = index[S(members[i], members[j])];
      }
    }
    std::vector<std::string> labels;
    if (!S.labels().empty()) {
      for (size_t x : members) {
        labels.push_back(S.labels()[x]);
      }
    }
    return CayleyTable::make_unchecked(m, std::move(table), std::move(labels));
  }

  bool is_closed(CayleyTable const& S, ElementSet const& T) {
    auto const members = T.members();
    for (size_t x : members) {
      for (size_t y : members) {
        if (!T.contains(S(x, y))) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace semichain
