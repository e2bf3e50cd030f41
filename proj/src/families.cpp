#include "semichain/families.hpp"

#include <algorithm>      // for is_sorted, all_of
#include <charconv>       // for from_chars
#include <cstdint>        // for uint8_t, uint64_t
#include <numeric>        // for iota
#include <unordered_map>  // for unordered_map
#include <utility>        // for move

#include "semichain/classify.hpp"
#include "semichain/exception.hpp"
#include "semichain/formulas.hpp"

namespace semichain {

  namespace {
    using value_type = CayleyTable::value_type;

    // A (partial) map on {0..n-1}; `undefined` marks points outside the
    // domain.
    using Map                   = std::vector<uint8_t>;
    constexpr uint8_t undefined = 0xFF;

    uint64_t key(Map const& f) {
      uint64_t k = 0;
      for (uint8_t x : f) {
        k = (k << 4) | (x == undefined ? 0u : x + 1u);
      }
      return k;
    }

    Map compose(Map const& f, Map const& g) {
      Map r(f.size());
      for (size_t i = 0; i < f.size(); ++i) {
        r[i] = f[i] == undefined ? undefined : g[f[i]];
      }
      return r;
    }

    std::string map_label(Map const& f) {
      std::string s = "[";
      for (size_t i = 0; i < f.size(); ++i) {
        s += (i == 0 ? "" : ",");
        s += f[i] == undefined ? std::string("-") : std::to_string(f[i] + 1);
      }
      return s + "]";
    }

    CayleyTable table_of_maps(std::vector<Map> const& maps) {
      std::unordered_map<uint64_t, value_type> index;
      for (size_t i = 0; i < maps.size(); ++i) {
        index.emplace(key(maps[i]), static_cast<value_type>(i));
      }
      size_t const             m = maps.size();
      std::vector<value_type>  table(m * m);
      std::vector<std::string> labels;
      labels.reserve(m);
      for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j) {
          table[i * m + j] = index.at(key(compose(maps[i], maps[j])));
        }
        labels.push_back(map_label(maps[i]));
      }
      return CayleyTable::make_unchecked(m, std::move(table), std::move(labels));
    }

    // All total maps in lexicographic order of the image tuple.
    std::vector<Map> all_maps(size_t n) {
      std::vector<Map> out;
      Map              f(n, 0);
      while (true) {
        out.push_back(f);
        size_t i = n;
        while (i > 0 && f[i - 1] == n - 1) {
          f[i - 1] = 0;
          --i;
        }
        if (i == 0) {
          return out;
        }
        ++f[i - 1];
      }
    }

    // All partial injections, ordered by the image tuple with "undefined"
    // least.
    std::vector<Map> all_partial_injections(size_t n) {
      std::vector<Map> out;
      std::vector<int> digit(n, 0);  // 0 = undefined, k = point k - 1
      while (true) {
        std::vector<bool> used(n, false);
        bool              ok = true;
        Map               f(n, undefined);
        for (size_t i = 0; i < n && ok; ++i) {
          if (digit[i] != 0) {
            auto const y = static_cast<size_t>(digit[i] - 1);
            ok           = !used[y];
            used[y]      = true;
            f[i]         = static_cast<uint8_t>(y);
          }
        }
        if (ok) {
          out.push_back(f);
        }
        size_t i = n;
        while (i > 0 && digit[i - 1] == static_cast<int>(n)) {
          digit[i - 1] = 0;
          --i;
        }
        if (i == 0) {
          return out;
        }
        ++digit[i - 1];
      }
    }

    std::vector<uint8_t> image_sequence(Map const& f) {
      std::vector<uint8_t> seq;
      for (uint8_t y : f) {
        if (y != undefined) {
          seq.push_back(y);
        }
      }
      return seq;
    }

    bool is_order_preserving_injection(Map const& f) {
      auto const seq = image_sequence(f);
      return std::is_sorted(seq.cbegin(), seq.cend());
    }

    // A sequence of distinct values is a rotation of an increasing sequence
    // iff at most one cyclically consecutive pair descends.
    bool is_orientation_preserving_injection(Map const& f) {
      auto const   seq      = image_sequence(f);
      size_t const d        = seq.size();
      size_t       descents = 0;
      for (size_t i = 0; i < d; ++i) {
        if (seq[i] > seq[(i + 1) % d]) {
          ++descents;
        }
      }
      return descents <= 1;
    }

    size_t checked_size(FamilySpec const& spec, size_t cap) {
      BigNat const size = family_size(spec);
      if (size > big(cap)) {
        throw SizeCapExceeded(describe(spec) + " has " + size.get_str()
                              + " elements, more than the cap of "
                              + std::to_string(cap));
      }
      return static_cast<size_t>(to_u64(size));
    }

    void require_positive(size_t x, char const* what) {
      if (x == 0) {
        throw UnsupportedFamily(std::string(what) + " must be at least 1");
      }
    }

    void require_group(CayleyTable const& G) {
      if (G.size() == 0 || !is_group(G)) {
        throw UnsupportedFamily("the given table is not a group");
      }
    }

    CayleyTable cyclic_group(size_t n) {
      std::vector<value_type>  table(n * n);
      std::vector<std::string> labels;
      for (size_t a = 0; a < n; ++a) {
        for (size_t b = 0; b < n; ++b) {
          table[a * n + b] = static_cast<value_type>((a + b) % n);
        }
        labels.push_back(a == 0 ? std::string("e") : "g^" + std::to_string(a));
      }
      return CayleyTable::make_unchecked(n, std::move(table), std::move(labels));
    }

    CayleyTable symmetric_group(size_t n) {
      std::vector<Map> perms;
      Map              p(n);
      std::iota(p.begin(), p.end(), uint8_t(0));
      do {
        perms.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      return table_of_maps(perms);
    }

    struct Builder {
      CayleyTable operator()(family::FullTransformation const& s) const {
        require_positive(s.n, "n");
        return table_of_maps(all_maps(s.n));
      }

      CayleyTable operator()(family::OrderPreserving const& s) const {
        require_positive(s.n, "n");
        std::vector<Map> maps;
        for (auto& f : all_maps(s.n)) {
          if (std::is_sorted(f.cbegin(), f.cend())) {
            maps.push_back(std::move(f));
          }
        }
        return table_of_maps(maps);
      }

      CayleyTable operator()(family::SymmetricInverse const& s) const {
        require_positive(s.n, "n");
        return table_of_maps(all_partial_injections(s.n));
      }

      CayleyTable operator()(family::POI const& s) const {
        require_positive(s.n, "n");
        std::vector<Map> maps;
        for (auto& f : all_partial_injections(s.n)) {
          if (is_order_preserving_injection(f)) {
            maps.push_back(std::move(f));
          }
        }
        return table_of_maps(maps);
      }

      CayleyTable operator()(family::POPI const& s) const {
        require_positive(s.n, "n");
        std::vector<Map> maps;
        for (auto& f : all_partial_injections(s.n)) {
          if (is_orientation_preserving_injection(f)) {
            maps.push_back(std::move(f));
          }
        }
        return table_of_maps(maps);
      }

      CayleyTable operator()(family::Brandt const& s) const {
        require_positive(s.n, "n");
        require_group(s.group);
        auto const& G  = s.group;
        size_t const g = G.size();
        size_t const n = s.n;
        size_t const m = n * n * g + 1;
        // element 0 is the zero, (i, x, j) is 1 + (i * g + x) * n + j
        auto idx = [&](size_t i, size_t x, size_t j) {
          return static_cast<value_type>(1 + (i * g + x) * n + j);
        };
        std::vector<value_type>  table(m * m, 0);
        std::vector<std::string> labels(m, "0");
        for (size_t i = 0; i < n; ++i) {
          for (size_t x = 0; x < g; ++x) {
            for (size_t j = 0; j < n; ++j) {
              size_t const a = idx(i, x, j);
              labels[a] = "(" + std::to_string(i + 1) + "," + G.label(x) + ","
                          + std::to_string(j + 1) + ")";
              for (size_t y = 0; y < g; ++y) {
                for (size_t l = 0; l < n; ++l) {
                  table[a * m + idx(j, y, l)] = idx(i, G(x, y), l);
                }
              }
            }
          }
        }
        return CayleyTable::make_unchecked(m, std::move(table), std::move(labels));
      }

      CayleyTable operator()(family::ReesMatrixOverGroup const& s) const {
        require_positive(s.rows, "rows");
        require_positive(s.cols, "cols");
        require_group(s.group);
        auto const&  G = s.group;
        size_t const g = G.size();
        size_t const e = *find_identity(G);
        std::vector<std::vector<size_t>> P = s.matrix;
        if (P.empty()) {
          P.assign(s.cols, std::vector<size_t>(s.rows, e));
        }
        if (P.size() != s.cols) {
          throw UnsupportedFamily("the sandwich matrix must have one row per "
                                  "column index");
        }
        for (auto const& r : P) {
          if (r.size() != s.rows
              || !std::all_of(r.cbegin(), r.cend(), [g](size_t x) {
                   return x < g;
                 })) {
            throw UnsupportedFamily("malformed sandwich matrix");
          }
        }
        size_t const m   = s.rows * g * s.cols;
        auto         idx = [&](size_t i, size_t x, size_t l) {
          return static_cast<value_type>((i * g + x) * s.cols + l);
        };
        std::vector<value_type>  table(m * m);
        std::vector<std::string> labels(m);
        for (size_t i = 0; i < s.rows; ++i) {
          for (size_t x = 0; x < g; ++x) {
            for (size_t l = 0; l < s.cols; ++l) {
              size_t const a = idx(i, x, l);
              labels[a] = "(" + std::to_string(i + 1) + "," + G.label(x) + ","
                          + std::to_string(l + 1) + ")";
              for (size_t j = 0; j < s.rows; ++j) {
                for (size_t y = 0; y < g; ++y) {
                  for (size_t k = 0; k < s.cols; ++k) {
                    table[a * m + idx(j, y, k)]
                        = idx(i, G(G(x, P[l][j]), y), k);
                  }
                }
              }
            }
          }
        }
        return CayleyTable::make_unchecked(m, std::move(table), std::move(labels));
      }

      CayleyTable operator()(family::Null const& s) const {
        require_positive(s.m, "m");
        std::vector<std::string> labels{"0"};
        for (size_t a = 1; a < s.m; ++a) {
          labels.push_back("a" + std::to_string(a));
        }
        return CayleyTable::make_unchecked(
            s.m, std::vector<value_type>(s.m * s.m, 0), std::move(labels));
      }

      CayleyTable operator()(family::CyclicGroup const& s) const {
        require_positive(s.n, "n");
        return cyclic_group(s.n);
      }

      CayleyTable operator()(family::SymmetricGroup const& s) const {
        require_positive(s.n, "n");
        return symmetric_group(s.n);
      }

      CayleyTable operator()(family::Monogenic const& s) const {
        require_positive(s.index, "index");
        require_positive(s.period, "period");
        // element k - 1 is s^k for 1 <= k <= index + period - 1
        size_t const top = s.index + s.period - 1;
        auto reduce = [&](size_t e) {
          while (e > top) {
            e -= s.period;
          }
          return e;
        };
        std::vector<value_type>  table(top * top);
        std::vector<std::string> labels;
        for (size_t a = 1; a <= top; ++a) {
          for (size_t b = 1; b <= top; ++b) {
            table[(a - 1) * top + (b - 1)]
                = static_cast<value_type>(reduce(a + b) - 1);
          }
          labels.push_back(a == 1 ? std::string("s") : "s^" + std::to_string(a));
        }
        return CayleyTable::make_unchecked(top, std::move(table), std::move(labels));
      }

      CayleyTable operator()(family::FreeBand2 const&) const {
        // Words over {a, b}; in the free band an element with both letters
        // is determined by its first and last letter.
        static constexpr char const* words[] = {"a", "b", "ab", "ba", "aba", "bab"};
        auto lookup = [](std::string const& w) -> value_type {
          bool const has_a = w.find('a') != std::string::npos;
          bool const has_b = w.find('b') != std::string::npos;
          if (!has_b) {
            return 0;
          } else if (!has_a) {
            return 1;
          }
          char const f = w.front(), l = w.back();
          if (f == 'a') {
            return l == 'b' ? 2 : 4;
          }
          return l == 'a' ? 3 : 5;
        };
        std::vector<value_type> table(36);
        for (size_t x = 0; x < 6; ++x) {
          for (size_t y = 0; y < 6; ++y) {
            table[x * 6 + y] = lookup(std::string(words[x]) + words[y]);
          }
        }
        return CayleyTable::make_unchecked(
            6,
            std::move(table),
            std::vector<std::string>(std::begin(words), std::end(words)));
      }
    };

    struct Sizer {
      BigNat operator()(family::FullTransformation const& s) const {
        return pow(big(s.n), s.n);
      }
      BigNat operator()(family::OrderPreserving const& s) const {
        return s.n == 0 ? BigNat(0) : binomial(2 * s.n - 1, s.n);
      }
      BigNat operator()(family::SymmetricInverse const& s) const {
        return symmetric_inverse_order(s.n);
      }
      BigNat operator()(family::POI const& s) const {
        return binomial(2 * s.n, s.n);
      }
      BigNat operator()(family::POPI const& s) const {
        // 1 + (n / 2) C(2n, n); C(2n, n) is even for n >= 1
        return s.n == 0 ? BigNat(1) : 1 + big(s.n) * binomial(2 * s.n, s.n) / 2;
      }
      BigNat operator()(family::Brandt const& s) const {
        return big(s.n) * big(s.n) * big(s.group.size()) + 1;
      }
      BigNat operator()(family::ReesMatrixOverGroup const& s) const {
        return big(s.rows) * big(s.group.size()) * big(s.cols);
      }
      BigNat operator()(family::Null const& s) const {
        return big(s.m);
      }
      BigNat operator()(family::CyclicGroup const& s) const {
        return big(s.n);
      }
      BigNat operator()(family::SymmetricGroup const& s) const {
        return factorial(s.n);
      }
      BigNat operator()(family::Monogenic const& s) const {
        return s.index + s.period == 0 ? BigNat(0)
                                       : big(s.index + s.period - 1);
      }
      BigNat operator()(family::FreeBand2 const&) const {
        return 6;
      }
    };

    size_t parse_count(std::string_view s, std::string_view whole) {
      size_t v   = 0;
      auto   res = std::from_chars(s.data(), s.data() + s.size(), v);
      if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
        throw ParseError("bad number '" + std::string(s) + "' in family spec '"
                         + std::string(whole) + "'");
      }
      return v;
    }

    CayleyTable parse_group(std::string_view g, std::string_view whole) {
      if (g == "triv") {
        return cyclic_group(1);
      } else if (g.size() > 1 && g[0] == 'c') {
        auto const n = parse_count(g.substr(1), whole);
        require_positive(n, "group order");
        return cyclic_group(n);
      } else if (g.size() > 1 && g[0] == 's') {
        auto const n = parse_count(g.substr(1), whole);
        require_positive(n, "symmetric degree");
        if (n > 6) {
          throw UnsupportedFamily("symmetric groups of degree above 6 are "
                                  "not supported as Brandt coefficients");
        }
        return symmetric_group(n);
      }
      throw ParseError("unknown group '" + std::string(g)
                       + "' (expected triv, c<k> or s<k>)");
    }

    std::string group_name(CayleyTable const& G) {
      if (G.size() == 1) {
        return "triv";
      }
      if (G == cyclic_group(G.size())) {
        return "c" + std::to_string(G.size());
      }
      for (size_t k = 3; k <= 6; ++k) {
        if (factorial(k) == big(G.size()) && G == symmetric_group(k)) {
          return "s" + std::to_string(k);
        }
      }
      return "group" + std::to_string(G.size());
    }
  }  // namespace

  CayleyTable build_family(FamilySpec const& spec, size_t cap) {
    checked_size(spec, cap);
    return std::visit(Builder{}, spec);
  }

  BigNat family_size(FamilySpec const& spec) {
    return std::visit(Sizer{}, spec);
  }

  FamilySpec parse_family(std::string_view text) {
    auto const        colon = text.find(':');
    std::string_view  name  = text.substr(0, colon);
    std::string_view  args
        = colon == std::string_view::npos ? std::string_view() : text.substr(colon + 1);
    auto one = [&]() { return parse_count(args, text); };
    auto two = [&](size_t& x, size_t& y) {
      auto const comma = args.find(',');
      if (comma == std::string_view::npos) {
        throw ParseError("family spec '" + std::string(text)
                         + "' needs two comma separated parameters");
      }
      x = parse_count(args.substr(0, comma), text);
      y = parse_count(args.substr(comma + 1), text);
    };
    if (name == "fb2" && colon == std::string_view::npos) {
      return family::FreeBand2{};
    }
    if (colon == std::string_view::npos) {
      throw ParseError("family spec '" + std::string(text)
                       + "' is missing its parameters");
    }
    if (name == "T") {
      return family::FullTransformation{one()};
    } else if (name == "O") {
      return family::OrderPreserving{one()};
    } else if (name == "I") {
      return family::SymmetricInverse{one()};
    } else if (name == "POI") {
      return family::POI{one()};
    } else if (name == "POPI") {
      return family::POPI{one()};
    } else if (name == "null") {
      return family::Null{one()};
    } else if (name == "cyc") {
      return family::CyclicGroup{one()};
    } else if (name == "sym") {
      return family::SymmetricGroup{one()};
    } else if (name == "mono") {
      size_t m, r;
      two(m, r);
      return family::Monogenic{m, r};
    } else if (name == "brandt") {
      auto const comma = args.find(',');
      if (comma == std::string_view::npos) {
        throw ParseError("brandt spec needs <group>,<n>");
      }
      return family::Brandt{parse_group(args.substr(0, comma), text),
                            parse_count(args.substr(comma + 1), text)};
    } else if (name == "Istar") {
      throw UnsupportedFamily("the dual symmetric inverse monoid has no table "
                              "constructor; use the formula method");
    }
    throw ParseError("unknown family '" + std::string(name) + "'");
  }

  std::string describe(FamilySpec const& spec) {
    struct Describe {
      std::string operator()(family::FullTransformation const& s) const {
        return "T:" + std::to_string(s.n);
      }
      std::string operator()(family::OrderPreserving const& s) const {
        return "O:" + std::to_string(s.n);
      }
      std::string operator()(family::SymmetricInverse const& s) const {
        return "I:" + std::to_string(s.n);
      }
      std::string operator()(family::POI const& s) const {
        return "POI:" + std::to_string(s.n);
      }
      std::string operator()(family::POPI const& s) const {
        return "POPI:" + std::to_string(s.n);
      }
      std::string operator()(family::Brandt const& s) const {
        return "brandt:" + group_name(s.group) + "," + std::to_string(s.n);
      }
      std::string operator()(family::ReesMatrixOverGroup const& s) const {
        return "rees:" + group_name(s.group) + "," + std::to_string(s.rows)
               + "x" + std::to_string(s.cols);
      }
      std::string operator()(family::Null const& s) const {
        return "null:" + std::to_string(s.m);
      }
      std::string operator()(family::CyclicGroup const& s) const {
        return "cyc:" + std::to_string(s.n);
      }
      std::string operator()(family::SymmetricGroup const& s) const {
        return "sym:" + std::to_string(s.n);
      }
      std::string operator()(family::Monogenic const& s) const {
        return "mono:" + std::to_string(s.index) + ","
               + std::to_string(s.period);
      }
      std::string operator()(family::FreeBand2 const&) const {
        return "fb2";
      }
    };
    return std::visit(Describe{}, spec);
  }

  size_t full_transformation_index(std::span<size_t const> images) {
    size_t const n   = images.size();
    size_t       idx = 0;
    for (size_t y : images) {
      if (y >= n) {
        throw IndexOutOfRange("image " + std::to_string(y) + " out of range");
      }
      idx = idx * n + y;
    }
    return idx;
  }

}  // namespace semichain
