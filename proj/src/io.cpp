#include "semichain/io.hpp"

#include <cctype>  // for isspace

#include "semichain/exception.hpp"

namespace semichain {

  namespace {
    // Runs f, turning JSON type errors into ParseError.
    template <typename F>
    auto parsing(char const* what, F&& f) -> decltype(f()) {
      try {
        return f();
      } catch (json::exception const& e) {
        throw ParseError(std::string("malformed ") + what + ": " + e.what());
      }
    }
  }  // namespace

  json to_json(CayleyTable const& S) {
    json table = json::array();
    for (size_t a = 0; a < S.size(); ++a) {
      json row = json::array();
      for (size_t b = 0; b < S.size(); ++b) {
        row.push_back(S(a, b));
      }
      table.push_back(std::move(row));
    }
    json j = {{"size", S.size()}, {"table", std::move(table)}};
    if (!S.labels().empty()) {
      j["labels"] = S.labels();
    }
    return j;
  }

  CayleyTable cayley_table_from_json(json const& j) {
    size_t                              n;
    std::vector<CayleyTable::value_type> flat;
    std::vector<std::string>            labels;
    parsing("table", [&] {
      n = j.at("size").get<size_t>();
      auto const& rows = j.at("table");
      if (!rows.is_array() || rows.size() != n) {
        throw ParseError("table must have " + std::to_string(n) + " rows");
      }
      for (auto const& row : rows) {
        if (!row.is_array() || row.size() != n) {
          throw ParseError("every row must have " + std::to_string(n)
                           + " entries");
        }
        for (auto const& x : row) {
          auto const v = x.get<long long>();
          if (v < 0 || static_cast<unsigned long long>(v) >= n) {
            throw IndexOutOfRange("table entry " + std::to_string(v)
                                  + " is not below " + std::to_string(n));
          }
          flat.push_back(static_cast<CayleyTable::value_type>(v));
        }
      }
      if (j.contains("labels")) {
        labels = j.at("labels").get<std::vector<std::string>>();
      }
      return 0;
    });
    return validate_table(n, flat, labels);
  }

  CayleyTable parse_table(std::string_view text) {
    size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    if (i < text.size() && text[i] == '{') {
      json j;
      try {
        j = json::parse(text);
      } catch (json::exception const& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
      }
      return cayley_table_from_json(j);
    }
    return parse_table_text(text);
  }

  json to_json(ChainCertificate const& c) {
    json subsets = json::array();
    for (auto const& U : c.subsets) {
      subsets.push_back(U.members());
    }
    return {{"kind", to_string(c.kind)},
            {"length", c.length()},
            {"subsets", std::move(subsets)}};
  }

  ChainCertificate certificate_from_json(json const& j, size_t universe) {
    return parsing("certificate", [&] {
      ChainCertificate c;
      auto const       kind = j.at("kind").get<std::string>();
      if (kind == to_string(ChainKind::subsemigroup)) {
        c.kind = ChainKind::subsemigroup;
      } else if (kind == to_string(ChainKind::inverse_subsemigroup)) {
        c.kind = ChainKind::inverse_subsemigroup;
      } else {
        throw ParseError("unknown chain kind " + kind);
      }
      for (auto const& s : j.at("subsets")) {
        ElementSet U(universe);
        for (auto x : s.get<std::vector<size_t>>()) {
          if (x >= universe) {
            throw IndexOutOfRange("element " + std::to_string(x)
                                  + " out of range");
          }
          U.insert(x);
        }
        c.subsets.push_back(std::move(U));
      }
      if (j.contains("length") && j.at("length").get<size_t>() != c.length()) {
        throw ParseError("length does not match the number of subsets");
      }
      return c;
    });
  }

  json to_json(League const& L) {
    json partitions = json::array();
    for (auto const& Q : L.partitions) {
      partitions.push_back(Q.blocks);
    }
    return {{"n", L.n},
            {"k", L.k},
            {"interval", L.interval},
            {"partitions", std::move(partitions)},
            {"subsets", L.subsets},
            {"content", to_string(L.content())}};
  }

  League league_from_json(json const& j) {
    return parsing("league", [&] {
      League L;
      L.n        = j.at("n").get<size_t>();
      L.k        = j.at("k").get<size_t>();
      L.interval = j.value("interval", false);
      for (auto const& blocks : j.at("partitions")) {
        SetPartition Q;
        Q.n      = L.n;
        Q.blocks = blocks.get<std::vector<std::vector<size_t>>>();
        L.partitions.push_back(std::move(Q));
      }
      L.subsets = j.at("subsets").get<std::vector<std::vector<size_t>>>();
      if (j.contains("content")) {
        auto const& c = j.at("content");
        std::string const s
            = c.is_string() ? c.get<std::string>() : std::to_string(c.get<size_t>());
        if (s != to_string(L.content())) {
          throw ParseError("content does not match the league");
        }
      }
      return L;
    });
  }

  json to_json(LeagueSearchResult const& r) {
    return {{"optimum", r.optimum},
            {"status", to_string(r.status)},
            {"nodesExplored", r.nodes_explored},
            {"witness", to_json(r.witness)}};
  }

  json to_json(PaperTable const& t) {
    json discrepancies = json::array();
    for (auto const& d : t.discrepancies) {
      discrepancies.push_back({{"row", d.row},
                               {"column", d.column},
                               {"computed", d.computed},
                               {"printed", d.printed},
                               {"note", d.note}});
    }
    return {{"id", t.id},
            {"title", t.title},
            {"columns", t.columns},
            {"rows", t.rows},
            {"printed", t.printed},
            {"discrepancies", std::move(discrepancies)},
            {"notes", t.notes}};
  }

  PaperTable paper_table_from_json(json const& j) {
    return parsing("table report", [&] {
      PaperTable t;
      t.id      = j.at("id").get<size_t>();
      t.title   = j.at("title").get<std::string>();
      t.columns = j.at("columns").get<std::vector<std::string>>();
      t.rows    = j.at("rows").get<std::vector<std::vector<std::string>>>();
      t.printed = j.at("printed").get<std::vector<std::vector<std::string>>>();
      for (auto const& d : j.at("discrepancies")) {
        t.discrepancies.push_back({d.at("row").get<std::string>(),
                                   d.at("column").get<std::string>(),
                                   d.at("computed").get<std::string>(),
                                   d.at("printed").get<std::string>(),
                                   d.at("note").get<std::string>()});
      }
      t.notes = j.at("notes").get<std::vector<std::string>>();
      return t;
    });
  }

  json to_json(DecompositionNode const& d) {
    json children = json::array();
    for (auto const& c : d.children) {
      children.push_back(to_json(c));
    }
    return {{"description", d.description},
            {"method", d.method},
            {"length", d.length},
            {"children", std::move(children)}};
  }

}  // namespace semichain
