// JSON forms of tables, chain certificates, leagues and reports.

#ifndef SEMICHAIN_IO_HPP_
#define SEMICHAIN_IO_HPP_

#include <cstddef>      // for size_t
#include <string_view>  // for string_view

#include "json.hpp"

#include "cayley-table.hpp"
#include "leagues.hpp"
#include "oracle.hpp"
#include "tables.hpp"

namespace semichain {

  using json = nlohmann::json;

  //! {"size": n, "table": [[...], ...], "labels": [...]}
  json to_json(CayleyTable const& S);

  //! Validates the table, so non-associative input throws NonAssociative.
  //! Other malformed input throws ParseError.
  CayleyTable cayley_table_from_json(json const& j);

  //! Text (see parse_table_text) or JSON, decided by the first non-blank
  //! character.
  CayleyTable parse_table(std::string_view text);

  //! {"kind": ..., "length": L, "subsets": [[indices...], ...]}
  json to_json(ChainCertificate const& c);

  ChainCertificate certificate_from_json(json const& j, size_t universe);

  //! {"n", "k", "interval", "partitions": [[[block], ...], ...],
  //!  "subsets": [[...], ...], "content"}
  json to_json(League const& L);

  League league_from_json(json const& j);

  json to_json(LeagueSearchResult const& r);

  json to_json(PaperTable const& t);

  PaperTable paper_table_from_json(json const& j);

  json to_json(DecompositionNode const& d);

}  // namespace semichain

#endif  // SEMICHAIN_IO_HPP_
