// Recomputation of the published tables of F(n, k), F*(n, k), and the
// lengths of inverse monoids and free bands, compared cell by cell with
// the printed values.

#ifndef SEMICHAIN_TABLES_HPP_
#define SEMICHAIN_TABLES_HPP_

#include <cstddef>  // for size_t
#include <string>   // for string
#include <vector>   // for vector

#include "budget.hpp"

namespace semichain {

  //! A cell where the recomputed value differs from the printed one.
  struct Discrepancy {
    std::string row;
    std::string column;
    std::string computed;
    std::string printed;
    std::string note;

    friend bool operator==(Discrepancy const&, Discrepancy const&) = default;
  };

  struct PaperTable {
    size_t                                id = 0;
    std::string                           title;
    std::vector<std::string>              columns;
    //! Recomputed cells; the first cell of each row is its label.
    std::vector<std::vector<std::string>> rows;
    //! The printed table, same shape as \c rows.
    std::vector<std::vector<std::string>> printed;
    std::vector<Discrepancy>              discrepancies;
    std::vector<std::string>              notes;

    friend bool operator==(PaperTable const&, PaperTable const&) = default;
  };

  struct TableOptions {
    //! Also search for F(7, 4) in table 1.
    bool         long_run = false;
    SearchBudget budget;
  };

  //! Table \p id, 1 to 5:
  //!   1  F(n, k) and max(lb1, lb2), n = 2..7, with totals sum F k!
  //!   2  F*(n, k) and the interval bound, n = 2..7, with totals sum F*
  //!   3  l of I_n, I_n*, POI_n, POPI_n, n = 1..9
  //!   4  l* of the same monoids
  //!   5  l of the free band B_n, n = 1..6
  //! Pairs in tables 1 and 2 are written "value,bound". A cell that was
  //! not computed is written "-" and is not compared.
  PaperTable make_table(size_t id, TableOptions const& opts = {});

  //! Tab separated: a header line, then one line per row.
  std::string to_tsv(PaperTable const& t);

}  // namespace semichain

#endif  // SEMICHAIN_TABLES_HPP_
