#include "semichain/tables.hpp"

#include <stdexcept>  // for invalid_argument

#include "semichain/bignum.hpp"
#include "semichain/exception.hpp"
#include "semichain/formulas.hpp"
#include "semichain/leagues.hpp"

namespace semichain {

  namespace {
    using Grid = std::vector<std::vector<std::string>>;

    // As printed; empty strings are the blank cells.
    Grid const printed_1 = {
        {"2", "0,0", "", "", "", "", ""},
        {"3", "2,2", "1,1", "", "", "", ""},
        {"4", "24,18", "3,3", "3,2", "", "", ""},
        {"5", "330,326", "9,7", "28,28", "6,6", "", ""},
        {"6", "5382,5130", "21,15", "150,150", "125,125", "12,10", ""},
        {"7", "98250,93782", "45,31", "760,620", "1350,1350", "390,390", "20,15"}};

    Grid const printed_2 = {{"2", "0,0", "", "", "", "", ""},
                            {"3", "1,1", "1,1", "", "", "", ""},
                            {"4", "5,5", "3,3", "2,2", "", "", ""},
                            {"5", "22,21", "6,6", "12,12", "4,3", "", ""},
                            {"6", "88,84", "12,10", "40,40", "30,30", "6,4", ""},
                            {"7", "345,330", "20,15", "100,100", "150,150", "66,60", "9,5"}};

    Grid const printed_3
        = {{"l(I_n)", "1", "6", "25", "116", "722", "5956", "59243", "667500", "8296060"},
           {"l(I_n*)", "0", "2", "17", "180", "3298", "88431", "3064050", "130905678", "6732227475"},
           {"l(POI_n)", "1", "5", "17", "53", "167", "550", "1899", "6809", "25067"},
           {"l(POPI_n)", "1", "6", "24", "92", "363", "1483", "6191", "26077", "109987"}};

    Grid const printed_4
        = {{"l*(I_n)", "1", "5", "15", "39", "96", "229", "533", "1217", "2742"},
           {"l*(I_n*)", "0", "2", "11", "49", "223", "1065", "5337", "28231", "158939"},
           {"l*(POI_n)", "1", "4", "11", "26", "57", "120", "247", "502", "1013"},
           {"l*(POPI_n)", "1", "6", "17", "44", "97", "208", "429", "884", "1814"}};

    Grid const printed_5
        = {{"l(B_n)", "0", "4", "34", "1264", "3323778", "33022614177128"}};

    std::string pair(std::string const& a, std::string const& b) {
      return a + "," + b;
    }

    std::vector<std::string> league_columns() {
      return {"n", "Total", "k=2", "k=3", "k=4", "k=5", "k=6"};
    }

    // Tables 1 and 2 share their layout; the totals weight F by k! in
    // T_n and by 1 in O_n, whose H-classes are trivial.
    PaperTable league_table(bool interval, TableOptions const& opts) {
      PaperTable t;
      t.id      = interval ? 2 : 1;
      t.title   = interval ? "Values and bounds for F*(n,k)"
                           : "Values and bounds for F(n,k)";
      t.columns = league_columns();
      t.printed = interval ? printed_2 : printed_1;
      for (size_t n = 2; n <= 7; ++n) {
        std::vector<std::string> row(7);
        row[0]             = std::to_string(n);
        BigNat total_value = 0, total_bound = 0;
        bool   complete    = true;
        for (size_t k = 2; k < n; ++k) {
          BigNat const weight = interval ? BigNat(1) : factorial(k);
          BigNat const bound
              = interval ? league_lb_interval(n, k)
                         : std::max(league_lb1(n, k), league_lb2(n, k));
          std::string value = "-";
          if (interval || n < 7 || k != 4 || opts.long_run) {
            auto const r = max_content_exact(n, k, interval, opts.budget, n == 7);
            if (r.status == SearchStatus::exact) {
              value = std::to_string(r.optimum);
              total_value += big(r.optimum) * weight;
            } else {
              complete = false;
              t.notes.push_back("search budget exhausted at n=" + std::to_string(n)
                                + ", k=" + std::to_string(k)
                                + "; best found " + std::to_string(r.optimum));
            }
          } else {
            complete = false;
            t.notes.push_back("F(7,4) is only searched with the long-run option");
          }
          total_bound += bound * weight;
          row[k] = pair(value, to_string(bound));
        }
        row[1] = pair(complete ? to_string(total_value) : "-",
                      to_string(total_bound));
        t.rows.push_back(std::move(row));
      }
      return t;
    }

    PaperTable inverse_table(bool starred) {
      PaperTable t;
      t.id    = starred ? 4 : 3;
      t.title = starred ? "Lengths of longest chains of inverse subsemigroups"
                        : "Lengths of longest chains of subsemigroups";
      t.columns = {"n"};
      for (size_t n = 1; n <= 9; ++n) {
        t.columns.push_back(std::to_string(n));
      }
      t.printed = starred ? printed_4 : printed_3;
      for (auto m : {InverseMonoid::I,
                     InverseMonoid::Istar,
                     InverseMonoid::POI,
                     InverseMonoid::POPI}) {
        std::vector<std::string> row;
        row.push_back(t.printed[t.rows.size()][0]);
        for (size_t n = 1; n <= 9; ++n) {
          row.push_back(to_string(named_inverse_monoid_length(m, n, starred)));
        }
        t.rows.push_back(std::move(row));
      }
      return t;
    }

    PaperTable free_band_table() {
      PaperTable t;
      t.id      = 5;
      t.title   = "Lengths of longest chains of subsemigroups of free bands";
      t.columns = {"n", "1", "2", "3", "4", "5", "6"};
      t.printed = printed_5;
      std::vector<std::string> row = {"l(B_n)"};
      for (size_t n = 1; n <= 6; ++n) {
        row.push_back(to_string(free_band_length(n)));
      }
      t.rows.push_back(std::move(row));
      return t;
    }

    // "a,b" against "c,d" compares the two halves separately, skipping
    // halves that were not computed.
    void compare(PaperTable& t) {
      for (size_t r = 0; r < t.rows.size(); ++r) {
        for (size_t c = 1; c < t.rows[r].size(); ++c) {
          auto const& got  = t.rows[r][c];
          auto const& want = t.printed[r][c];
          if (got.empty() || want.empty()) {
            continue;
          }
          auto const gc = got.find(','), wc = want.find(',');
          std::vector<std::pair<std::string, std::string>> parts;
          std::vector<std::string>                         names;
          if (gc == std::string::npos) {
            parts.emplace_back(got, want);
            names.emplace_back("");
          } else {
            parts.emplace_back(got.substr(0, gc), want.substr(0, wc));
            parts.emplace_back(got.substr(gc + 1), want.substr(wc + 1));
            names = {"value", "bound"};
          }
          for (size_t i = 0; i < parts.size(); ++i) {
            auto const& [a, b] = parts[i];
            if (a != "-" && a != b) {
              std::string note
                  = names[i].empty() ? "formula differs from printed value"
                                     : names[i] + " differs from printed value";
              t.discrepancies.push_back(
                  {t.rows[r][0], t.columns[c], a, b, std::move(note)});
            }
          }
        }
      }
    }
  }  // namespace

  PaperTable make_table(size_t id, TableOptions const& opts) {
    PaperTable t;
    switch (id) {
      case 1:
        t = league_table(false, opts);
        break;
      case 2:
        t = league_table(true, opts);
        break;
      case 3:
        t = inverse_table(false);
        break;
      case 4:
        t = inverse_table(true);
        break;
      case 5:
        t = free_band_table();
        break;
      default:
        throw std::invalid_argument("table id must be 1 to 5, got "
                                    + std::to_string(id));
    }
    compare(t);
    return t;
  }

  std::string to_tsv(PaperTable const& t) {
    std::string out;
    auto line = [&out](std::vector<std::string> const& cells) {
      for (size_t i = 0; i < cells.size(); ++i) {
        out += (i == 0 ? "" : "\t") + cells[i];
      }
      out += "\n";
    };
    line(t.columns);
    for (auto const& row : t.rows) {
      line(row);
    }
    return out;
  }

}  // namespace semichain
