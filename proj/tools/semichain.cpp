// Command line front end: lengths, league searches, table reproduction, and
// the bounds for GLS(n, q) and T_n.

#include <chrono>    // for steady_clock
#include <fstream>   // for ifstream
#include <iostream>  // for cout, cerr
#include <optional>  // for optional
#include <sstream>   // for stringstream
#include <string>    // for string
#include <thread>    // for thread
#include <variant>   // for get_if

#include "CLI11.hpp"

#include "semichain/classify.hpp"
#include "semichain/exception.hpp"
#include "semichain/families.hpp"
#include "semichain/formulas.hpp"
#include "semichain/grouplen.hpp"
#include "semichain/io.hpp"
#include "semichain/leagues.hpp"
#include "semichain/oracle.hpp"
#include "semichain/tables.hpp"

using namespace semichain;

namespace {

  constexpr int exit_invalid   = 2;
  constexpr int exit_budget    = 3;
  constexpr int exit_undecided = 4;
  constexpr int exit_strict    = 5;

  // Raised for inputs that are well formed but have no answer by the
  // requested method.
  struct NoClosedForm : Error {
    using Error::Error;
  };

  json number(BigNat const& x) {
    if (x.fits_ulong_p()) {
      return x.get_ui();
    }
    return to_string(x);
  }

  struct Envelope {
    std::string command;
    json        inputs      = json::object();
    json        result      = json::object();
    json        diagnostics = json::array();
  };

  struct BudgetFlags {
    size_t millis = 60'000;
    size_t nodes  = 2'000'000;
    size_t threads
        = std::max<size_t>(1, std::thread::hardware_concurrency());

    void add_to(CLI::App* app) {
      app->add_option("--budget-ms", millis, "Time limit for searches")
          ->check(CLI::PositiveNumber);
      app->add_option("--max-nodes", nodes,
                      "Limit on subsemigroups or search nodes visited")
          ->check(CLI::PositiveNumber);
      app->add_option("--threads", threads, "Worker threads")
          ->check(CLI::PositiveNumber);
    }

    SearchBudget budget() const {
      return {nodes, millis, threads};
    }

    json to_json() const {
      return {{"budgetMillis", millis}, {"maxNodes", nodes}, {"threads", threads}};
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // length
  ////////////////////////////////////////////////////////////////////////

  struct LengthArgs {
    std::string family;
    std::string file;
    std::string method = "auto";
    bool        star   = false;
    size_t      cap    = default_size_cap;
    BudgetFlags budget;
  };

  // "Istar:n" has a formula but no table.
  std::optional<size_t> istar_size(std::string const& s) {
    if (s.rfind("Istar:", 0) != 0) {
      return std::nullopt;
    }
    try {
      size_t     pos = 0;
      auto const n   = std::stoul(s.substr(6), &pos);
      if (pos + 6 == s.size() && n >= 1) {
        return n;
      }
    } catch (std::exception const&) {
    }
    throw ParseError("bad family spec " + s);
  }

  // The closed form for a named family, as (length, formula name).
  std::pair<BigNat, std::string> formula_length(FamilySpec const& spec,
                                                bool              star) {
    auto named = [star](InverseMonoid m, size_t n) {
      return std::pair{named_inverse_monoid_length(m, n, star),
                       std::string(star ? "inverse star length"
                                        : "inverse length")};
    };
    if (auto s = std::get_if<family::SymmetricInverse>(&spec)) {
      return named(InverseMonoid::I, s->n);
    } else if (auto s = std::get_if<family::POI>(&spec)) {
      return named(InverseMonoid::POI, s->n);
    } else if (auto s = std::get_if<family::POPI>(&spec)) {
      return named(InverseMonoid::POPI, s->n);
    } else if (auto s = std::get_if<family::Brandt>(&spec)) {
      auto const g = group_length(s->group);
      if (star) {
        return {inverse_star_brandt(g.length, big(s->n)), "brandt star length"};
      }
      return {brandt_length(g.length, big(s->group.size()), big(s->n)),
              "brandt length"};
    } else if (auto s = std::get_if<family::CyclicGroup>(&spec)) {
      return {big(omega(s->n)), "omega of the order"};
    } else if (auto s = std::get_if<family::SymmetricGroup>(&spec)) {
      return {big(length_symmetric(s->n)), "symmetric group length"};
    }
    if (star) {
      throw NoClosedForm("no closed form for l* of " + describe(spec));
    }
    if (auto s = std::get_if<family::Null>(&spec)) {
      return {big(s->m - 1), "null semigroup"};
    } else if (auto s = std::get_if<family::Monogenic>(&spec)) {
      return {big(s->index + omega(s->period) - 1), "monogenic"};
    } else if (std::get_if<family::FreeBand2>(&spec)) {
      return {free_band_length(2), "free band length"};
    }
    throw NoClosedForm("no closed form for " + describe(spec));
  }

  // Printed l* values disagree with the formula for several named monoids;
  // say so whenever such a value is reported.
  void note_printed_star(Envelope& env, std::string const& row, size_t n) {
    if (n < 1 || n > 9) {
      return;
    }
    for (auto const& d : make_table(4).discrepancies) {
      if (d.row == row && d.column == std::to_string(n)) {
        env.diagnostics.push_back({{"kind", "printedValueDiffers"},
                                   {"table", 4},
                                   {"row", d.row},
                                   {"column", d.column},
                                   {"computed", d.computed},
                                   {"printed", d.printed}});
      }
    }
  }

  void cmd_length(LengthArgs const& a, Envelope& env) {
    env.inputs = {{"method", a.method}, {"star", a.star}, {"cap", a.cap}};
    env.inputs.update(a.budget.to_json());
    if (a.family.empty() == a.file.empty()) {
      throw ParseError("give exactly one of --family and --file");
    }
    auto const budget = a.budget.budget();

    if (!a.family.empty()) {
      env.inputs["family"] = a.family;
      if (auto n = istar_size(a.family)) {
        if (a.method != "auto" && a.method != "formula") {
          throw UnsupportedFamily("Istar is only available by formula");
        }
        env.result = {{"length", number(named_inverse_monoid_length(
                                     InverseMonoid::Istar, *n, a.star))},
                      {"method", "formula"},
                      {"formula", a.star ? "inverse star length"
                                         : "inverse length"}};
        if (a.star) {
          note_printed_star(env, "l*(I_n*)", *n);
        }
        return;
      }
    } else {
      env.inputs["file"] = a.file;
    }

    std::optional<FamilySpec> spec;
    if (!a.family.empty()) {
      spec = parse_family(a.family);
    }
    bool const try_formula = spec && (a.method == "auto" || a.method == "formula");
    if (try_formula) {
      try {
        auto [value, name] = formula_length(*spec, a.star);
        env.result = {{"length", number(value)},
                      {"method", "formula"},
                      {"formula", name}};
        if (a.star) {
          if (auto s = std::get_if<family::SymmetricInverse>(&*spec)) {
            note_printed_star(env, "l*(I_n)", s->n);
          } else if (auto s = std::get_if<family::POPI>(&*spec)) {
            note_printed_star(env, "l*(POPI_n)", s->n);
          }
        }
        return;
      } catch (NoClosedForm const&) {
        if (a.method == "formula") {
          throw;
        }
      }
    } else if (a.method == "formula") {
      throw NoClosedForm("a table file has no closed form");
    }

    CayleyTable S;
    if (spec) {
      S = build_family(*spec, a.cap);
    } else {
      std::ifstream in(a.file);
      if (!in) {
        throw ParseError("cannot read " + a.file);
      }
      std::stringstream ss;
      ss << in.rdbuf();
      S = parse_table(ss.str());
    }
    env.result["size"] = S.size();

    if (!a.star && (a.method == "auto" || a.method == "decompose")) {
      try {
        auto const d         = decompose_length(S, budget);
        env.result["length"] = d.length;
        env.result["method"] = "decompose";
        env.result["trace"]  = to_json(d.trace);
        return;
      } catch (NotDecomposable const& e) {
        if (a.method == "decompose") {
          throw;
        }
        env.diagnostics.push_back(
            {{"kind", "decompositionFailed"}, {"message", e.what()}});
      }
    } else if (a.star && a.method == "decompose") {
      throw NoClosedForm("decompose computes l, not l*");
    }

    auto const r = a.star ? longest_inverse_chain_exact(S, budget)
                          : longest_chain_exact(S, budget);
    env.result["length"]      = r.length;
    env.result["method"]      = "oracle";
    env.result["enumerated"]  = r.enumerated;
    env.result["certificate"] = to_json(r.witness);
  }

  ////////////////////////////////////////////////////////////////////////
  // league
  ////////////////////////////////////////////////////////////////////////

  struct LeagueArgs {
    size_t      n        = 0;
    size_t      k        = 0;
    bool        interval = false;
    bool        bounds   = false;
    bool        exact    = false;
    std::string symmetry = "auto";
    BudgetFlags budget;
  };

  void cmd_league(LeagueArgs const& a, Envelope& env) {
    env.inputs = {{"n", a.n},
                  {"k", a.k},
                  {"interval", a.interval},
                  {"mode", a.bounds ? "bounds" : "exact"},
                  {"symmetry", a.symmetry}};
    env.inputs.update(a.budget.to_json());
    if (a.bounds && a.exact) {
      throw ParseError("--exact and --bounds are exclusive");
    }
    if (a.k < 1 || a.k > a.n) {
      throw ParseError("require 1 <= k <= n");
    }
    auto const closed = a.interval ? closed_form_Fstar(a.n, a.k)
                                   : closed_form_F(a.n, a.k);
    if (closed) {
      env.result["closedForm"] = number(*closed);
    }
    if (a.bounds) {
      if (a.interval) {
        auto const b         = league_lb_interval(a.n, a.k);
        env.result["bound"]  = number(b);
        env.result["lbInterval"] = number(b);
      } else {
        auto const b1       = league_lb1(a.n, a.k);
        auto const b2       = league_lb2(a.n, a.k);
        env.result["bound"] = number(std::max(b1, b2));
        env.result["lb1"]   = number(b1);
        env.result["lb2"]   = number(b2);
      }
      return;
    }
    bool const sym = a.symmetry == "on" || (a.symmetry == "auto" && a.n == 7);
    auto const r   = max_content_exact(a.n, a.k, a.interval, a.budget.budget(), sym);
    env.result.update(to_json(r));
    if (r.status == SearchStatus::lower_bound_only) {
      env.diagnostics.push_back(
          {{"kind", "budgetExhausted"},
           {"message", "search stopped early; optimum is a lower bound"}});
    }
    if (closed && r.status == SearchStatus::exact && *closed != r.optimum) {
      env.diagnostics.push_back({{"kind", "closedFormDiffers"},
                                 {"search", r.optimum},
                                 {"closedForm", number(*closed)}});
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // table, gls, tn
  ////////////////////////////////////////////////////////////////////////

  struct TableArgs {
    size_t      id       = 1;
    std::string format   = "json";
    bool        long_run = false;
    BudgetFlags budget;
  };

  PaperTable cmd_table(TableArgs const& a, Envelope& env) {
    env.inputs = {{"id", a.id}, {"format", a.format}, {"longRun", a.long_run}};
    TableOptions opts;
    opts.long_run = a.long_run;
    opts.budget   = a.budget.budget();
    auto t     = make_table(a.id, opts);
    env.result = to_json(t);
    for (auto const& d : t.discrepancies) {
      env.diagnostics.push_back({{"kind", "printedValueDiffers"},
                                 {"table", t.id},
                                 {"row", d.row},
                                 {"column", d.column},
                                 {"computed", d.computed},
                                 {"printed", d.printed},
                                 {"note", d.note}});
    }
    for (auto const& note : t.notes) {
      env.diagnostics.push_back({{"kind", "note"}, {"message", note}});
    }
    return t;
  }

  struct GlsArgs {
    size_t n         = 0;
    size_t q         = 0;
    double tolerance = 1e-9;
  };

  void cmd_gls(GlsArgs const& a, Envelope& env) {
    env.inputs = {{"n", a.n}, {"q", a.q}, {"tolerance", a.tolerance}};
    if (a.n < 1 || a.q < 2) {
      throw ParseError("require n >= 1 and q >= 2");
    }
    json gauss = json::array();
    for (size_t k = 0; k <= a.n; ++k) {
      gauss.push_back(number(gaussian_binomial(a.n, k, a.q)));
    }
    auto const c = c_q(a.q, a.tolerance);
    auto const b = gls_lower_bound(a.n, a.q);
    env.result   = {{"glOrder", number(gl_order(a.n, a.q))},
                    {"glsOrder", number(gls_order(a.n, a.q))},
                    {"gaussianBinomials", gauss},
                    {"cq", {{"value", c.value}, {"errorBound", c.error_bound}, {"terms", c.terms}}},
                    {"bound",
                     {{"raw", to_string(b.raw)},
                      {"rawDecimal", b.raw.get_d()},
                      {"clamped", number(b.clamped)}}}};
  }

  struct TnArgs {
    size_t n      = 0;
    bool   bounds = false;
  };

  void cmd_tn(TnArgs const& a, Envelope& env) {
    env.inputs = {{"n", a.n}, {"mode", a.bounds ? "bounds" : "exact"}};
    if (a.n < 2) {
      throw ParseError("require n >= 2");
    }
    auto const null = tn_null_max_order(a.n);
    env.result      = {
        {"chainBound", number(tn_lower_bound(a.n, !a.bounds))},
        {"nullOrder", number(null.order)},
        {"argmaxK", null.argmax_k},
        {"log2SubsemigroupCountBound", number(null.order)},
        {"generatorBound", number(null.order)}};
  }

  int exit_code_for(std::exception const& e) {
    if (dynamic_cast<BudgetExceeded const*>(&e)) {
      return exit_budget;
    }
    if (dynamic_cast<NotDecomposable const*>(&e)
        || dynamic_cast<NoClosedForm const*>(&e)) {
      return exit_undecided;
    }
    return exit_invalid;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lengths of longest chains of subsemigroups"};
  app.require_subcommand(1);
  bool strict = false;
  app.add_flag("--strict", strict, "Exit nonzero when there are diagnostics");

  LengthArgs la;
  auto*      length = app.add_subcommand("length", "Length of a semigroup");
  length->add_option("--family", la.family, "Family, e.g. T:3, brandt:c2,2, Istar:4");
  length->add_option("--file", la.file, "Table file (text or JSON)");
  length->add_option("--method", la.method)
      ->check(CLI::IsMember({"auto", "formula", "decompose", "oracle"}));
  length->add_flag("--star", la.star, "Inverse subsemigroup length l*");
  length->add_option("--cap", la.cap, "Largest table to build")
      ->check(CLI::PositiveNumber);
  la.budget.add_to(length);

  LeagueArgs ga;
  auto*      league = app.add_subcommand("league", "Maximal league content");
  league->add_option("--n", ga.n)->required();
  league->add_option("--k", ga.k)->required();
  league->add_flag("--interval", ga.interval, "Interval partitions only");
  league->add_flag("--exact", ga.exact, "Search (the default)");
  league->add_flag("--bounds", ga.bounds, "Only the constructions");
  league->add_option("--symmetry", ga.symmetry, "on, off, or auto (on for n = 7)")
      ->check(CLI::IsMember({"auto", "on", "off"}));
  ga.budget.add_to(league);

  TableArgs ta;
  auto*     table = app.add_subcommand("table", "Recompute a published table");
  table->add_option("--id", ta.id)->required()->check(CLI::Range(1, 5));
  table->add_option("--format", ta.format)->check(CLI::IsMember({"json", "tsv"}));
  table->add_flag("--long-run", ta.long_run, "Include F(7,4)");
  ta.budget.add_to(table);

  GlsArgs sa;
  auto*   gls = app.add_subcommand("gls", "Bounds for GLS(n, q)");
  gls->add_option("--n", sa.n)->required();
  gls->add_option("--q", sa.q)->required();
  gls->add_option("--tolerance", sa.tolerance)->check(CLI::PositiveNumber);

  TnArgs na;
  auto*  tn = app.add_subcommand("tn", "Bounds for T_n");
  tn->add_option("--n", na.n)->required();
  tn->add_flag("--bounds", na.bounds, "Use lb1, lb2 instead of exact F");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : exit_invalid;
  }

  auto const start = std::chrono::steady_clock::now();
  Envelope   env;
  std::optional<PaperTable> tsv;
  try {
    if (length->parsed()) {
      env.command = "length";
      cmd_length(la, env);
    } else if (league->parsed()) {
      env.command = "league";
      cmd_league(ga, env);
    } else if (table->parsed()) {
      env.command = "table";
      auto t      = cmd_table(ta, env);
      if (ta.format == "tsv") {
        tsv = std::move(t);
      }
    } else if (gls->parsed()) {
      env.command = "gls";
      cmd_gls(sa, env);
    } else if (tn->parsed()) {
      env.command = "tn";
      cmd_tn(na, env);
    }
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  auto const millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();

  if (tsv) {
    std::cout << to_tsv(*tsv);
    for (auto const& d : env.diagnostics) {
      std::cerr << "# " << d.dump() << "\n";
    }
  } else {
    json out = {{"command", env.command},
                {"inputs", env.inputs},
                {"result", env.result},
                {"diagnostics", env.diagnostics},
                {"timingMillis", millis}};
    std::cout << out.dump(2) << "\n";
  }
  return strict && !env.diagnostics.empty() ? exit_strict : 0;
}
