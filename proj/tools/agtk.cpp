// agtk: command line front end.
//
//   agtk check <table> [--props p,...] [--json]
//   agtk ca-test <table> [--render] [--json]
//   agtk canon <table>
//   agtk enumerate --order N [--class EXPR] [--count-only] [--out FILE]
//                  [--allow-large] [--jobs K] [--budget S] [--first-rows A:B]
//                  [--progress]
//   agtk classify --order N --report table2 [--class EXPR]... [--jobs K]
//                 [--budget S] [--allow-large] [--json]
//   agtk verify [--claims C1,...] [--max-order N] [--jobs K] [--json]
//
// A <table> is an inline "n:e1,...", a file in the line format, or "-" for
// standard input. Exit status: 0 success, 1 a verdict is false, 2 usage or
// input error, 3 budget exceeded.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "agtk/agtk.hpp"

namespace {

  using json = nlohmann::ordered_json;

  enum exit_code : int { ok = 0, verdict_false = 1, usage = 2, budget = 3 };

  struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  unsigned default_jobs() {
    if (char const* env = std::getenv("AGTK_JOBS")) {
      try {
        auto const v = std::stoul(env);
        if (v > 0) {
          return static_cast<unsigned>(v);
        }
      } catch (std::exception const&) {
      }
      throw usage_error("AGTK_JOBS must be a positive integer");
    }
    return 1;
  }

  std::string read_all(std::istream& in) {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }

  std::vector<agtk::Magma> read_tables(std::string const& source) {
    std::string text;
    if (source == "-") {
      text = read_all(std::cin);
    } else if (source.find(':') != std::string::npos) {
      text = source;
    } else {
      std::ifstream in(source);
      if (!in) {
        throw usage_error("cannot read '" + source + "'");
      }
      text = read_all(in);
    }
    auto tables = agtk::parse_magma_lines(text);
    if (tables.empty()) {
      throw usage_error("no table in '" + source + "'");
    }
    return tables;
  }

  std::string tuple_string(std::vector<agtk::element_type> const& v,
                           int base = 0) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      s += (i ? "," : "") + std::to_string(v[i] + base);
    }
    return s + ")";
  }

  std::optional<std::chrono::steady_clock::duration>
  to_budget(std::optional<double> seconds) {
    if (!seconds) {
      return std::nullopt;
    }
    if (*seconds <= 0) {
      throw usage_error("--budget must be positive");
    }
    return std::chrono::duration_cast<std::chrono::steady_clock::duration>(
        std::chrono::duration<double>(*seconds));
  }

  void check_order(std::size_t n, bool allow_large) {
    if (n < 1 || n > agtk::max_search_order) {
      throw usage_error("--order must be in 1.."
                        + std::to_string(agtk::max_search_order));
    }
    if (n >= 6 && !allow_large) {
      throw usage_error("order " + std::to_string(n)
                        + " is a long run; pass --allow-large");
    }
  }

  std::optional<agtk::PrefixRange> parse_range(std::string const& text) {
    if (text.empty()) {
      return std::nullopt;
    }
    auto const colon = text.find(':');
    if (colon == std::string::npos) {
      throw usage_error("--first-rows expects A:B");
    }
    agtk::PrefixRange range;
    try {
      if (colon > 0) {
        range.first = std::stoull(text.substr(0, colon));
      }
      if (colon + 1 < text.size()) {
        range.last = std::stoull(text.substr(colon + 1));
      }
    } catch (std::exception const&) {
      throw usage_error("--first-rows expects A:B with integer bounds");
    }
    return range;
  }

  void print_progress(agtk::EnumerationProgress const& p) {
    std::cerr << "partial: " << p.count << " tables from "
              << p.completed_prefixes << " of " << p.total_prefixes
              << " first-row prefixes\n";
    std::cerr << "unfinished prefixes:";
    for (auto i : p.unfinished) {
      std::cerr << ' ' << i;
    }
    std::cerr << '\n';
  }

  // check

  struct CheckArgs {
    std::string              table;
    std::vector<std::string> props;
    bool                     json = false;
  };

  int run_check(CheckArgs const& args) {
    auto const tables = read_tables(args.table);
    std::vector<std::string> props = args.props;
    if (props.empty()) {
      for (auto const& e : agtk::property_catalog) {
        props.emplace_back(e.name);
      }
    }
    std::vector<agtk::PropertyExpr> exprs;
    for (auto const& p : props) {
      exprs.push_back(agtk::PropertyExpr::parse(p));
    }
    bool all = true;
    json out = json::array();
    for (auto const& m : tables) {
      auto const v = agtk::classify(m);
      json entry{{"table", agtk::render_magma(m)}, {"results", json::array()}};
      for (std::size_t i = 0; i < exprs.size(); ++i) {
        bool const holds = exprs[i].evaluate(v);
        all              = all && holds;
        json r{{"property", props[i]}, {"holds", holds}};
        std::string line = props[i] + ": " + (holds ? "true" : "false");
        if (auto id = agtk::find_property(props[i]); id && !holds) {
          auto const w = agtk::check_property(m, *id).witness;
          if (w) {
            r["witness"] = {{"law", agtk::name(w->law)}, {"values", w->values}};
            line += "  witness " + std::string(agtk::name(w->law)) + " "
                    + tuple_string(w->values);
          }
        }
        entry["results"].push_back(r);
        if (!args.json) {
          std::cout << (tables.size() > 1 ? agtk::render_magma(m) + " " : "")
                    << line << '\n';
        }
      }
      out.push_back(entry);
    }
    if (args.json) {
      std::cout << out.dump(2) << '\n';
    }
    // Without --props the output is a listing, not a predicate.
    return all || args.props.empty() ? ok : verdict_false;
  }

  // ca-test

  struct CaArgs {
    std::string table;
    bool        render = false;
    bool        json   = false;
  };

  int run_ca_test(CaArgs const& args) {
    bool all = true;
    json out = json::array();
    for (auto const& m : read_tables(args.table)) {
      bool const is_ag = agtk::check_property(m, agtk::PropertyId::ag).holds;
      if (!is_ag) {
        std::cerr << "warning: " << agtk::render_magma(m)
                  << " does not satisfy the left invertive law\n";
      }
      auto const report = agtk::ca_test(m);
      all               = all && report.verdict();
      json entry{{"table", agtk::render_magma(m)},
                 {"ag", is_ag},
                 {"cyclic_associative", report.verdict()}};
      if (auto mm = report.first_mismatch()) {
        entry["first_mismatch"] = {{"x", mm->x + 1},
                                   {"a", mm->a + 1},
                                   {"b", mm->b + 1},
                                   {"star", report.star(mm->x, mm->a, mm->b) + 1},
                                   {"circle",
                                    report.circle(mm->x, mm->a, mm->b) + 1}};
      }
      if (args.render) {
        entry["extended_table"] = agtk::render_extended_table(m, report);
      }
      out.push_back(entry);
      if (args.json) {
        continue;
      }
      std::cout << "cyclic associative: "
                << (report.verdict() ? "true" : "false") << '\n';
      if (auto mm = report.first_mismatch()) {
        std::cout << "first mismatch (1-based): x=" << mm->x + 1
                  << " a=" << mm->a + 1 << " b=" << mm->b + 1 << "  a(bx)="
                  << report.star(mm->x, mm->a, mm->b) + 1
                  << " x(ab)=" << report.circle(mm->x, mm->a, mm->b) + 1
                  << '\n';
      }
      if (args.render) {
        std::cout << agtk::render_extended_table(m, report);
      }
    }
    if (args.json) {
      std::cout << out.dump(2) << '\n';
    }
    return all ? ok : verdict_false;
  }

  // canon

  int run_canon(std::string const& table) {
    for (auto const& m : read_tables(table)) {
      if (m.order() > agtk::max_canonical_order) {
        throw usage_error("canonical form is limited to order "
                          + std::to_string(agtk::max_canonical_order));
      }
      std::cout << agtk::canonical_key(m).to_string() << '\n';
    }
    return ok;
  }

  // enumerate

  struct EnumerateArgs {
    std::size_t           order = 0;
    std::string           expr;
    bool                  count_only  = false;
    std::string           out;
    bool                  allow_large = false;
    unsigned              jobs        = 1;
    std::optional<double> budget;
    std::string           first_rows;
    bool                  progress = false;
  };

  agtk::EnumerationOptions make_options(unsigned jobs,
                                        std::optional<double> budget,
                                        bool progress,
                                        std::string const& first_rows = {}) {
    agtk::EnumerationOptions options;
    options.jobs     = jobs;
    options.budget   = to_budget(budget);
    options.prefixes = parse_range(first_rows);
    if (progress) {
      options.on_prefix = [](agtk::PrefixDone const& d) {
        std::cerr << "prefix " << d.index << " [" << d.row << "] " << d.count
                  << " (" << d.completed << '/' << d.total << ")\n";
      };
    }
    return options;
  }

  int run_enumerate(EnumerateArgs const& args) {
    check_order(args.order, args.allow_large);
    std::optional<agtk::PropertyExpr> filter;
    if (!args.expr.empty()) {
      filter = agtk::PropertyExpr::parse(args.expr);
    }
    std::ofstream file;
    std::ostream* sink_stream = &std::cout;
    if (!args.out.empty()) {
      file.open(args.out);
      if (!file) {
        throw usage_error("cannot write '" + args.out + "'");
      }
      sink_stream = &file;
    }

    std::uint64_t matched = 0;
    std::function<void(agtk::Magma const&)> sink;
    if (filter || !args.count_only) {
      sink = [&](agtk::Magma const& m) {
        if (filter && !filter->evaluate(agtk::classify(m))) {
          return;
        }
        ++matched;
        if (!args.count_only) {
          *sink_stream << agtk::render_magma(m) << '\n';
        }
      };
    }
    auto const options
        = make_options(args.jobs, args.budget, args.progress, args.first_rows);
    std::uint64_t total = 0;
    try {
      total = agtk::enumerate_ag(args.order, sink, options);
    } catch (agtk::budget_exceeded const& e) {
      std::cout << "partial AG: " << e.progress().count << '\n';
      if (filter) {
        std::cout << "partial matching: " << matched << '\n';
      }
      print_progress(e.progress());
      return budget;
    }
    if (!filter) {
      matched = total;
    }
    if (args.count_only) {
      std::cout << matched << '\n';
    } else {
      *sink_stream << "# " << matched << " of " << total
                   << " AG-groupoids of order " << args.order << '\n';
    }
    return ok;
  }

  // classify

  struct ClassifyArgs {
    std::size_t              order = 0;
    std::string              report;
    std::vector<std::string> extra;
    unsigned                 jobs = 1;
    std::optional<double>    budget;
    bool                     allow_large = false;
    bool                     json        = false;
    bool                     progress    = false;
  };

  int print_census(ClassifyArgs const& args,
                   agtk::EnumerationReport const& report,
                   bool partial) {
    auto const rows = agtk::compare_with_published(report);
    bool const have_reference = !partial && rows.front().expected.has_value();
    bool       all            = true;
    if (args.json) {
      json out{{"order", report.order()},
               {"partial", partial},
               {"consistent", report.consistent()},
               {"rows", json::array()},
               {"extra", json::array()}};
      for (auto const& r : rows) {
        json row{{"key", r.key}, {"label", r.label}, {"computed", r.computed}};
        row["published"] = r.published ? json(*r.published) : json(nullptr);
        if (have_reference) {
          row["status"] = r.pass() ? "PASS" : "FAIL";
          all           = all && r.pass();
        }
        if (r.discrepancy) {
          row["discrepancy"] = {{"published", r.discrepancy->published},
                                {"derived", r.discrepancy->derived},
                                {"note", r.discrepancy->note}};
        }
        out["rows"].push_back(row);
      }
      for (std::size_t i = agtk::census_rows.size();
           i < report.counts().size(); ++i) {
        out["extra"].push_back({{"expression", report.counts()[i].first},
                                {"computed", report.counts()[i].second}});
      }
      std::cout << out.dump(2) << '\n';
      return all ? ok : verdict_false;
    }

    std::cout << "order " << report.order()
              << (partial ? " (partial: budget exceeded)" : "") << '\n';
    for (auto const& r : rows) {
      std::ostringstream line;
      line << std::left << std::setw(34) << r.key << std::right
           << std::setw(10) << r.computed;
      if (r.published) {
        line << "  published " << std::setw(8) << *r.published;
      }
      if (have_reference) {
        line << "  " << (r.pass() ? "PASS" : "FAIL");
        all = all && r.pass();
      }
      if (r.discrepancy) {
        line << "  [published " << r.discrepancy->published
             << " inconsistent; derived " << r.discrepancy->derived << ": "
             << r.discrepancy->note << "]";
      }
      std::cout << line.str() << '\n';
    }
    for (std::size_t i = agtk::census_rows.size(); i < report.counts().size();
         ++i) {
      std::cout << std::left << std::setw(34) << report.counts()[i].first
                << std::right << std::setw(10) << report.counts()[i].second
                << '\n';
    }
    std::cout << "row arithmetic: "
              << (report.consistent() ? "consistent" : "INCONSISTENT") << '\n';
    return all && report.consistent() ? ok : verdict_false;
  }

  int run_classify(ClassifyArgs const& args) {
    if (args.report != "table2") {
      throw usage_error("unknown report '" + args.report
                        + "' (available: table2)");
    }
    check_order(args.order, args.allow_large);
    std::vector<agtk::PropertyExpr> extra;
    for (auto const& e : args.extra) {
      extra.push_back(agtk::PropertyExpr::parse(e));
    }
    auto const options = make_options(args.jobs, args.budget, args.progress);
    try {
      return print_census(args,
                          agtk::classify_census(args.order, options, extra),
                          false);
    } catch (agtk::partial_census const& e) {
      print_census(args, e.partial(), true);
      print_progress(e.progress());
      return budget;
    }
  }

  // verify

  struct VerifyArgs {
    std::vector<std::string> claims;
    std::size_t              max_order = agtk::default_claim_order;
    unsigned                 jobs      = 1;
    bool                     json      = false;
  };

  json evidence_json(agtk::Evidence const& e) {
    json out = json::object();
    if (e.magma) {
      out["magma"] = agtk::render_magma(*e.magma);
    }
    if (!e.fixture.empty()) {
      out["fixture"] = e.fixture;
    }
    if (e.law) {
      out["law"] = agtk::name(*e.law);
    }
    if (!e.tuple.empty()) {
      out["tuple"] = e.tuple;
    }
    if (!e.note.empty()) {
      out["note"] = e.note;
    }
    return out;
  }

  int run_verify(VerifyArgs const& args) {
    agtk::UniverseCache cache(args.jobs);
    std::vector<agtk::ClaimResult> results;
    try {
      results = agtk::verify_claims(args.max_order, args.claims, &cache);
    } catch (agtk::claim_budget_error const& e) {
      std::cerr << "agtk: " << e.what() << '\n';
      return budget;
    }
    bool all = true;
    json out = json::array();
    for (auto const& r : results) {
      all = all && r.passed();
      if (args.json) {
        json entry{{"id", r.id},
                   {"kind", agtk::to_string(r.kind)},
                   {"status", agtk::to_string(r.status)},
                   {"scope", r.scope},
                   {"checked", r.checked},
                   {"external_premise", r.external_premise},
                   {"statement", agtk::find_claim(r.id).statement},
                   {"legs", json::array()}};
        for (auto const& leg : r.legs) {
          json l{{"description", leg.description},
                 {"status", agtk::to_string(leg.status)},
                 {"scope", leg.scope},
                 {"checked", leg.checked}};
          if (leg.evidence) {
            l["evidence"] = evidence_json(*leg.evidence);
          }
          entry["legs"].push_back(l);
        }
        out.push_back(entry);
        continue;
      }
      std::cout << std::left << std::setw(4) << r.id << ' ' << std::setw(15)
                << agtk::to_string(r.status) << " scope " << r.scope
                << "  checked " << r.checked
                << (r.external_premise ? "  external-premise" : "") << "  "
                << agtk::find_claim(r.id).statement << '\n';
      for (auto const& leg : r.legs) {
        std::cout << "       " << agtk::to_string(leg.status) << ": "
                  << leg.description;
        if (leg.evidence && leg.evidence->magma) {
          std::cout << "  [" << agtk::render_magma(*leg.evidence->magma);
          if (!leg.evidence->tuple.empty()) {
            std::cout << " at " << tuple_string(leg.evidence->tuple);
          }
          if (!leg.evidence->note.empty()) {
            std::cout << "; " << leg.evidence->note;
          }
          std::cout << ']';
        }
        std::cout << '\n';
      }
    }
    if (args.json) {
      std::cout << out.dump(2) << '\n';
    }
    return all ? ok : verdict_false;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toolkit for AG-groupoids and cyclic associativity"};
  app.require_subcommand(1);

  CheckArgs check;
  auto*     check_cmd = app.add_subcommand("check", "Decide catalog properties");
  check_cmd->add_option("table", check.table, "Table, file or -")->required();
  check_cmd->add_option("--props", check.props,
                        "Properties or property expressions")
      ->delimiter(',');
  check_cmd->add_flag("--json", check.json);

  CaArgs ca;
  auto*  ca_cmd = app.add_subcommand("ca-test", "Star/circle table test");
  ca_cmd->add_option("table", ca.table, "Table, file or -")->required();
  ca_cmd->add_flag("--render", ca.render, "Print the extended table");
  ca_cmd->add_flag("--json", ca.json);

  std::string canon_table;
  auto* canon_cmd = app.add_subcommand("canon", "Canonical form");
  canon_cmd->add_option("table", canon_table, "Table, file or -")->required();

  unsigned jobs_default = 1;
  try {
    jobs_default = default_jobs();
  } catch (usage_error const& e) {
    std::cerr << "agtk: " << e.what() << '\n';
    return usage;
  }

  EnumerateArgs en;
  en.jobs      = jobs_default;
  auto* en_cmd = app.add_subcommand("enumerate", "List AG-groupoids");
  en_cmd->add_option("--order", en.order)->required();
  en_cmd->add_option("--class", en.expr, "Property expression filter");
  en_cmd->add_flag("--count-only", en.count_only);
  en_cmd->add_option("--out", en.out, "Output file");
  en_cmd->add_flag("--allow-large", en.allow_large);
  en_cmd->add_option("--jobs", en.jobs)->check(CLI::PositiveNumber);
  en_cmd->add_option("--budget", en.budget, "Wall-clock seconds");
  en_cmd->add_option("--first-rows", en.first_rows,
                     "First-row prefix index range A:B (half open)");
  en_cmd->add_flag("--progress", en.progress);

  ClassifyArgs cl;
  cl.jobs      = jobs_default;
  auto* cl_cmd = app.add_subcommand("classify", "Census by class");
  cl_cmd->add_option("--order", cl.order)->required();
  cl_cmd->add_option("--report", cl.report)->required();
  cl_cmd->add_option("--class", cl.extra, "Extra rows");
  cl_cmd->add_option("--jobs", cl.jobs)->check(CLI::PositiveNumber);
  cl_cmd->add_option("--budget", cl.budget, "Wall-clock seconds");
  cl_cmd->add_flag("--allow-large", cl.allow_large);
  cl_cmd->add_flag("--json", cl.json);
  cl_cmd->add_flag("--progress", cl.progress);

  VerifyArgs ve;
  ve.jobs      = jobs_default;
  auto* ve_cmd = app.add_subcommand("verify", "Check the theorem registry");
  ve_cmd->add_option("--claims", ve.claims)->delimiter(',');
  ve_cmd->add_option("--max-order", ve.max_order);
  ve_cmd->add_option("--jobs", ve.jobs)->check(CLI::PositiveNumber);
  ve_cmd->add_flag("--json", ve.json);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (check_cmd->parsed()) {
      return run_check(check);
    }
    if (ca_cmd->parsed()) {
      return run_ca_test(ca);
    }
    if (canon_cmd->parsed()) {
      return run_canon(canon_table);
    }
    if (en_cmd->parsed()) {
      return run_enumerate(en);
    }
    if (cl_cmd->parsed()) {
      return run_classify(cl);
    }
    if (ve_cmd->parsed()) {
      return run_verify(ve);
    }
  } catch (agtk::budget_exceeded const& e) {
    std::cerr << "agtk: " << e.what() << '\n';
    return budget;
  } catch (std::exception const& e) {
    std::cerr << "agtk: " << e.what() << '\n';
    return usage;
  }
  return usage;
}
