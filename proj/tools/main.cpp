// monoloc: command-line driver over the monoloc library.

#include "input.hpp"

#include <monoloc/catalog.hpp>
#include <monoloc/error.hpp>
#include <monoloc/json_io.hpp>
#include <monoloc/suite.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>

namespace {

using namespace monoloc;
using monoloc::cli::Input;

enum Exit { Pass = 0, CheckFailed = 1, InvalidArgs = 2 };

struct Options {
  std::string out;
  std::string window = "0..6";
  std::string budget = "1e5";
  std::string cap = "1e4";
  std::uint64_t seed = 1;
  std::string format = "json";
  int lo = 0, hi = 6;
  std::size_t budget_n = 100000, cap_n = 10000;

  void resolve() {
    std::tie(lo, hi) = cli::parse_window(window);
    budget_n = count(budget, "--budget");
    cap_n = count(cap, "--cap");
  }

  static std::size_t count(const std::string &s, const char *flag) {
    double v = 0;
    try {
      v = std::stod(s);
    } catch (const std::logic_error &) {
      throw InvalidInput(std::string(flag) + " expects a number, got '" + s + "'");
    }
    if (!(v >= 1) || v > 1e15 || std::floor(v) != v)
      throw InvalidInput(std::string(flag) + " expects a positive integer, got '" + s + "'");
    return static_cast<std::size_t>(v);
  }

  Json to_json() const {
    return Json{{"window", {{"lo", lo}, {"hi", hi}}},
                {"budget", budget_n},
                {"cap", cap_n},
                {"seed", seed},
                {"format", format}};
  }
};

struct Report {
  std::string command;
  std::vector<Input> inputs;
  Json outputs = Json::object();
  Json timings = Json::object();
  std::string status = "pass";
  std::string diagnostic;
  std::string csv; ///< set when the command has a CSV rendering

  Json to_json(const Options &o) const {
    Json in = Json::array();
    for (const auto &i : inputs)
      in.push_back({{"name", i.name}, {"kind", i.kind()}, {"fnv1a64", cli::hex(i.hash())}});
    Json j{{"tool", "monoloc"},
           {"version", MONOLOC_VERSION},
           {"command", command},
           {"inputs", in},
           {"options", o.to_json()},
           {"outputs", outputs},
           {"timings", timings},
           {"status", status}};
    if (!diagnostic.empty())
      j["diagnostic"] = diagnostic;
    return j;
  }
};

void emit(const Report &r, const Options &o) {
  const std::string text =
      o.format == "csv" && !r.csv.empty() ? r.csv : r.to_json(o).dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f)
    throw InvalidInput("cannot write " + o.out);
  f << text;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

HomologyTable window_homology(const ChainComplexWindow &c, int lo) {
  if (lo <= c.lo())
    return homology_window(c);
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> bds;
  for (int n = lo; n <= c.hi(); ++n) {
    ranks.push_back(c.rank(n));
    if (n > lo)
      bds.push_back(c.boundary(n));
  }
  return homology_window(ChainComplexWindow(lo, c.hi(), ranks, bds, false));
}

void cmd_homology(Report &r, const Options &o) {
  const Input &in = r.inputs.front();
  HomologyTable h;
  if (in.json && in.kind() == "chain-complex") {
    h = window_homology(complex_from_json(*in.json), o.lo);
  } else {
    const auto k = cli::simplicial_input(in);
    h = window_homology(chains(*k, o.hi).complex, o.lo);
  }
  r.outputs["homology"] = to_json(h);
  r.csv = homology_csv(h);
}

void cmd_cobar(Report &r, const Options &o) {
  const auto k = cli::simplicial_input(r.inputs.front());
  const DgCoalgebraWindow c = chains(*k, o.hi);
  r.outputs["cobar"] = to_json(cobar(c, o.hi));
}

void cmd_extended_cobar(Report &r, const Options &o) {
  const auto k = cli::simplicial_input(r.inputs.front());
  const PresentedDgAlgebra e = extended_cobar(*k, std::max(o.hi, 2));
  r.outputs["extended_cobar"] = to_json(e);
  r.outputs["h0"] = to_json(h0_ring(e));
}

void cmd_bar(Report &r, const Options &o) {
  const PresentedDgAlgebra a = cli::algebra_input(r.inputs.front());
  const RewriteSystem rs = complete(a, o.budget_n);
  const BarWindow b = bar(algebra_window(a, rs, o.hi - 1, o.cap_n), o.hi);
  const ValidationReport v = check_coalgebra(b.window);
  if (!v.ok()) {
    r.status = "fail";
    r.diagnostic = v.to_string();
  }
  r.outputs["bar"] = to_json(b.window);
  const HomologyTable h = window_homology(b.window.complex, o.lo);
  r.outputs["homology"] = to_json(h);
  r.csv = homology_csv(h);
}

void cmd_loopgroup(Report &r, const Options &, int levels) {
  const auto k = cli::simplicial_input(r.inputs.front());
  const auto lg = kan_loop_group(*k, levels);
  Json ranks = Json::array();
  for (const auto &lv : lg)
    ranks.push_back(lv.generators.size());
  r.outputs["levels"] = to_json(lg);
  r.outputs["ranks"] = ranks;
}

void cmd_pi1(Report &r, const Options &o) {
  const auto k = cli::simplicial_input(r.inputs.front());
  const MonoidPresentation p = pi1_presentation(*k);
  const HomologyGroup ab = abelianization(p);
  const HomologyTable h = homology_window(chains(*k, 2).complex);
  r.outputs["presentation"] = to_json(p);
  r.outputs["abelianization"] = to_json(ab);
  r.outputs["h1"] = to_json(h.at(1));
  if (!ab.isomorphic(h.at(1))) {
    r.status = "fail";
    r.diagnostic = "abelianized pi_1 " + ab.to_string() + " differs from H_1 " + h.at(1).to_string();
  }
  if (k->reduced()) {
    const H0Comparison c = h0_compare(*k, o.budget_n);
    r.outputs["h0_comparison"] = to_json(c);
    if (!c.certificate.passed() && r.status == "pass") {
      r.status = "fail";
      r.diagnostic = std::string("H_0 comparison: ") + to_string(c.certificate.outcome);
    }
  }
}

void cmd_weq(Report &r, const Options &o) {
  const MonoidMap f = cli::monoid_map_input(r.inputs.front());
  const WeqVerdict v = weq_verdict(f, o.hi, o.budget_n);
  r.outputs["verdict"] = to_json(v);
}

int cmd_suite(Report &r, const Options &o, const std::string &which) {
  std::vector<std::string> cases;
  if (which == "all")
    cases = suite_cases();
  else
    cases.push_back(which);
  const SuiteOptions so{o.budget_n, o.cap_n, o.seed};
  Json results = Json::array();
  std::string csv = "case,passed,seconds,detail\n";
  for (const auto &name : cases) {
    const CaseResult c = run_case(name, so);
    results.push_back({{"case", c.name},
                       {"passed", c.passed},
                       {"detail", c.detail},
                       {"checks", c.checks},
                       {"payload", c.payload}});
    r.timings[c.name] = c.seconds;
    csv += c.name + "," + (c.passed ? "true" : "false") + "," + std::to_string(c.seconds) + ",\"" +
           c.detail + "\"\n";
    if (!c.passed && r.status == "pass") {
      r.status = "fail";
      r.diagnostic = c.name + ": " + c.detail;
    }
  }
  r.outputs["cases"] = results;
  r.csv = csv;
  return r.status == "pass" ? Pass : CheckFailed;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"monoloc: finite-window computations for monoids, dg coalgebras and loop groups"};
  app.set_version_flag("--version", std::string(MONOLOC_VERSION));
  app.require_subcommand(1);

  Options opt;
  app.add_option("--out", opt.out, "Write the report to this file instead of stdout");
  app.add_option("--window", opt.window, "Degree window lo..hi")->capture_default_str();
  app.add_option("--budget", opt.budget, "Rewrite step budget")->capture_default_str();
  app.add_option("--cap", opt.cap, "Basis size cap per degree")->capture_default_str();
  app.add_option("--seed", opt.seed, "Seed for randomized cases")->capture_default_str();
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  std::string input;
  int levels = 2;
  std::string suite_case = "all";
  const std::vector<std::pair<std::string, std::string>> unary = {
      {"homology", "Homology of a simplicial set, monoid nerve or chain complex"},
      {"cobar", "Cobar construction of the chains of a reduced simplicial set"},
      {"extended-cobar", "Cobar construction with the edge cycles inverted"},
      {"bar", "Bar construction of an augmented dg algebra or monoid algebra"},
      {"loopgroup", "Kan loop group levels"},
      {"pi1", "Fundamental group presentation with Hurewicz and H_0 checks"},
      {"weq", "Weak-equivalence verdict for a monoid map"},
  };
  std::map<std::string, CLI::App *> subs;
  for (const auto &[name, help] : unary) {
    CLI::App *s = app.add_subcommand(name, help);
    s->fallthrough();
    s->add_option("input", input, "Built-in name or JSON file")->required();
    subs[name] = s;
  }
  subs["loopgroup"]->add_option("--hi", levels, "Top level")->capture_default_str();
  CLI::App *suite = app.add_subcommand("paper-suite", "Run the reproduction cases");
  suite->fallthrough();
  suite->add_option("--case", suite_case, "Case name or all")
      ->check(CLI::IsMember([] {
        auto c = suite_cases();
        c.push_back("all");
        return c;
      }()))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e);
    return rc == 0 ? Pass : InvalidArgs;
  }

  Report rep;
  rep.command = app.get_subcommands().front()->get_name();
  const auto t0 = std::chrono::steady_clock::now();
  int rc = Pass;
  try {
    opt.resolve();
    if (rep.command != "paper-suite")
      rep.inputs.push_back(cli::load_input(input));
    if (opt.format == "csv" && rep.command != "homology" && rep.command != "bar" &&
        rep.command != "paper-suite")
      throw InvalidInput("--format csv applies to homology, bar and paper-suite");
    if (rep.command == "homology")
      cmd_homology(rep, opt);
    else if (rep.command == "cobar")
      cmd_cobar(rep, opt);
    else if (rep.command == "extended-cobar")
      cmd_extended_cobar(rep, opt);
    else if (rep.command == "bar")
      cmd_bar(rep, opt);
    else if (rep.command == "loopgroup")
      cmd_loopgroup(rep, opt, levels);
    else if (rep.command == "pi1")
      cmd_pi1(rep, opt);
    else if (rep.command == "weq")
      cmd_weq(rep, opt);
    else
      cmd_suite(rep, opt, suite_case);
    rc = rep.status == "pass" ? Pass : CheckFailed;
  } catch (const Error &e) {
    rep.status = "invalid";
    rep.diagnostic = e.what();
    rc = InvalidArgs;
  } catch (const Json::exception &e) {
    rep.status = "invalid";
    rep.diagnostic = std::string("malformed JSON: ") + e.what();
    rc = InvalidArgs;
  }
  rep.timings["total"] = seconds_since(t0);
  if (!rep.diagnostic.empty())
    std::cerr << "monoloc " << rep.command << ": " << rep.diagnostic << "\n";
  try {
    if (rc == InvalidArgs)
      rep.csv.clear();
    emit(rep, opt);
  } catch (const Error &e) {
    std::cerr << e.what() << "\n";
    return InvalidArgs;
  }
  return rc;
}
