#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wreathcheck/catalog.hpp"
#include "wreathcheck/error.hpp"
#include "wreathcheck/group_io.hpp"
#include "wreathcheck/monomiality.hpp"
#include "wreathcheck/report.hpp"

using namespace wreathcheck;
using nlohmann::json;

namespace {

constexpr int kExitCounterexample = 2;

struct Options {
  std::size_t subgroup_limit = kDefaultSubgroupLimit;
  std::size_t order_limit = kDefaultOrderLimit;
  bool json_out = false;
  bool timing = false;
  bool serial = false;
  std::string output;

  SearchConfig config() const {
    return SearchConfig{subgroup_limit, order_limit, serial ? Execution::kSerial : Execution::kParallel};
  }
};

json envelope(const char* command) { return json{{"schema", kReportSchema}, {"command", command}}; }

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string label_text(const BaseLabel& label) {
  std::string s = "(";
  for (std::size_t i = 0; i < label.size(); ++i) s += (i ? "," : "") + std::to_string(label[i]);
  return s + ")";
}

BaseLabel parse_label(const std::string& text, int p) {
  BaseLabel label;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) label.push_back(std::stoul(part));
  if (label.size() == 1) label.assign(static_cast<std::size_t>(p), label.front());
  return label;
}

int cmd_table(const Options& opt, const std::string& name, json& report, std::string& text) {
  GroupPtr g = resolve_group(name, opt.order_limit);
  CharacterTable t = character_table(g);
  report = envelope("table");
  report["group"] = group_summary_json(*g);
  report["table"] = table_json(t);
  text = g->name() + " order " + std::to_string(g->order()) + "\n" + table_text(t);
  return 0;
}

int cmd_analyze(const Options& opt, const std::string& name, json& report, std::string& text) {
  GroupPtr g = resolve_group(name, opt.order_limit);
  CharacterTable t = character_table(g);
  InductionScan scan = make_scan(t, opt.config());
  GroupClassification c = classify_group(scan, g->name());
  report = envelope("analyze");
  report["group"] = group_summary_json(*g);
  report["classification"] = classification_json(c, scan.classes());
  std::ostringstream out;
  out << c.name << " order " << c.order << ", " << c.irreducibles << " irreducibles, " << c.subgroup_classes
      << " subgroup classes, " << c.normal_subgroups << " normal subgroups\n"
      << "solvable: " << yes_no(c.solvable) << "\n"
      << "monomial: " << yes_no(c.monomial) << "\n"
      << "quasi_monomial: " << yes_no(c.quasi_monomial) << "\n"
      << "almost_monomial: " << yes_no(c.almost_monomial) << "\n"
      << "normally_almost_monomial: " << yes_no(c.normally_almost_monomial) << "\n";
  text = out.str();
  return 0;
}

struct WreathArgs {
  std::string group;
  int p = 2;
  bool check_main = false;
  bool check_bobo = false;
  std::string fiber;
};

int cmd_wreath(const Options& opt, const WreathArgs& args, json& report, std::string& text) {
  GroupPtr a = resolve_group(args.group, opt.order_limit);
  WreathCharacters wc(wreath_product(a, args.p, opt.order_limit));
  const CharacterTable& t = wc.table;
  const WreathCensus census = wreath_census(wc.factor_table, args.p);
  long long square_sum = 0;
  for (long long d : t.degrees) square_sum += d * d;
  const bool matches = census.predicted_irreducibles == t.size() &&
                       census.predicted_degree_square_sum == square_sum;

  report = envelope("wreath");
  report["group"] = group_summary_json(*wc.wreath.group);
  report["factor"] = group_summary_json(*a);
  report["p"] = args.p;
  report["census"] = {{"labels", census.labels},
                      {"fixed_labels", census.fixed_labels},
                      {"orbits", census.orbits},
                      {"predicted_irreducibles", census.predicted_irreducibles},
                      {"predicted_degree_square_sum", census.predicted_degree_square_sum},
                      {"irreducibles", t.size()},
                      {"degree_square_sum", square_sum},
                      {"matches", matches}};
  std::ostringstream out;
  out << wc.wreath.group->name() << " order " << wc.wreath.group->order() << "\n"
      << "census: " << census.orbits << " orbits + " << args.p << " x " << census.fixed_labels
      << " fixed = " << census.predicted_irreducibles << ", |Irr(W)| = " << t.size()
      << (matches ? " (match)" : " (MISMATCH)") << "\n";

  json cases = json::array();
  std::size_t extensions = 0;
  for (std::size_t chi = 0; chi < t.size(); ++chi) {
    CliffordCase cc = clifford_case(chi, wc);
    json c{{"chi", chi}, {"degree", t.degrees[chi]}};
    json labels = json::array();
    for (const auto& l : cc.labels) labels.push_back(l);
    c["labels"] = std::move(labels);
    if (cc.kind == CliffordCase::Kind::kExtension) {
      ++extensions;
      c["case"] = "extension";
      c["phi"] = cc.phi;
    } else {
      c["case"] = "induced";
    }
    cases.push_back(std::move(c));
  }
  report["cases"] = std::move(cases);
  out << "clifford: " << extensions << " extensions, " << t.size() - extensions << " induced\n";

  int code = 0;
  if (args.check_main) {
    InductionScan scan = make_scan(t, opt.config());
    HypothesisReport main = check_main_hypothesis(wc, scan, opt.config());
    const auto pairs = ordered_pairs(t.size());
    auto all = [](const auto& ws) {
      return std::all_of(ws.begin(), ws.end(), [](const auto& w) { return w.has_value(); });
    };
    const bool almost = main.conclusion ? *main.conclusion : all(separation_witnesses(pairs, scan));
    const bool normally = all(separation_witnesses(pairs, scan, true));
    report["main"] = hypothesis_json(main);
    report["flags"] = {{"almost_monomial", almost}, {"normally_almost_monomial", normally}};
    out << "main hypothesis: overall " << yes_no(main.overall) << " (" << main.cases.size() << " cases)\n"
        << "almost_monomial: " << yes_no(almost) << "\n"
        << "normally_almost_monomial: " << yes_no(normally) << "\n";
    if (!main.consistent() || (main.factor_premise == true && !almost)) code = kExitCounterexample;
  }
  if (args.check_bobo) {
    HypothesisReport bobo = check_bobo_hypothesis(wc, opt.config());
    report["bobo"] = hypothesis_json(bobo);
    out << "bobo hypothesis: overall " << yes_no(bobo.overall) << " (" << bobo.cases.size() << " cases)";
    if (bobo.conclusion) out << ", W quasi_monomial " << yes_no(*bobo.conclusion);
    out << "\n";
    if (!bobo.consistent()) code = kExitCounterexample;
  }
  if (!args.fiber.empty()) {
    const BaseLabel label = parse_label(args.fiber, args.p);
    std::vector<std::size_t> fiber = gallagher_fiber(label, wc);
    report["fiber"] = {{"label", label}, {"members", fiber}};
    out << "fiber " << label_text(label) << ":";
    for (std::size_t i : fiber) out << " X." << i + 1;
    out << "\n";
  }
  text = out.str();
  return code;
}

int cmd_search(const Options& opt, const std::vector<std::string>& names, const std::vector<int>& primes,
               json& report, std::string& text) {
  std::vector<std::pair<std::string, GroupPtr>> groups;
  for (const auto& n : names) groups.emplace_back(n, resolve_group(n, opt.order_limit));
  SurveyReport survey = counterexample_search(groups, primes, opt.config());
  report = envelope("search");
  report.update(survey_json(survey, primes));
  std::ostringstream out;
  for (const auto& e : survey.entries) {
    out << e.factor << " wr C" << e.p << ": ";
    switch (e.status) {
      case SurveyEntry::Status::kChecked:
        out << "order " << e.order << ", almost_monomial " << yes_no(e.wreath_almost_monomial)
            << ", hypothesis " << yes_no(e.hypothesis);
        break;
      case SurveyEntry::Status::kFactorNotAlmostMonomial: out << "skipped, factor not almost monomial"; break;
      case SurveyEntry::Status::kOrderLimit: out << "skipped, " << e.note; break;
      case SurveyEntry::Status::kBudget: out << "skipped, " << e.note; break;
    }
    out << "\n";
  }
  out << (survey.counterexample_found ? "counterexample found\n" : "no counterexample found\n");
  text = out.str();
  return survey.counterexample_found ? kExitCounterexample : 0;
}

}  // namespace

int main(int argc, char** argv) {
  apply_thread_env();
  CLI::App app{"wreathcheck: character tables and monomiality certificates for finite groups"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--subgroup-limit", opt.subgroup_limit, "cap on subgroup classes")->check(CLI::PositiveNumber);
  app.add_option("--order-limit", opt.order_limit, "cap on group orders")->check(CLI::PositiveNumber);
  app.add_option("--output", opt.output, "write the report to this file");
  app.add_flag("--json", opt.json_out, "emit a JSON report");
  app.add_flag("--timing", opt.timing, "add wall-clock seconds to the report");
  app.add_flag("--serial", opt.serial, "use the serial induction kernel");

  std::string group;
  auto* table = app.add_subcommand("table", "print the character table");
  table->add_option("group", group, "catalog name or group file")->required();
  auto* analyze = app.add_subcommand("analyze", "classify a group");
  analyze->add_option("group", group, "catalog name or group file")->required();

  WreathArgs wa;
  auto* wreath = app.add_subcommand("wreath", "census and hypothesis checks for A wr C_p");
  wreath->add_option("group", wa.group, "factor A")->required();
  wreath->add_option("p", wa.p, "prime")->required();
  wreath->add_flag("--check-main", wa.check_main, "check the separation hypothesis");
  wreath->add_flag("--check-bobo", wa.check_bobo, "check the monomial-factor hypothesis");
  wreath->add_option("--fiber", wa.fiber, "print the Gallagher fiber of a diagonal label, e.g. 2,2");

  std::vector<std::string> names;
  std::vector<int> primes;
  auto* search = app.add_subcommand("search", "survey A wr C_p over a catalog");
  search->add_option("--catalog", names, "factor groups")->required()->delimiter(',');
  search->add_option("--primes", primes, "primes")->required()->delimiter(',');

  for (auto* sub : {table, analyze, wreath, search}) {
    sub->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  json report;
  std::string text;
  int code = 0;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (*table) code = cmd_table(opt, group, report, text);
    else if (*analyze) code = cmd_analyze(opt, group, report, text);
    else if (*wreath) code = cmd_wreath(opt, wa, report, text);
    else code = cmd_search(opt, names, primes, report, text);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::string body;
  if (opt.json_out) {
    if (opt.timing) report["timing_seconds"] = seconds;
    if (auto errors = validate_report(report); !errors.empty()) {
      for (const auto& e : errors) std::cerr << "schema: " << e << "\n";
      return 1;
    }
    body = report.dump(2) + "\n";
  } else {
    body = text;
    if (opt.timing) body += "time: " + std::to_string(seconds) + " s\n";
  }
  if (opt.output.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(opt.output);
    if (!out) {
      std::cerr << "error: cannot write " << opt.output << "\n";
      return 1;
    }
    out << body;
  }
  return code;
}
