// Command-line front end: parsing and printing, normalization, tracing,
// interactive stepping, class listing, verification suites with JSON reports,
// DOT graph export, term enumeration, and the memory-calculus projection.
//
// Exit codes: 0 pass, 1 fail, 2 inconclusive (a cap was hit), 3 usage.

#include <cctype>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lj/analysis.hpp"
#include "lj/checks.hpp"
#include "lj/equivalences.hpp"
#include "lj/projection.hpp"
#include "lj/rewrite.hpp"
#include "lj/syntax.hpp"
#include "lj/term.hpp"
#include "lj/zoo.hpp"

namespace {

using lj::TermPtr;

std::string pos_str(const lj::Position& p) {
  if (p.empty()) return "root";
  std::string out;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += '.';
    out += std::to_string(p[i]);
  }
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string trimmed(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Shared cap/seed options. A config file supplies defaults for any of them;
// command-line flags override the file.
struct CommonOpts {
  lj::SuiteOptions so;
  std::string config_path;
  std::map<std::string, CLI::Option*> flags;

  void attach(CLI::App* cmd, bool with_max_size) {
    cmd->add_option("--config", config_path,
                    "key=value file with defaults for the cap and seed flags");
    flags["seed"] = cmd->add_option("--seed", so.seed, "seed for sampled corpora");
    flags["state_cap"] =
        cmd->add_option("--state-cap", so.state_cap, "state budget for graph exploration");
    flags["class_cap"] =
        cmd->add_option("--class-cap", so.class_cap, "member budget for equivalence classes");
    flags["budget"] = cmd->add_option("--budget", so.budget, "step budget for joining searches");
    flags["trace_count"] =
        cmd->add_option("--trace-count", so.trace_count, "random traces for sampled suites");
    if (with_max_size) {
      flags["max_size"] =
          cmd->add_option("--max-size", so.max_size, "corpus size bound (suite default if unset)");
    }
  }

  void load_config() {
    if (config_path.empty()) return;
    std::ifstream in(config_path);
    if (!in) throw lj::TermError("cannot open config file " + config_path);
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      std::string s = trimmed(line);
      if (s.empty() || s[0] == '#') continue;
      size_t eq = s.find('=');
      if (eq == std::string::npos) {
        throw lj::TermError(config_path + ":" + std::to_string(lineno) + ": expected key=value");
      }
      kv[trimmed(s.substr(0, eq))] = trimmed(s.substr(eq + 1));
    }
    auto take = [&](const std::string& key, auto& slot) {
      auto it = kv.find(key);
      if (it == kv.end()) return;
      auto fl = flags.find(key);
      if (fl != flags.end() && fl->second != nullptr && fl->second->count() > 0) {
        kv.erase(it);  // an explicit flag wins
        return;
      }
      long long v = 0;
      try {
        v = std::stoll(it->second);
      } catch (const std::exception&) {
        throw lj::TermError(config_path + ": bad value for " + key + ": " + it->second);
      }
      slot = static_cast<std::decay_t<decltype(slot)>>(v);
      kv.erase(it);
    };
    take("seed", so.seed);
    take("state_cap", so.state_cap);
    take("class_cap", so.class_cap);
    take("budget", so.budget);
    take("trace_count", so.trace_count);
    if (flags.count("max_size") > 0) take("max_size", so.max_size);
    if (!kv.empty()) {
      throw lj::TermError(config_path + ": unknown key " + kv.begin()->first);
    }
  }
};

TermPtr parse_in(const lj::RewriteSystem& sys, const std::string& src) {
  TermPtr t = lj::parse_term(src, sys.universe == lj::Universe::Void);
  if (!lj::in_universe(t, sys.universe)) {
    throw lj::TermError("term is outside the " + sys.name + " universe");
  }
  return t;
}

int cmd_norm(const std::string& calc, const std::string& strategy, const std::string& src,
             CommonOpts& co) {
  lj::RewriteSystem sys = lj::build_calculus(calc);
  TermPtr t = parse_in(sys, src);
  if (strategy == "det") {
    lj::NormResult r = lj::normalize(sys, t, 10000);
    std::cout << lj::print_term(r.term()) << "\n";
    std::cout << "steps: " << r.trace.steps.size();
    if (!r.trace.steps.empty()) {
      std::cout << " (";
      for (size_t i = 0; i < r.trace.steps.size(); ++i) {
        std::cout << (i > 0 ? " " : "") << r.trace.steps[i].rule_id;
      }
      std::cout << ")";
    }
    std::cout << "\npolicy: leftmost-outermost, first rule in system order; splits keep the "
                 "leftmost occurrence\n";
    if (!r.complete) {
      std::cout << "status: step budget exhausted before a normal form\n";
      return 2;
    }
    return 0;
  }
  lj::Analyzer an(sys, co.so.class_cap);
  lj::ExploreLimits lim;
  lim.max_states = co.so.state_cap;
  lim.max_depth = 1000000;
  lj::ExploreResult g = an.explore(t, lim);
  if (!g.complete) {
    std::cout << "exploration capped at " << g.states.size()
              << " classes; normal forms undetermined\n";
    return 2;
  }
  auto nfs = g.normal_states();
  std::cout << "normal forms: " << nfs.size() << "  (classes: " << g.states.size() << ")\n";
  for (int i : nfs) std::cout << lj::print_term(g.states[static_cast<size_t>(i)]) << "\n";
  return 0;
}

int cmd_trace(const std::string& calc, const std::string& src) {
  lj::RewriteSystem sys = lj::build_calculus(calc);
  TermPtr t = parse_in(sys, src);
  lj::NormResult r = lj::normalize(sys, t, 10000);
  std::cout << lj::print_term(t) << "\n";
  for (const lj::Step& s : r.trace.steps) {
    std::cout << "  --" << s.rule_id << " @ " << pos_str(s.pos) << "-->  "
              << lj::print_term(s.after) << "\n";
  }
  if (!r.complete) {
    std::cout << "status: step budget exhausted before a normal form\n";
    return 2;
  }
  return 0;
}

int cmd_step(const std::string& calc, const std::string& src) {
  lj::RewriteSystem sys = lj::build_calculus(calc);
  std::vector<TermPtr> history{parse_in(sys, src)};
  struct Move {
    std::string label;
    TermPtr to;
  };
  while (true) {
    TermPtr cur = history.back();
    std::cout << "\n" << lj::print_term(cur) << "\n";
    std::vector<Move> moves;
    for (const lj::Step& s : lj::one_step_reducts(sys, cur)) {
      std::string label = s.rule_id + " @ " + pos_str(s.pos);
      if (s.alternative > 0) label += " #" + std::to_string(s.alternative + 1);
      moves.push_back({label, s.after});
    }
    for (const lj::Equivalence& ax : sys.axioms) {
      for (const lj::Position& p : lj::positions(cur)) {
        for (bool fwd : {true, false}) {
          for (const TermPtr& r : lj::apply_equivalence_at(ax, fwd, cur, p)) {
            moves.push_back(
                {ax.id + (fwd ? "" : " (reverse)") + " @ " + pos_str(p) + "  [axiom]", r});
          }
        }
      }
    }
    for (size_t i = 0; i < moves.size(); ++i) {
      std::cout << "  [" << i + 1 << "] " << moves[i].label << "  ->  "
                << lj::print_term(moves[i].to) << "\n";
    }
    if (moves.empty()) std::cout << "  (no moves)\n";
    std::cout << "pick 1-" << moves.size() << ", u = undo, q = quit> " << std::flush;
    std::string line;
    if (!std::getline(std::cin, line)) break;
    line = trimmed(line);
    if (line == "q") break;
    if (line.empty()) continue;
    if (line == "u") {
      if (history.size() > 1) {
        history.pop_back();
      } else {
        std::cout << "nothing to undo\n";
      }
      continue;
    }
    size_t pick = 0;
    bool numeric = !line.empty() &&
                   std::all_of(line.begin(), line.end(), [](char c) { return std::isdigit(c); });
    if (numeric) pick = static_cast<size_t>(std::stoull(line));
    if (!numeric || pick < 1 || pick > moves.size()) {
      std::cout << "no such move\n";
      continue;
    }
    history.push_back(moves[pick - 1].to);
  }
  std::cout << "final: " << lj::print_term(history.back()) << "\n";
  return 0;
}

int cmd_classes(const std::string& set_name, const std::string& src, CommonOpts& co) {
  std::vector<lj::Equivalence> axs = lj::axiom_set(set_name);
  TermPtr t = lj::parse_term(src, true);
  lj::EqClass cls = lj::equivalence_class(axs, t, co.so.class_cap);
  std::cout << "class size: " << cls.members.size() << (cls.complete ? "" : " (capped)") << "\n";
  for (size_t i = 0; i < cls.members.size(); ++i) {
    std::cout << (static_cast<int>(i) == cls.canonical_index ? "* " : "  ")
              << lj::print_term(cls.members[i]) << "\n";
  }
  return cls.complete ? 0 : 2;
}

int cmd_check(const std::string& suite, CommonOpts& co) {
  lj::SuiteResult res = lj::run_suite(suite, co.so);
  nlohmann::json report;
  report["suite"] = res.suite;
  report["params"] = res.params;
  report["caps"] = {{"max_size", co.so.max_size},     {"seed", co.so.seed},
                    {"state_cap", co.so.state_cap},   {"class_cap", co.so.class_cap},
                    {"budget", co.so.budget},         {"trace_count", co.so.trace_count}};
  nlohmann::json verdicts = nlohmann::json::array();
  for (const lj::Verdict& v : res.verdicts) {
    nlohmann::json jv{
        {"id", v.id}, {"status", v.status}, {"detail", v.detail}, {"millis", v.millis}};
    if (!v.counterexample.empty()) jv["counterexample"] = v.counterexample;
    verdicts.push_back(jv);
  }
  report["verdicts"] = verdicts;
  std::cout << report.dump(2) << "\n";
  if (res.passed()) return 0;
  return res.inconclusive() ? 2 : 1;
}

int cmd_graph(const std::string& calc, const std::string& dot_path, const std::string& src,
              CommonOpts& co) {
  lj::RewriteSystem sys = lj::build_calculus(calc);
  TermPtr t = parse_in(sys, src);
  lj::Analyzer an(sys, co.so.class_cap);
  lj::ExploreLimits lim;
  lim.max_states = co.so.state_cap;
  lim.max_depth = 1000000;
  lj::ExploreResult g = an.explore(t, lim);
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!dot_path.empty()) {
    file.open(dot_path);
    if (!file) throw lj::TermError("cannot write " + dot_path);
    out = &file;
  }
  std::set<int> normal;
  if (g.complete) {  // a capped graph leaves frontier states unexpanded
    std::vector<int> nf = g.normal_states();
    normal.insert(nf.begin(), nf.end());
  }
  *out << "digraph reduction {\n  rankdir=LR;\n";
  for (size_t i = 0; i < g.states.size(); ++i) {
    *out << "  n" << i << " [label=\"" << dot_escape(lj::print_term(g.states[i])) << "\""
         << (normal.count(static_cast<int>(i)) > 0 ? ", peripheries=2" : "") << "];\n";
  }
  for (const lj::ExploreEdge& e : g.edges) {
    *out << "  n" << e.from << " -> n" << e.to << " [label=\"" << dot_escape(e.rule_id)
         << "\"];\n";
  }
  *out << "}\n";
  if (!g.complete) std::cerr << "note: exploration capped at " << g.states.size() << " classes\n";
  return g.complete ? 0 : 2;
}

int cmd_enum(int max_size, const std::string& universe_name, const std::string& names_csv,
             bool count_only) {
  lj::Universe uni;
  if (universe_name == "pure") {
    uni = lj::Universe::Pure;
  } else if (universe_name == "jump") {
    uni = lj::Universe::Jump;
  } else if (universe_name == "void") {
    uni = lj::Universe::Void;
  } else {
    throw lj::TermError("unknown universe " + universe_name);
  }
  std::vector<std::string> names;
  std::stringstream ss(names_csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trimmed(item);
    if (!item.empty()) names.push_back(item);
  }
  const auto& terms = lj::enumerate_terms(max_size, uni, names);
  if (count_only) {
    std::cout << terms.size() << "\n";
  } else {
    for (const TermPtr& t : terms) std::cout << lj::print_term(t) << "\n";
  }
  return 0;
}

int cmd_project(const std::string& src) {
  TermPtr t = lj::parse_term(src, false);
  std::cout << lj::print_term(lj::gc_project(t)) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structural lambda-calculus workbench: jumps at a distance, equational "
               "theories, the memory calculus, and verification suites"};
  app.require_subcommand(1);

  std::function<int()> action;
  CommonOpts co;

  std::string calc = "lambdaj";
  std::string strategy = "det";
  std::string term_src;
  std::string axioms_name = "o";
  std::string suite_name;
  std::string dot_path;
  std::string universe_name = "jump";
  std::string names_csv = "x,y";
  int enum_max_size = 0;
  bool count_only = false;

  auto add_calculus = [&](CLI::App* cmd) {
    cmd->add_option("--calculus", calc, "one of: " + [] {
          std::string all;
          for (const auto& n : lj::calculus_names()) all += (all.empty() ? "" : ", ") + n;
          return all;
        }())
        ->check(CLI::IsMember(lj::calculus_names()));
  };

  CLI::App* norm = app.add_subcommand("norm", "normalize a term");
  add_calculus(norm);
  norm->add_option("--strategy", strategy, "det: deterministic policy; all: every normal form")
      ->check(CLI::IsMember(std::vector<std::string>{"det", "all"}));
  norm->add_option("term", term_src, "the term")->required();
  co.attach(norm, false);
  norm->callback([&] { action = [&] { return cmd_norm(calc, strategy, term_src, co); }; });

  CLI::App* trace = app.add_subcommand("trace", "print the deterministic reduction step by step");
  add_calculus(trace);
  trace->add_option("term", term_src, "the term")->required();
  trace->callback([&] { action = [&] { return cmd_trace(calc, term_src); }; });

  CLI::App* step = app.add_subcommand(
      "step", "interactive stepping: numbered rule and axiom moves, u undoes, q quits");
  add_calculus(step);
  step->add_option("term", term_src, "the term")->required();
  step->callback([&] { action = [&] { return cmd_step(calc, term_src); }; });

  CLI::App* classes = app.add_subcommand("classes", "list an equivalence class");
  classes->add_option("--axioms", axioms_name,
                      "axiom set: none, cs, o, box, obox, n, sigmahat, pi, or a comma list");
  classes->add_option("term", term_src, "the term")->required();
  co.attach(classes, false);
  classes->callback([&] { action = [&] { return cmd_classes(axioms_name, term_src, co); }; });

  CLI::App* check = app.add_subcommand("check", "run a verification suite, report as JSON");
  check->add_option("suite", suite_name, "one of: " + [] {
         std::string all;
         for (const auto& n : lj::suite_names()) all += (all.empty() ? "" : ", ") + n;
         return all;
       }())
      ->required()
      ->check(CLI::IsMember(lj::suite_names()));
  co.attach(check, true);
  check->callback([&] { action = [&] { return cmd_check(suite_name, co); }; });

  CLI::App* graph = app.add_subcommand("graph", "export the reduction graph as DOT");
  add_calculus(graph);
  graph->add_option("--dot", dot_path, "write to a file instead of stdout");
  graph->add_option("term", term_src, "the term")->required();
  co.attach(graph, false);
  graph->callback([&] { action = [&] { return cmd_graph(calc, dot_path, term_src, co); }; });

  CLI::App* enumerate = app.add_subcommand("enum", "enumerate terms up to a size");
  enumerate->add_option("--max-size", enum_max_size, "size bound")->required();
  enumerate->add_option("--universe", universe_name, "pure, jump, or void");
  enumerate->add_option("--names", names_csv, "comma-separated free names (empty: closed)");
  enumerate->add_flag("--count", count_only, "print only how many");
  enumerate->callback([&] {
    action = [&] { return cmd_enum(enum_max_size, universe_name, names_csv, count_only); };
  });

  CLI::App* project = app.add_subcommand("project", "project a term onto the memory calculus");
  project->add_option("term", term_src, "the term")->required();
  project->callback([&] { action = [&] { return cmd_project(term_src); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    co.load_config();
    return action ? action() : 3;
  } catch (const lj::ParseError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return 3;
  } catch (const lj::TermError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
