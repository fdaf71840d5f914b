#include "lj/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lj/analysis.hpp"
#include "lj/equivalences.hpp"
#include "lj/lambdaj.hpp"
#include "lj/lambdavoid.hpp"
#include "lj/measures.hpp"
#include "lj/projection.hpp"
#include "lj/rewrite.hpp"
#include "lj/syntax.hpp"
#include "lj/term.hpp"
#include "lj/zoo.hpp"

namespace lj {

bool SuiteResult::passed() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const Verdict& v) { return v.status == "pass"; });
}

bool SuiteResult::inconclusive() const {
  bool some = false;
  for (const auto& v : verdicts) {
    if (v.status == "fail") return false;
    if (v.status == "inconclusive") some = true;
  }
  return some;
}

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

// Pass/fail/inconclusive counter with one retained counterexample.
struct Tally {
  long long checked = 0;
  long long failed = 0;
  long long undecided = 0;
  std::string first;

  void ok() { ++checked; }
  void bad(const std::string& cex) {
    ++checked;
    ++failed;
    if (first.empty()) first = cex;
  }
  void unknown(const std::string& cex) {
    ++checked;
    ++undecided;
    if (first.empty()) first = cex;
  }
  void check(bool good, const std::string& cex) { good ? ok() : bad(cex); }
};

Verdict verdict(const std::string& id, const Tally& t, long long millis,
                const std::string& extra = "") {
  Verdict v;
  v.id = id;
  v.millis = millis;
  v.status = t.failed > 0 ? "fail" : (t.undecided > 0 ? "inconclusive" : "pass");
  v.detail = std::to_string(t.checked) + " checked";
  if (t.failed > 0) v.detail += ", " + std::to_string(t.failed) + " failed";
  if (t.undecided > 0) v.detail += ", " + std::to_string(t.undecided) + " undecided";
  if (!extra.empty()) v.detail += "; " + extra;
  if (t.failed > 0 || t.undecided > 0) v.counterexample = t.first;
  return v;
}

Verdict plain_verdict(const std::string& id, bool ok, const std::string& detail,
                      long long millis, const std::string& cex = "") {
  Verdict v;
  v.id = id;
  v.status = ok ? "pass" : "fail";
  v.detail = detail;
  v.millis = millis;
  if (!ok) v.counterexample = cex;
  return v;
}

TermPtr T(const std::string& src) { return parse_term(src, true); }

std::vector<std::string> sorted_ids(std::vector<std::string> ids) {
  std::sort(ids.begin(), ids.end());
  return ids;
}

// Longest plain-step reduction length, memoized over alpha-canonical keys.
// Works term-by-term with no equivalence classes, so spaces whose classes
// blow up under the permutation axioms stay cheap. nullopt means a reduction
// cycle is reachable (the term is not terminating).
class PlainHeights {
 public:
  PlainHeights(RewriteSystem sys, std::size_t fresh_budget)
      : sys_(std::move(sys)), budget_(fresh_budget) {}

  // throws TermError when one query visits more than `fresh_budget` new terms
  std::optional<long long> height(const TermPtr& t) {
    fresh_ = 0;
    std::string root_key = term_key(t);
    if (auto it = memo_.find(root_key); it != memo_.end()) return it->second;
    std::vector<Frame> stack;
    std::set<std::string> gray;
    push(stack, gray, t, std::move(root_key));
    std::optional<long long> result;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < f.steps.size()) {
        const TermPtr& child = f.steps[f.next++].after;
        std::string ckey = term_key(child);
        if (auto it = memo_.find(ckey); it != memo_.end()) {
          f.best = std::max(f.best, 1 + it->second);
          continue;
        }
        if (gray.count(ckey)) return std::nullopt;  // reduction cycle
        push(stack, gray, child, std::move(ckey));
        continue;
      }
      memo_[f.key] = f.best;
      gray.erase(f.key);
      long long finished = f.best;
      stack.pop_back();
      if (!stack.empty()) {
        stack.back().best = std::max(stack.back().best, 1 + finished);
      } else {
        result = finished;
      }
    }
    return result;
  }

 private:
  struct Frame {
    TermPtr term;
    std::string key;
    std::vector<Step> steps;
    std::size_t next = 0;
    long long best = 0;
  };

  void push(std::vector<Frame>& stack, std::set<std::string>& gray, const TermPtr& t,
            std::string key) {
    if (++fresh_ > budget_) throw TermError("height exploration exceeded its budget");
    gray.insert(key);
    stack.push_back(Frame{t, std::move(key), one_step_reducts(sys_, t), 0, 0});
  }

  RewriteSystem sys_;
  std::size_t budget_;
  std::size_t fresh_ = 0;
  std::map<std::string, long long> memo_;
};

int default_size(const SuiteOptions& opt, int dflt) {
  return opt.max_size > 0 ? opt.max_size : dflt;
}

void note_sizes(SuiteResult& res, int bound, const std::string& pool) {
  res.params["max_size"] = std::to_string(bound);
  res.params["pool"] = pool;
}

// ---------------------------------------------------------------------------
// fc: the composition witness closes every jump.

SuiteResult suite_fc(const SuiteOptions& opt) {
  SuiteResult res{"fc", {}, {}};
  int bound = default_size(opt, 8);  // bound on size(t) + size(u)
  note_sizes(res, bound, "x,y,z");
  std::vector<std::string> pool{"x", "y", "z"};

  auto t0 = Clock::now();
  std::vector<std::vector<TermPtr>> by_size(static_cast<size_t>(bound));
  for (const auto& t : enumerate_terms(bound - 1, Universe::Jump, pool)) {
    by_size[static_cast<size_t>(t->sz - 1)].push_back(t);
  }
  RewriteSystem j = j_system();
  Tally witness, endpoint, only_dc;
  for (int st = 1; st <= bound - 1; ++st) {
    for (int su = 1; su <= bound - st; ++su) {
      for (const auto& t : by_size[static_cast<size_t>(st - 1)]) {
        for (const auto& u : by_size[static_cast<size_t>(su - 1)]) {
          for (const auto& x : pool) {
            TermPtr start = jump(t, x, u);
            Trace w = full_composition_witness(start);
            std::string why;
            witness.check(validate(j, w, &why), print_term(start) + " : " + why);
            endpoint.check(alpha_eq(w.end(), substitute(t, x, u)), print_term(start));
            if (multiplicity(t, x) >= 1) {
              bool dc = std::all_of(w.steps.begin(), w.steps.end(), [](const Step& s) {
                return s.rule_id == "d" || s.rule_id == "c";
              });
              only_dc.check(dc, print_term(start));
            }
          }
        }
      }
    }
  }
  long long ms = ms_since(t0);
  res.verdicts.push_back(verdict("fc/witness-validates", witness, ms));
  res.verdicts.push_back(verdict("fc/ends-at-substitution", endpoint, ms));
  res.verdicts.push_back(verdict("fc/used-jumps-need-no-gc", only_dc, ms));
  res.verdicts.push_back(plain_verdict("fc/time-box", ms < 120000,
                                       std::to_string(ms) + " ms against 120000 ms", ms));
  return res;
}

// ---------------------------------------------------------------------------
// j-confluence: unique normal forms, the decreasing measure, termination
// modulo the equational theories.

SuiteResult suite_j_confluence(const SuiteOptions& opt) {
  SuiteResult res{"j-confluence", {}, {}};
  int bound = default_size(opt, 7);
  note_sizes(res, bound, "x,y");
  auto terms = enumerate_terms(bound, Universe::Jump, {"x", "y"});
  res.params["terms"] = std::to_string(terms.size());

  auto t0 = Clock::now();
  Analyzer plain(j_system(), opt.class_cap);
  Tally unique_nf, dm_dec;
  ExploreLimits lim;
  lim.max_states = opt.state_cap;
  lim.max_depth = 1000;
  for (const auto& t : terms) {
    ExploreResult g = plain.explore(t, lim);
    std::string cex = print_term(t);
    if (!g.complete) {
      unique_nf.unknown(cex);
    } else {
      auto nfs = g.normal_states();
      unique_nf.check(nfs.size() == 1 &&
                          alpha_eq(g.states[static_cast<size_t>(nfs[0])], j_normal_form(t)),
                      cex);
    }
    for (const auto& e : g.edges) {
      dm_dec.check(dm_greater(j_measure(g.states[static_cast<size_t>(e.from)]),
                              j_measure(g.states[static_cast<size_t>(e.to)])),
                   print_term(g.states[static_cast<size_t>(e.from)]) + " -" + e.rule_id + "-> " +
                       print_term(g.states[static_cast<size_t>(e.to)]));
    }
  }
  long long ms_plain = ms_since(t0);
  res.verdicts.push_back(verdict("j/unique-normal-form", unique_nf, ms_plain));
  res.verdicts.push_back(verdict("j/measure-decreases", dm_dec, ms_plain));

  for (const std::string& axioms : {std::string("o"), std::string("obox")}) {
    auto t1 = Clock::now();
    RewriteSystem sys = j_system();
    sys.name = "j_" + axioms;
    sys.axioms = axiom_set(axioms);
    Analyzer an(sys, opt.class_cap);
    Tally sn;
    for (const auto& t : terms) {
      SnCertificate c = an.certify_sn(t, opt.state_cap);
      if (c.status == SnCertificate::Status::Proven) {
        sn.ok();
      } else if (c.status == SnCertificate::Status::Capped) {
        sn.unknown(print_term(t));
      } else {
        sn.bad(print_term(t));
      }
    }
    res.verdicts.push_back(verdict("j-" + axioms + "/terminates-acyclic", sn, ms_since(t1)));
  }
  return res;
}

// ---------------------------------------------------------------------------
// measures: pinned constants, and the surface-measure step lemma of the
// memory calculus.

SuiteResult suite_measures(const SuiteOptions& opt) {
  SuiteResult res{"measures", {}, {}};
  int bound = default_size(opt, 6);
  note_sizes(res, bound, "x,y (void part)");

  auto t0 = Clock::now();
  {
    Tally c;
    c.check(potential_multiplicity(T("(\\x.x x) y"), "y") == 1, "M_y((\\x.x x) y)");
    c.check(potential_multiplicity(T("(x x)[x/y]"), "y") == 2, "M_y((x x)[x/y])");
    c.check(j_measure(T("(x x)[x/y]")).sorted_desc() == std::vector<std::int64_t>{2},
            "dm((x x)[x/y])");
    c.check(j_measure(T("(\\x.x x) y")).empty(), "dm((\\x.x x) y)");
    res.verdicts.push_back(verdict("constants/multiplicity", c, ms_since(t0)));
  }
  {
    Tally c;
    c.check(print_term(rename_at(T("x z x x"), {Position{1, 1, 1}, Position{2}}, "x", "y")) ==
                "y z x y",
            "rename_at(x z x x, {1.1.1, 2}, x, y)");
    auto splits = enumerate_splits(T("x x x x"), "x", "y");
    std::set<std::string> prints;
    for (const auto& s : splits) prints.insert(print_term(s));
    c.check(splits.size() == 14, "split count over four occurrences");
    c.check(prints.count("y x y x") == 1, "split y x y x admitted");
    c.check(prints.count("x y y y") == 1, "split x y y y admitted");
    c.check(prints.count("y y y y") == 0, "split y y y y rejected");
    res.verdicts.push_back(verdict("constants/renaming-splits", c, ms_since(t0)));
  }
  {
    Tally c;
    c.check(print_term(gc_project(T("f[y/x][x/u]"))) == "f[_/u]", "row 1");
    c.check(print_term(gc_project(T("f[y/x z][x/u][z/v]"))) == "f[_/u v]", "row 2");
    c.check(print_term(gc_project(T("f[x/u][z/v]"))) == "f[_/u][_/v]", "row 3");
    c.check(print_term(gc_project(T("f[y/x x][x/u]"))) == "f[_/u u]", "row 4");
    // The table's own reduction column: the w steps project correctly.
    RewriteSystem ljs = lambdaj_system();
    const Rule* w = ljs.find_rule("w");
    TermPtr r1 = T("f[y/x][x/u]");
    TermPtr r2 = T("f[y/x z][x/u][z/v]");
    auto s1 = apply_rule_at(*w, r1, {1});
    auto s2 = apply_rule_at(*w, r2, {1, 1});
    c.check(!s1.empty() && check_projection_step(r1, Step{"w", {1}, 0, s1[0]}, opt.budget).ok,
            "row 1 step");
    c.check(!s2.empty() && check_projection_step(r2, Step{"w", {1, 1}, 0, s2[0]}, opt.budget).ok,
            "row 2 step");
    res.verdicts.push_back(verdict("constants/gc-table", c, ms_since(t0)));
  }

  // The step lemma: on memory terms whose trunk terminates and whose surface
  // contents all terminate, every step keeps that hypothesis and either
  // advances the trunk or keeps it (up to the jump permutations) while the
  // surface measure drops. Termination of trunks and cell contents is decided
  // on the plain step graph: whole-term class graphs are intractable here
  // (stacked void cells commute freely, so class sizes grow factorially).
  auto t1 = Clock::now();
  RewriteSystem vs = void_system();
  PlainHeights heights(vs, opt.state_cap);
  auto sn_oracle = [&](const TermPtr& s) { return heights.height(s).has_value(); };
  auto eta_oracle = [&](const TermPtr& s) {
    std::optional<long long> h = heights.height(s);
    if (!h) throw TermError("eta of a non-terminating content");
    return *h;
  };
  Tally lemma;
  long long advanced = 0, stayed = 0, stayed_eq_o = 0, outside = 0;
  for (const auto& t : enumerate_terms(bound, Universe::Void, {"x", "y"})) {
    TermPtr a = trunk(t, {});
    if (!heights.height(a).has_value() || !surface_sn(t, {}, sn_oracle)) {
      ++outside;  // hypothesis fails: nothing to check
      continue;
    }
    std::optional<Multiset<std::pair<long long, long long>>> t_measure;
    for (const auto& step : one_step_reducts(vs, t)) {
      std::string cex = print_term(t) + " -" + step.rule_id + "-> " + print_term(step.after);
      try {
        if (!surface_sn(step.after, {}, sn_oracle)) {
          lemma.bad(cex + " : surface predicate lost");
          continue;
        }
        TermPtr b = trunk(step.after, {});
        bool measure_must_drop = false;
        if (alpha_eq(a, b)) {
          measure_must_drop = true;
          ++stayed;
        } else if (eq_equivalent(vs.axioms, a, b, opt.class_cap)) {
          measure_must_drop = true;  // trunk stable only up to the permutations
          ++stayed_eq_o;
        } else {
          // The trunk must advance: some permutation variant of b reachable
          // from a in >= 1 plain steps. Trunks stay small, so b's class is
          // cheap; the frontier is pruned by size like the projection search.
          EqClass cb = equivalence_class(vs.axioms, b, opt.class_cap);
          if (!cb.complete) throw TermError("trunk class capped");
          std::set<std::string> targets;
          for (const auto& m : cb.members) targets.insert(term_key(m));
          int max_sz = std::max(a->sz, b->sz) + 2;
          std::set<std::string> seen{term_key(a)};
          std::vector<TermPtr> frontier{a};
          bool reached = false;
          for (int d = 0; d < opt.budget && !reached && !frontier.empty(); ++d) {
            std::vector<TermPtr> next;
            for (const auto& s : frontier) {
              for (const auto& sn : one_step_reducts(vs, s)) {
                std::string k = term_key(sn.after);
                if (targets.count(k)) {
                  reached = true;
                  break;
                }
                if (sn.after->sz <= max_sz && seen.insert(k).second) next.push_back(sn.after);
              }
              if (reached) break;
            }
            frontier = std::move(next);
          }
          lemma.check(reached, cex);
          if (reached) ++advanced;
          continue;
        }
        if (measure_must_drop) {
          if (!t_measure.has_value()) t_measure = surface_measure(t, {}, eta_oracle);
          lemma.check(dm_greater(*t_measure, surface_measure(step.after, {}, eta_oracle)), cex);
        }
      } catch (const TermError& e) {
        lemma.unknown(cex + " : " + e.what());
      }
    }
  }
  res.verdicts.push_back(verdict(
      "void-lemma/step-disjunction", lemma, ms_since(t1),
      "advanced " + std::to_string(advanced) + ", trunk stable " + std::to_string(stayed) +
          " (+" + std::to_string(stayed_eq_o) + " up to permutations), " +
          std::to_string(outside) + " terms outside the hypothesis"));
  return res;
}

// ---------------------------------------------------------------------------
// bisimulation: the safe theories answer every step; the unsafe ones have
// pinned, replayable counterexamples.

// Replays a reported violation: the members are equivalent, the step fires as
// recorded, and no step of the other member reaches the same class.
bool violation_replays(Analyzer& an, const BisimViolation& v, const SuiteOptions& opt,
                       std::string* why) {
  const RewriteSystem& sys = an.system();
  if (!eq_equivalent(sys.axioms, v.from_member, v.other_member, opt.class_cap)) {
    *why = "members are not equivalent";
    return false;
  }
  const Rule* rule = sys.find_rule(v.step.rule_id);
  if (rule == nullptr) {
    *why = "unknown rule " + v.step.rule_id;
    return false;
  }
  auto alts = apply_rule_at(*rule, v.from_member, v.step.pos);
  if (v.step.alternative >= alts.size() || !alpha_eq(alts[v.step.alternative], v.step.after)) {
    *why = "the step does not replay";
    return false;
  }
  std::string target = term_key(an.canon(v.step.after));
  for (const Step& s : one_step_reducts(sys, v.other_member)) {
    if (term_key(an.canon(s.after)) == target) {
      *why = "the other member answers the step after all";
      return false;
    }
  }
  return true;
}

Verdict counterexample_verdict(const std::string& id, RewriteSystem sys, const TermPtr& seed,
                               const SuiteOptions& opt) {
  auto t0 = Clock::now();
  Analyzer an(std::move(sys), opt.class_cap);
  Tally c;
  std::string extra;
  auto v = an.bisim_violation(seed);
  if (!v.has_value()) {
    c.bad(print_term(seed) + " : no violation found");
  } else {
    std::string why;
    c.check(violation_replays(an, *v, opt, &why), print_term(seed) + " : " + why);
    extra = "unanswered " + v->step.rule_id + " step of " + print_term(v->from_member);
  }
  return verdict(id, c, ms_since(t0), extra);
}

SuiteResult suite_bisim_o(const SuiteOptions& opt) {
  SuiteResult res{"bisim-o", {}, {}};
  int bound = default_size(opt, 6);
  note_sizes(res, bound, "x,y");
  auto terms = enumerate_terms(bound, Universe::Jump, {"x", "y"});
  res.params["terms"] = std::to_string(terms.size());

  struct Case {
    std::string id;
    RewriteSystem sys;
  };
  std::vector<Case> cases;
  {
    RewriteSystem cs = lambdaj_system();
    cs.name = "lambdaj_cs";
    cs.axioms = axiom_set("cs");
    cases.push_back({"bisim/cs-holds", std::move(cs)});
    cases.push_back({"bisim/o-holds", lambdaj_o_system()});
  }
  for (auto& cse : cases) {
    auto t0 = Clock::now();
    Analyzer an(std::move(cse.sys), opt.class_cap);
    Tally tally;
    for (const auto& t : terms) {
      try {
        auto v = an.bisim_violation(t);
        std::string cex;
        if (v.has_value()) {
          cex = print_term(v->from_member) + " -" + v->step.rule_id + "-> " +
                print_term(v->step.after) + " unanswered by " + print_term(v->other_member);
        }
        tally.check(!v.has_value(), cex);
      } catch (const TermError& e) {
        tally.unknown(print_term(t) + " : " + e.what());
      }
    }
    res.verdicts.push_back(verdict(cse.id, tally, ms_since(t0)));
  }
  res.verdicts.push_back(counterexample_verdict("bisim/obox-counterexample",
                                                lambdaj_obox_system(), T("z[x/y][y/u]"), opt));
  return res;
}

SuiteResult suite_bisim_void(const SuiteOptions& opt) {
  SuiteResult res{"bisim-void", {}, {}};
  res.verdicts.push_back(counterexample_verdict("bisim/void-o-counterexample", void_system(),
                                                T("x[_/y[_/x] z]"), opt));
  return res;
}

SuiteResult suite_bisim_sigmahat(const SuiteOptions& opt) {
  SuiteResult res{"bisim-sigmahat", {}, {}};
  RewriteSystem sys = beta_system();
  sys.name = "beta_sigmahat";
  sys.axioms = axiom_set("sigmahat");
  res.verdicts.push_back(counterexample_verdict("bisim/sigmahat-counterexample", std::move(sys),
                                                T("(\\y.(\\x.y) a) b"), opt));
  return res;
}

// ---------------------------------------------------------------------------
// perm: reduction height is invariant across the sigma-hat classes of
// strongly normalizing pure terms, and u_hat moves stay inside pi.

SuiteResult suite_perm(const SuiteOptions& opt) {
  SuiteResult res{"perm", {}, {}};
  int bound = default_size(opt, 9);
  note_sizes(res, bound, "closed, plus an open sample over x");
  res.params["seed"] = std::to_string(opt.seed);
  auto t0 = Clock::now();

  Analyzer beta(beta_system(), opt.class_cap);
  auto sigmahat = axiom_set("sigmahat");
  std::set<std::string> seen;
  auto check_class = [&](const TermPtr& t, Tally& tally) {
    SnCertificate cert = beta.certify_sn(t, opt.state_cap);
    if (cert.status == SnCertificate::Status::Capped) {
      tally.unknown(print_term(t) + " : SN certificate capped");
      return;
    }
    if (cert.status == SnCertificate::Status::CycleFound) return;  // not SN: out of scope
    EqClass cls = equivalence_class(sigmahat, t, opt.class_cap);
    if (!cls.complete) {
      tally.unknown(print_term(t) + " : class capped");
      return;
    }
    if (!seen.insert(term_key(cls.canonical())).second) return;  // already checked
    try {
      long long h = beta.eta(cls.members[0]);
      std::string cex;
      bool all_equal = true;
      for (const auto& m : cls.members) {
        long long hm = beta.eta(m);
        if (hm != h) {
          all_equal = false;
          cex = print_term(cls.members[0]) + " has height " + std::to_string(h) + " but " +
                print_term(m) + " has height " + std::to_string(hm);
          break;
        }
      }
      tally.check(all_equal, cex);
    } catch (const TermError& e) {
      tally.bad(print_term(t) + " : height undefined on a class member (" + e.what() + ")");
    }
  };

  {
    Tally closed;
    for (const auto& t : enumerate_terms(bound, Universe::Pure, {})) check_class(t, closed);
    res.verdicts.push_back(verdict("perm/eta-closed", closed, ms_since(t0)));
  }
  {
    auto t1 = Clock::now();
    Tally open;
    std::mt19937 rng(opt.seed);
    std::uniform_int_distribution<int> size_dist(5, std::max(5, bound));
    for (int i = 0; i < 120; ++i)
      check_class(random_term(rng, size_dist(rng), Universe::Pure, {"x"}), open);
    res.verdicts.push_back(verdict("perm/eta-open-sample", open, ms_since(t1)));
  }
  {
    auto t1 = Clock::now();
    Tally uhat;
    RewriteSystem perm = permutative_system(false);
    auto pi = axiom_set("pi");
    for (const auto& t : enumerate_terms(std::min(7, bound), Universe::Pure, {"x", "y"})) {
      for (const Step& s : one_step_reducts(perm, t)) {
        if (s.rule_id != "u_hat") continue;
        uhat.check(eq_equivalent(pi, t, s.after, opt.class_cap),
                   print_term(t) + " -u_hat-> " + print_term(s.after));
      }
    }
    res.verdicts.push_back(verdict("perm/uhat-inside-pi", uhat, ms_since(t1)));
  }
  long long ms = ms_since(t0);
  res.verdicts.push_back(plain_verdict("perm/time-box", ms < 300000,
                                       std::to_string(ms) + " ms against 300000 ms", ms));
  return res;
}

// ---------------------------------------------------------------------------
// guerrini: the unsafe theory loses termination on the classic seed; the safe
// theory keeps it.

SuiteResult suite_guerrini(const SuiteOptions& opt) {
  SuiteResult res{"guerrini", {}, {}};
  TermPtr u = T("(z z)[z/y]");
  TermPtr seed = jump(u, "x", u);
  res.params["seed_term"] = print_term(seed);

  {
    auto t0 = Clock::now();
    Analyzer unsafe(lambdaj_n_system(), opt.class_cap);
    DivergenceResult dv = unsafe.detect_divergence(seed, 12, opt.state_cap);
    Tally c;
    c.check(dv.found && dv.kind == "self-embedding", "no self-embedding found");
    if (dv.found && dv.kind == "self-embedding") {
      c.check(dv.witness != nullptr && has_proper_subterm(dv.witness, seed),
              "the witness does not contain the seed");
      c.check(dv.path.size() >= 2 && term_key(dv.path.front()) == term_key(unsafe.canon(seed)),
              "the path does not start at the seed's class");
      bool connected = true;
      for (size_t i = 0; i + 1 < dv.path.size() && connected; ++i) {
        auto succs = unsafe.successors(dv.path[i]);  // copy: the table may grow
        std::string next = term_key(dv.path[i + 1]);
        connected = std::any_of(succs.begin(), succs.end(),
                                [&](const std::pair<TermPtr, std::string>& p) {
                                  return term_key(p.first) == next;
                                });
      }
      c.check(connected, "the path is not connected by single steps");
      auto mems = unsafe.members(dv.path.back());
      c.check(std::any_of(mems.begin(), mems.end(),
                          [&](const TermPtr& m) { return alpha_eq(m, dv.witness); }),
              "the witness is not a member of the final class");
    }
    std::string extra =
        dv.found ? "embedding after " + std::to_string(dv.path.size() - 1) + " steps" : "";
    res.verdicts.push_back(verdict("guerrini/unsafe-diverges", c, ms_since(t0), extra));
  }
  {
    auto t0 = Clock::now();
    Analyzer safe(lambdaj_obox_system(), opt.class_cap);
    SnCertificate cert = safe.certify_sn(seed, opt.state_cap);
    Tally c;
    if (cert.status == SnCertificate::Status::Proven) {
      c.ok();
    } else if (cert.status == SnCertificate::Status::Capped) {
      c.unknown(print_term(seed) + " : state budget exhausted");
    } else {
      c.bad(print_term(seed) + " : cycle found");
    }
    res.verdicts.push_back(verdict("guerrini/safe-terminates", c, ms_since(t0),
                                   std::to_string(cert.states) + " classes"));
  }
  return res;
}

// ---------------------------------------------------------------------------
// psn: beta-SN closed pure terms stay SN in the structural systems.

SuiteResult suite_psn(const SuiteOptions& opt) {
  SuiteResult res{"psn", {}, {}};
  int bound = default_size(opt, 9);
  note_sizes(res, bound, "closed");
  auto t0 = Clock::now();
  PsnReport rep = psn_suite(bound, opt.state_cap);
  long long ms = ms_since(t0);
  Tally c;
  c.checked = rep.beta_sn;
  c.failed = static_cast<long long>(rep.failures.size());
  c.undecided = static_cast<long long>(rep.inconclusive.size());
  if (!rep.failures.empty()) {
    c.first = print_term(rep.failures.front());
  } else if (!rep.inconclusive.empty()) {
    c.first = print_term(rep.inconclusive.front());
  }
  res.verdicts.push_back(
      verdict("psn/sn-preserved", c, ms,
              std::to_string(rep.candidates) + " closed terms, " + std::to_string(rep.beta_sn) +
                  " beta-SN, " + std::to_string(rep.verified) +
                  " certified with and without lifting"));
  res.verdicts.push_back(plain_verdict("psn/time-box", ms < 900000,
                                       std::to_string(ms) + " ms against 900000 ms", ms));
  return res;
}

// ---------------------------------------------------------------------------
// projection: every step and axiom move projects onto the memory calculus.

SuiteResult suite_projection(const SuiteOptions& opt) {
  SuiteResult res{"projection", {}, {}};
  int bound = default_size(opt, 6);
  note_sizes(res, bound, "x,y");
  res.params["budget"] = std::to_string(opt.budget);
  RewriteSystem sys = lambdaj_obox_u_system();
  std::vector<Equivalence> axioms = axiom_set("obox");
  axioms.push_back(axiom("box1u"));
  axioms.push_back(axiom("box2u"));
  auto terms = enumerate_terms(bound, Universe::Jump, {"x", "y"});
  res.params["terms"] = std::to_string(terms.size());

  auto t0 = Clock::now();
  Tally steps;
  for (const auto& t : terms) {
    for (const Step& s : one_step_reducts(sys, t)) {
      ProjectionCheck pc = check_projection_step(t, s, opt.budget);
      steps.check(pc.ok, print_term(t) + " -" + s.rule_id + "-> " + print_term(s.after) + " : " +
                             pc.detail);
    }
  }
  res.verdicts.push_back(verdict("projection/steps", steps, ms_since(t0)));

  auto t1 = Clock::now();
  Tally moves;
  for (const auto& t : terms) {
    for (const auto& ax : axioms) {
      for (const Position& p : positions(t)) {
        for (bool fwd : {true, false}) {
          for (const TermPtr& r : apply_equivalence_at(ax, fwd, t, p)) {
            ProjectionCheck pc = check_projection_axiom(t, r, ax.id, opt.budget);
            moves.check(pc.ok, print_term(t) + " ~" + ax.id + "~ " + print_term(r) + " : " +
                                   pc.detail);
          }
        }
      }
    }
  }
  res.verdicts.push_back(verdict("projection/axiom-moves", moves, ms_since(t1)));
  return res;
}

// ---------------------------------------------------------------------------
// inner / outer: the propagation measures decrease, are commutation-blind,
// and both systems normalize.

SuiteResult propagation_suite(const std::string& name, RewriteSystem sys,
                              const std::function<std::int64_t(const TermPtr&)>& measure,
                              const SuiteOptions& opt) {
  SuiteResult res{name, {}, {}};
  int bound = default_size(opt, 7);
  note_sizes(res, bound, "x,y");
  auto terms = enumerate_terms(bound, Universe::Jump, {"x", "y"});
  res.params["terms"] = std::to_string(terms.size());
  auto cs = axiom_set("cs");

  auto t0 = Clock::now();
  Tally dec, inv, norm;
  for (const auto& t : terms) {
    std::int64_t m = measure(t);
    for (const Step& s : one_step_reducts(sys, t)) {
      dec.check(measure(s.after) < m,
                print_term(t) + " -" + s.rule_id + "-> " + print_term(s.after));
    }
    EqClass cls = equivalence_class(cs, t, opt.class_cap);
    if (!cls.complete) {
      inv.unknown(print_term(t) + " : class capped");
    } else {
      bool same = std::all_of(cls.members.begin(), cls.members.end(),
                              [&](const TermPtr& u) { return measure(u) == m; });
      inv.check(same, print_term(t));
    }
    norm.check(normalize(sys, t, 10000).complete, print_term(t));
  }
  long long ms = ms_since(t0);
  res.verdicts.push_back(verdict(name + "/measure-decreases", dec, ms));
  res.verdicts.push_back(verdict(name + "/cs-invariant", inv, ms));
  res.verdicts.push_back(verdict(name + "/normalizes", norm, ms));
  return res;
}

// ---------------------------------------------------------------------------
// les-sim: every root step of the substitution calculus expands into its
// expected rule multiset in the structural target, modulo commutation.

SuiteResult suite_les_sim(const SuiteOptions& opt) {
  SuiteResult res{"les-sim", {}, {}};
  int bound = default_size(opt, 7);
  note_sizes(res, bound, "x,y");
  res.params["budget"] = std::to_string(opt.budget);
  RewriteSystem les = les_system();
  const std::map<std::string, std::vector<std::string>> expected{
      {"B", {"dB"}},   {"var", {"d"}},    {"w", {"w"}},
      {"lam", {"in1"}}, {"app_l", {"in2"}}, {"app_r", {"in3"}},
      {"comp1", {"in4"}}, {"app_both", {"c", "in2", "in3"}}, {"comp2", {"c", "in4"}}};
  auto terms = enumerate_terms(bound, Universe::Jump, {"x", "y"});
  res.params["terms"] = std::to_string(terms.size());

  auto t0 = Clock::now();
  Tally sim;
  for (const auto& t : terms) {
    for (const Rule& rule : les.rules) {
      auto alts = apply_rule_at(rule, t, {});
      for (size_t i = 0; i < alts.size(); ++i) {
        Step st{rule.id, {}, i, alts[i]};
        SimulationResult sr = simulate_les_step(t, st, opt.budget);
        bool ok = sr.ok && sorted_ids(sr.rule_ids) == sorted_ids(expected.at(rule.id));
        sim.check(ok, print_term(t) + " -" + rule.id + "-> " + print_term(alts[i]) + " : " +
                          (sr.ok ? "unexpected rule multiset" : sr.detail));
      }
    }
  }
  res.verdicts.push_back(verdict("les/root-steps-simulated", sim, ms_since(t0)));
  return res;
}

// ---------------------------------------------------------------------------
// diamond: parallel reduction of pure terms has the diamond property.

SuiteResult suite_diamond(const SuiteOptions& opt) {
  SuiteResult res{"diamond", {}, {}};
  int bound = default_size(opt, 6);
  note_sizes(res, bound, "x,y");
  auto terms = enumerate_terms(bound, Universe::Pure, {"x", "y"});
  res.params["terms"] = std::to_string(terms.size());

  auto t0 = Clock::now();
  Tally dia;
  for (const auto& t : terms) {
    std::vector<TermPtr> par = parallel_reducts(t);
    std::vector<std::set<std::string>> reach;
    reach.reserve(par.size());
    for (const auto& p : par) {
      std::set<std::string> keys;
      for (const auto& q : parallel_reducts(p)) keys.insert(term_key(q));
      reach.push_back(std::move(keys));
    }
    bool ok = true;
    for (size_t i = 0; i < par.size() && ok; ++i) {
      for (size_t j = i + 1; j < par.size() && ok; ++j) {
        bool meet = std::any_of(reach[i].begin(), reach[i].end(), [&](const std::string& k) {
          return reach[j].count(k) > 0;
        });
        if (!meet) {
          ok = false;
          dia.bad(print_term(par[i]) + " and " + print_term(par[j]) + " from " + print_term(t));
        }
      }
    }
    if (ok) dia.ok();
  }
  res.verdicts.push_back(verdict("diamond/parallel-moves", dia, ms_since(t0)));
  return res;
}

// ---------------------------------------------------------------------------
// cr-modulo: erasing steps postpone across random traces.

SuiteResult suite_cr_modulo(const SuiteOptions& opt) {
  SuiteResult res{"cr-modulo", {}, {}};
  res.params["traces"] = std::to_string(opt.trace_count);
  res.params["seed"] = std::to_string(opt.seed);
  RewriteSystem sys = lambdaj_system();
  std::mt19937 rng(opt.seed);
  std::uniform_int_distribution<int> size_dist(4, 9);
  std::uniform_int_distribution<int> len_dist(1, 8);
  auto rule_count = [](const Trace& x, const char* id) {
    return std::count_if(x.steps.begin(), x.steps.end(),
                         [id](const Step& s) { return s.rule_id == id; });
  };

  auto t0 = Clock::now();
  Tally post_checks;
  int repaired = 0;
  for (int i = 0; i < opt.trace_count; ++i) {
    Trace tr;
    tr.start = random_term(rng, size_dist(rng), Universe::Jump, {"x", "y"});
    int len = len_dist(rng);
    for (int k = 0; k < len; ++k) {
      auto steps = one_step_reducts(sys, tr.end());
      if (steps.empty()) break;
      std::uniform_int_distribution<size_t> pick(0, steps.size() - 1);
      tr.steps.push_back(steps[pick(rng)]);
    }
    std::string cex = "trace " + std::to_string(i) + " from " + print_term(tr.start);
    try {
      Trace post = postpone_w(sys, tr);
      std::string why;
      bool ok = validate(sys, post, &why);
      if (!ok) cex += " : " + why;
      ok = ok && alpha_eq(post.start, tr.start) && alpha_eq(post.end(), tr.end());
      // dB and d counts survive postponement exactly; an erasure that enabled
      // a dereliction costs one extra contraction when it is pushed back, so
      // c counts may only grow.
      ok = ok && rule_count(post, "dB") == rule_count(tr, "dB");
      ok = ok && rule_count(post, "d") == rule_count(tr, "d");
      ok = ok && rule_count(post, "c") >= rule_count(tr, "c");
      if (rule_count(post, "c") > rule_count(tr, "c")) ++repaired;
      bool seen_w = false;
      for (const Step& s : post.steps) {
        if (s.rule_id == "w") {
          seen_w = true;
        } else if (seen_w) {
          ok = false;
          cex += " : erasing step not last";
          break;
        }
      }
      post_checks.check(ok, cex);
    } catch (const TermError& e) {
      post_checks.bad(cex + " : " + e.what());
    }
  }
  res.verdicts.push_back(verdict("postpone/endpoints-and-counts", post_checks, ms_since(t0),
                                 std::to_string(repaired) + " traces needed contraction repairs"));
  return res;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "fc",   "j-confluence",   "measures", "bisim-o",  "bisim-void",
      "bisim-sigmahat", "perm", "guerrini", "psn",      "projection",
      "inner", "outer",         "les-sim",  "diamond",  "cr-modulo"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  if (name == "fc") return suite_fc(opt);
  if (name == "j-confluence") return suite_j_confluence(opt);
  if (name == "measures") return suite_measures(opt);
  if (name == "bisim-o") return suite_bisim_o(opt);
  if (name == "bisim-void") return suite_bisim_void(opt);
  if (name == "bisim-sigmahat") return suite_bisim_sigmahat(opt);
  if (name == "perm") return suite_perm(opt);
  if (name == "guerrini") return suite_guerrini(opt);
  if (name == "psn") return suite_psn(opt);
  if (name == "projection") return suite_projection(opt);
  if (name == "inner") return propagation_suite("inner", inner_system(), inner_measure, opt);
  if (name == "outer") return propagation_suite("outer", outer_system(), outer_measure, opt);
  if (name == "les-sim") return suite_les_sim(opt);
  if (name == "diamond") return suite_diamond(opt);
  if (name == "cr-modulo") return suite_cr_modulo(opt);
  throw TermError("unknown suite: " + name);
}

}  // namespace lj
