#pragma once
// Generic rewriting engine: rules applied at the root are closed under
// contexts; equational axioms are closed under contexts and symmetry and
// induce equivalence classes; reduction traces are replayable.
//
// Every rule and axiom is self-contained: the free variables of a result are
// free variables of the redex, so plugging results back into the surrounding
// context never captures. Rules that need fresh names draw them
// deterministically from the redex, which keeps traces replayable.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lj/term.hpp"

namespace lj {

struct Rule {
  std::string id;
  // All results of rewriting this exact subterm at its root (empty: no redex).
  std::function<std::vector<TermPtr>(const TermPtr&)> apply_root;
  // The alternative the deterministic strategy picks (results.size() -> index).
  // Defaults to the first.
  std::function<size_t(size_t)> det_pick;
};

struct Equivalence {
  std::string id;
  std::function<std::vector<TermPtr>(const TermPtr&)> forward;
  std::function<std::vector<TermPtr>(const TermPtr&)> backward;
};

struct RewriteSystem {
  std::string name;
  Universe universe = Universe::Jump;
  std::vector<Rule> rules;
  std::vector<Equivalence> axioms;  // the modulo part; empty for plain systems

  const Rule* find_rule(const std::string& id) const;
};

// One reduction step: rule `rule_id` applied at `pos`, taking result number
// `alternative` of the rule's output at that position.
struct Step {
  std::string rule_id;
  Position pos;
  size_t alternative = 0;
  TermPtr after;
};

struct Trace {
  TermPtr start;
  std::vector<Step> steps;
  TermPtr end() const { return steps.empty() ? start : steps.back().after; }
};

// All results of `rule` at position `pos` of t (empty if it does not apply).
std::vector<TermPtr> apply_rule_at(const Rule& rule, const TermPtr& t, const Position& pos);

// Every step of every rule at every position, in leftmost-outermost position
// order, rules in system order, alternatives in rule order.
std::vector<Step> one_step_reducts(const RewriteSystem& sys, const TermPtr& t);

// The first step in the order above, if any.
std::optional<Step> deterministic_step(const RewriteSystem& sys, const TermPtr& t);

bool is_normal_form(const RewriteSystem& sys, const TermPtr& t);

// Replays the trace: every step must reproduce its recorded result up to
// alpha (rules draw fresh names deterministically, so exact replay holds).
bool validate(const RewriteSystem& sys, const Trace& trace, std::string* why = nullptr);

struct NormResult {
  Trace trace;
  bool complete = false;  // false when the step cap was hit
  TermPtr term() const { return trace.end(); }
};

// Deterministic normalization (leftmost-outermost, first rule, chosen
// alternative), capped.
NormResult normalize(const RewriteSystem& sys, const TermPtr& t, size_t max_steps = 10000);

// ---------------------------------------------------------------------------
// Equivalence classes

struct EqMove {
  std::string axiom_id;
  bool forward = true;
  Position pos;
  size_t alternative = 0;  // index among the axiom's results at that position
};

// The closure of t under the axioms, applied at any position in either
// direction; members are alpha-canonical and deduplicated. Parent links make
// every member reachable from member 0 by a replayable list of moves.
struct EqClass {
  std::vector<TermPtr> members;  // members[0] is alpha_canonical(t)
  std::vector<int> parent;       // -1 for member 0
  std::vector<EqMove> via;       // move applied to the parent, aligned with members
  std::map<std::string, int> index_of_key;
  bool complete = true;  // false when the member cap was hit
  int canonical_index = 0;

  TermPtr canonical() const { return members[static_cast<size_t>(canonical_index)]; }
  int find(const TermPtr& t) const;  // member index or -1
};

std::vector<TermPtr> apply_equivalence_at(const Equivalence& ax, bool forward, const TermPtr& t,
                                          const Position& pos);

EqClass equivalence_class(const std::vector<Equivalence>& axioms, const TermPtr& t,
                          size_t cap = 100000);

// Moves taking member 0 to the given member, in application order.
std::vector<EqMove> eq_path(const EqClass& cls, int member);

// Replays moves from `from`; checks the result is alpha-equal to `to`.
bool validate_eq_path(const std::vector<Equivalence>& axioms, const TermPtr& from,
                      const std::vector<EqMove>& moves, const TermPtr& to,
                      std::string* why = nullptr);

bool eq_equivalent(const std::vector<Equivalence>& axioms, const TermPtr& t, const TermPtr& u,
                   size_t cap = 100000);

// ---------------------------------------------------------------------------
// Reduction modulo the system's axioms

struct ModuloStep {
  int member = 0;  // which class member the step fires from
  Step step;
};

// All one-step reductions from any member of the class.
std::vector<ModuloStep> one_step_modulo(const RewriteSystem& sys, const EqClass& cls);

}  // namespace lj
