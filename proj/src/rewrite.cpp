#include "lj/rewrite.hpp"

#include <deque>

#include "lj/syntax.hpp"

namespace lj {

const Rule* RewriteSystem::find_rule(const std::string& id) const {
  for (const Rule& r : rules)
    if (r.id == id) return &r;
  return nullptr;
}

std::vector<TermPtr> apply_rule_at(const Rule& rule, const TermPtr& t, const Position& pos) {
  TermPtr sub = subterm_at(t, pos);
  std::vector<TermPtr> results = rule.apply_root(sub);
  for (TermPtr& r : results) r = replace_at(t, pos, r);
  return results;
}

std::vector<Step> one_step_reducts(const RewriteSystem& sys, const TermPtr& t) {
  std::vector<Step> out;
  for (const Position& pos : positions(t)) {
    TermPtr sub = subterm_at(t, pos);
    for (const Rule& rule : sys.rules) {
      std::vector<TermPtr> results = rule.apply_root(sub);
      for (size_t i = 0; i < results.size(); ++i)
        out.push_back(Step{rule.id, pos, i, replace_at(t, pos, results[i])});
    }
  }
  return out;
}

std::optional<Step> deterministic_step(const RewriteSystem& sys, const TermPtr& t) {
  for (const Position& pos : positions(t)) {
    TermPtr sub = subterm_at(t, pos);
    for (const Rule& rule : sys.rules) {
      std::vector<TermPtr> results = rule.apply_root(sub);
      if (results.empty()) continue;
      size_t pick = rule.det_pick ? rule.det_pick(results.size()) : 0;
      if (pick >= results.size()) pick = results.size() - 1;
      return Step{rule.id, pos, pick, replace_at(t, pos, results[pick])};
    }
  }
  return std::nullopt;
}

bool is_normal_form(const RewriteSystem& sys, const TermPtr& t) {
  return !deterministic_step(sys, t).has_value();
}

bool validate(const RewriteSystem& sys, const Trace& trace, std::string* why) {
  TermPtr cur = trace.start;
  for (size_t i = 0; i < trace.steps.size(); ++i) {
    const Step& s = trace.steps[i];
    const Rule* rule = sys.find_rule(s.rule_id);
    if (!rule) {
      if (why) *why = "step " + std::to_string(i) + ": unknown rule " + s.rule_id;
      return false;
    }
    std::vector<TermPtr> results;
    try {
      results = apply_rule_at(*rule, cur, s.pos);
    } catch (const TermError& e) {
      if (why) *why = "step " + std::to_string(i) + ": " + e.what();
      return false;
    }
    if (s.alternative >= results.size()) {
      if (why)
        *why = "step " + std::to_string(i) + ": rule " + s.rule_id + " has " +
               std::to_string(results.size()) + " results at " + position_to_string(s.pos);
      return false;
    }
    if (!alpha_eq(results[s.alternative], s.after)) {
      if (why)
        *why = "step " + std::to_string(i) + ": recorded result differs, got " +
               print_term(results[s.alternative]);
      return false;
    }
    cur = s.after;
  }
  return true;
}

NormResult normalize(const RewriteSystem& sys, const TermPtr& t, size_t max_steps) {
  NormResult out;
  out.trace.start = t;
  TermPtr cur = t;
  for (size_t i = 0; i < max_steps; ++i) {
    std::optional<Step> s = deterministic_step(sys, cur);
    if (!s) {
      out.complete = true;
      return out;
    }
    cur = s->after;
    out.trace.steps.push_back(std::move(*s));
  }
  out.complete = !deterministic_step(sys, cur).has_value();
  return out;
}

// ---------------------------------------------------------------------------

std::vector<TermPtr> apply_equivalence_at(const Equivalence& ax, bool forward, const TermPtr& t,
                                          const Position& pos) {
  TermPtr sub = subterm_at(t, pos);
  std::vector<TermPtr> results = forward ? ax.forward(sub) : ax.backward(sub);
  for (TermPtr& r : results) r = replace_at(t, pos, r);
  return results;
}

int EqClass::find(const TermPtr& t) const {
  auto it = index_of_key.find(term_key(t));
  return it == index_of_key.end() ? -1 : it->second;
}

EqClass equivalence_class(const std::vector<Equivalence>& axioms, const TermPtr& t, size_t cap) {
  EqClass cls;
  cls.members.push_back(alpha_canonical(t));
  cls.parent.push_back(-1);
  cls.via.push_back(EqMove{});
  cls.index_of_key.emplace(term_key(t), 0);

  for (size_t i = 0; i < cls.members.size(); ++i) {
    TermPtr cur = cls.members[i];
    for (const Position& pos : positions(cur)) {
      TermPtr sub = subterm_at(cur, pos);
      for (const Equivalence& ax : axioms) {
        for (bool fwd : {true, false}) {
          std::vector<TermPtr> results = fwd ? ax.forward(sub) : ax.backward(sub);
          for (size_t alt = 0; alt < results.size(); ++alt) {
            TermPtr whole = alpha_canonical(replace_at(cur, pos, results[alt]));
            std::string key = term_key(whole);
            if (cls.index_of_key.count(key)) continue;
            if (cls.members.size() >= cap) {
              cls.complete = false;
              goto done;
            }
            cls.index_of_key.emplace(std::move(key), static_cast<int>(cls.members.size()));
            cls.members.push_back(whole);
            cls.parent.push_back(static_cast<int>(i));
            cls.via.push_back(EqMove{ax.id, fwd, pos, alt});
          }
        }
      }
    }
  }
done:
  for (size_t i = 1; i < cls.members.size(); ++i)
    if (term_lt(cls.members[i], cls.members[static_cast<size_t>(cls.canonical_index)]))
      cls.canonical_index = static_cast<int>(i);
  return cls;
}

std::vector<EqMove> eq_path(const EqClass& cls, int member) {
  std::vector<EqMove> path;
  for (int i = member; i > 0; i = cls.parent[static_cast<size_t>(i)])
    path.push_back(cls.via[static_cast<size_t>(i)]);
  return {path.rbegin(), path.rend()};
}

bool validate_eq_path(const std::vector<Equivalence>& axioms, const TermPtr& from,
                      const std::vector<EqMove>& moves, const TermPtr& to, std::string* why) {
  TermPtr cur = alpha_canonical(from);
  for (size_t i = 0; i < moves.size(); ++i) {
    const EqMove& m = moves[i];
    const Equivalence* ax = nullptr;
    for (const Equivalence& a : axioms)
      if (a.id == m.axiom_id) ax = &a;
    if (!ax) {
      if (why) *why = "move " + std::to_string(i) + ": unknown axiom " + m.axiom_id;
      return false;
    }
    std::vector<TermPtr> results;
    try {
      results = apply_equivalence_at(*ax, m.forward, cur, m.pos);
    } catch (const TermError& e) {
      if (why) *why = "move " + std::to_string(i) + ": " + e.what();
      return false;
    }
    if (m.alternative >= results.size()) {
      if (why)
        *why = "move " + std::to_string(i) + ": " + m.axiom_id +
               (m.forward ? "" : " (reversed)") + " has " + std::to_string(results.size()) +
               " results at " + position_to_string(m.pos) + " of " + print_term(cur);
      return false;
    }
    cur = alpha_canonical(results[m.alternative]);
  }
  if (!alpha_eq(cur, to)) {
    if (why) *why = "path ends at " + print_term(cur) + ", expected " + print_term(to);
    return false;
  }
  return true;
}

bool eq_equivalent(const std::vector<Equivalence>& axioms, const TermPtr& t, const TermPtr& u,
                   size_t cap) {
  if (alpha_eq(t, u)) return true;
  EqClass cls = equivalence_class(axioms, t, cap);
  return cls.find(u) >= 0;
}

std::vector<ModuloStep> one_step_modulo(const RewriteSystem& sys, const EqClass& cls) {
  std::vector<ModuloStep> out;
  for (size_t i = 0; i < cls.members.size(); ++i)
    for (Step& s : one_step_reducts(sys, cls.members[i]))
      out.push_back(ModuloStep{static_cast<int>(i), std::move(s)});
  return out;
}

}  // namespace lj
