#include "lj/projection.hpp"

#include <deque>
#include <set>

#include "lj/equivalences.hpp"
#include "lj/lambdaj.hpp"
#include "lj/lambdavoid.hpp"
#include "lj/syntax.hpp"

namespace lj {

TermPtr gc_project(const TermPtr& t) {
  switch (t->tag) {
    case Tag::Var:
      return t;
    case Tag::Lam: {
      TermPtr b = gc_project(t->a);
      return b == t->a ? t : lam(t->name, b);
    }
    case Tag::App: {
      TermPtr f = gc_project(t->a), a = gc_project(t->b);
      return f == t->a && a == t->b ? t : app(f, a);
    }
    case Tag::Jump: {
      TermPtr body = gc_project(t->a);
      TermPtr content = gc_project(t->b);
      if (t->name != void_binder && t->a->fvs.count(t->name))
        return subst_raw(body, t->name, content);
      return jump(body, void_binder, content);
    }
  }
  throw TermError("unreachable");
}

namespace {

std::string ckey(const TermPtr& t) { return term_key(alpha_canonical(t)); }

// Breadth-first search from `from` to `to` over {h, u} modulo void o.
// Reaching the target's class with zero steps counts. States are class
// canonicals; reducts larger than both endpoints (plus slack) are pruned.
bool hu_reachable(const TermPtr& from, const TermPtr& to, int budget, std::string* detail) {
  RewriteSystem hu{"hu", Universe::Void, {rule_h(), rule_u()}, axiom_set("o")};
  int max_size = std::max(size(from), size(to)) + 2;

  EqClass target = equivalence_class(hu.axioms, to);
  std::set<std::string> target_keys;
  for (const TermPtr& m : target.members) target_keys.insert(term_key(m));

  EqClass start = equivalence_class(hu.axioms, from);
  if (target_keys.count(term_key(start.canonical()))) return true;

  std::deque<std::pair<TermPtr, int>> queue{{start.canonical(), 0}};
  std::set<std::string> seen{term_key(start.canonical())};
  while (!queue.empty()) {
    auto [cur, depth] = queue.front();
    queue.pop_front();
    if (depth >= budget) continue;
    EqClass cls = equivalence_class(hu.axioms, cur);
    for (const ModuloStep& ms : one_step_modulo(hu, cls)) {
      if (size(ms.step.after) > max_size) continue;
      EqClass next = equivalence_class(hu.axioms, ms.step.after);
      std::string key = term_key(next.canonical());
      if (target_keys.count(key)) return true;
      if (!seen.insert(key).second) continue;
      queue.emplace_back(next.canonical(), depth + 1);
    }
  }
  if (detail)
    *detail = "no {h,u}/o path from " + print_term(from) + " to " + print_term(to) +
              " within " + std::to_string(budget) + " steps";
  return false;
}

// Breadth-first search over {beta_v, dB_v}, at least one step.
bool beta_reachable(const TermPtr& from, const TermPtr& to, int budget, std::string* detail) {
  RewriteSystem bv{"bv", Universe::Void, {rule_beta_void(), rule_dB_void()}, {}};
  std::string goal = ckey(to);
  std::deque<std::pair<TermPtr, int>> queue{{from, 0}};
  std::set<std::string> seen{ckey(from)};
  while (!queue.empty()) {
    auto [cur, depth] = queue.front();
    queue.pop_front();
    if (depth >= budget) continue;
    for (const Step& s : one_step_reducts(bv, cur)) {
      std::string key = ckey(s.after);
      if (key == goal) return true;
      if (!seen.insert(key).second) continue;
      queue.emplace_back(s.after, depth + 1);
    }
  }
  if (detail)
    *detail = "no {beta_v,dB_v} path from " + print_term(from) + " to " + print_term(to) +
              " within " + std::to_string(budget) + " steps";
  return false;
}

}  // namespace

ProjectionCheck check_projection_step(const TermPtr& before, const Step& step, int budget) {
  TermPtr p = gc_project(before);
  TermPtr q = gc_project(step.after);
  ProjectionCheck out;
  if (step.rule_id == "dB") {
    out.ok = beta_reachable(p, q, budget, &out.detail);
    if (out.ok) out.detail = "dB projects to {beta_v,dB_v}+";
    return out;
  }
  if (step.rule_id == "w" || step.rule_id == "d" || step.rule_id == "c" || step.rule_id == "u") {
    out.ok = hu_reachable(p, q, budget, &out.detail);
    if (out.ok) out.detail = step.rule_id + " projects to {h,u}*/o";
    return out;
  }
  throw TermError("check_projection_step: unknown rule " + step.rule_id);
}

ProjectionCheck check_projection_axiom(const TermPtr& before, const TermPtr& after,
                                       const std::string& axiom_id, int budget) {
  TermPtr p = gc_project(before);
  TermPtr q = gc_project(after);
  ProjectionCheck out;
  if (axiom_id == "CS" || axiom_id == "sigma1" || axiom_id == "sigma2") {
    out.ok = eq_equivalent(axiom_set("o"), p, q);
    out.detail = out.ok ? axiom_id + " projects into the void-o class"
                        : "projections are not void-o equivalent";
    return out;
  }
  if (axiom_id == "box1" || axiom_id == "box2") {
    out.ok = alpha_eq(p, q);
    out.detail = out.ok ? axiom_id + " projects to equal terms"
                        : "projections differ: " + print_term(p) + " vs " + print_term(q);
    return out;
  }
  if (axiom_id == "box1u" || axiom_id == "box2u") {
    std::string why;
    out.ok = hu_reachable(p, q, budget, &why) || hu_reachable(q, p, budget, &why);
    out.detail = out.ok ? axiom_id + " projects to {h,u}*/o in one direction" : why;
    return out;
  }
  throw TermError("check_projection_axiom: unknown axiom " + axiom_id);
}

}  // namespace lj
