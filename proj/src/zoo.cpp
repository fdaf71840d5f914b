#include "lj/zoo.hpp"

#include <deque>
#include <map>
#include <set>

#include "lj/equivalences.hpp"
#include "lj/lambdaj.hpp"
#include "lj/lambdavoid.hpp"
#include "lj/syntax.hpp"

namespace lj {

namespace {

bool occurs(const TermPtr& t, const std::string& x) { return t->fvs.count(x) != 0; }

// A directed reading of an equivalence axiom as a rule.
Rule directed(const std::string& rule_id, const std::string& axiom_id, bool forward) {
  const Equivalence& ax = axiom(axiom_id);
  auto f = forward ? ax.forward : ax.backward;
  return Rule{rule_id, f, {}};
}

// les B: (\x.t) u -> t[x/u], the function must be a lambda on the nose.
std::vector<TermPtr> les_beta_root(const TermPtr& r) {
  if (r->tag != Tag::App || r->a->tag != Tag::Lam) return {};
  return {jump(r->a->a, r->a->name, r->b)};
}

// les var: x[x/u] -> u.
std::vector<TermPtr> les_var_root(const TermPtr& r) {
  if (r->tag != Tag::Jump || r->a->tag != Tag::Var || r->a->name != r->name) return {};
  return {r->b};
}

// les app_l: (t v)[x/u] -> t[x/u] v, x free in t and not in v.
std::vector<TermPtr> les_app_l_root(const TermPtr& r) {
  if (r->tag != Tag::Jump || r->a->tag != Tag::App || r->name == void_binder) return {};
  if (!occurs(r->a->a, r->name) || occurs(r->a->b, r->name)) return {};
  return {app(jump(r->a->a, r->name, r->b), r->a->b)};
}

// les app_both: (t v)[x/u] -> t[x/u] (v[x/u]), x free on both sides. The two
// jumps are siblings, so neither copy of u falls under a binder.
std::vector<TermPtr> les_app_both_root(const TermPtr& r) {
  if (r->tag != Tag::Jump || r->a->tag != Tag::App || r->name == void_binder) return {};
  if (!occurs(r->a->a, r->name) || !occurs(r->a->b, r->name)) return {};
  return {app(jump(r->a->a, r->name, r->b), jump(r->a->b, r->name, r->b))};
}

// les comp2: t[y/v][x/u] -> t[y/(v[x/u])][x/u], x free in t and in v. The
// outer binder is freshened when x is free in u, since the inner copy of u
// lands inside the outer jump's body.
std::vector<TermPtr> les_comp2_root(const TermPtr& r) {
  if (r->tag != Tag::Jump || r->a->tag != Tag::Jump || r->name == void_binder) return {};
  TermPtr inner = r->a;
  TermPtr t = inner->a, v = inner->b, u = r->b;
  std::string x = r->name;
  const std::string& y = inner->name;
  if (x == y || !occurs(t, x) || !occurs(v, x)) return {};
  TermPtr content = jump(v, x, u);
  if (occurs(u, x)) {
    std::string nx = fresh_name(x, all_names(r));
    t = subst_raw(t, x, var(nx));
    x = nx;
  }
  return {jump(jump(t, y, content), x, u)};
}

// permutative u_hat: t ((\x.v) u) -> (\x.(t v)) u. The default requires the
// redex to be used (x free in v); the variant requires the opposite. Either
// way the binder is freshened when it would capture t.
std::vector<TermPtr> u_hat_root(const TermPtr& r, bool variant_unused) {
  if (r->tag != Tag::App || r->b->tag != Tag::App || r->b->a->tag != Tag::Lam) return {};
  TermPtr t = r->a, u = r->b->b;
  TermPtr l = r->b->a;
  TermPtr v = l->a;
  std::string x = l->name;
  if (variant_unused ? occurs(v, x) : !occurs(v, x)) return {};
  if (occurs(t, x)) {
    std::string nx = fresh_name(x, all_names(r));
    v = subst_raw(v, x, var(nx));
    x = nx;
  }
  return {app(lam(x, app(t, v)), u)};
}

}  // namespace

RewriteSystem inner_system() {
  return RewriteSystem{"inner",
                       Universe::Jump,
                       {directed("in1", "sigma1", false), directed("in2", "sigma2", false),
                        directed("in3", "box1", true), directed("in4", "box2", true)},
                       axiom_set("cs")};
}

RewriteSystem outer_system() {
  return RewriteSystem{"outer",
                       Universe::Jump,
                       {directed("out1", "sigma1", true), directed("out2", "sigma2", true),
                        directed("out3", "box1u", false), directed("out4", "box2u", false)},
                       axiom_set("cs")};
}

RewriteSystem les_system() {
  return RewriteSystem{"les",
                       Universe::Jump,
                       {Rule{"B", les_beta_root, {}}, Rule{"var", les_var_root, {}}, rule_w(),
                        Rule{"app_l", les_app_l_root, {}}, directed("app_r", "box1", true),
                        Rule{"app_both", les_app_both_root, {}},
                        directed("lam", "sigma1", false), directed("comp1", "box2", true),
                        Rule{"comp2", les_comp2_root, {}}},
                       axiom_set("cs")};
}

RewriteSystem permutative_system(bool variant_unused) {
  return RewriteSystem{
      "permutative",
      Universe::Pure,
      {rule_beta(),
       Rule{"u_hat", [variant_unused](const TermPtr& t) { return u_hat_root(t, variant_unused); },
            {}}},
      {}};
}

RewriteSystem structural_modulo_system() {
  RewriteSystem sys = lambdaj_obox_u_system();
  sys.name = "structural_modulo";
  sys.axioms = axiom_set("pi");
  return sys;
}

RewriteSystem build_calculus(const std::string& name) {
  if (name == "beta") return beta_system();
  if (name == "lambdaj") return lambdaj_system();
  if (name == "lambdaj_o") return lambdaj_o_system();
  if (name == "lambdaj_obox") return lambdaj_obox_system();
  if (name == "lambdaj_n") return lambdaj_n_system();
  if (name == "lambdaj_obox_u") return lambdaj_obox_u_system();
  if (name == "void") return void_system();
  if (name == "inner") return inner_system();
  if (name == "outer") return outer_system();
  if (name == "les") return les_system();
  if (name == "permutative") return permutative_system();
  if (name == "structural_modulo") return structural_modulo_system();
  throw TermError("unknown calculus: " + name);
}

const std::vector<std::string>& calculus_names() {
  static const std::vector<std::string> names{
      "beta",           "lambdaj", "lambdaj_o", "lambdaj_obox", "lambdaj_n", "lambdaj_obox_u",
      "void",           "inner",   "outer",     "les",          "permutative",
      "structural_modulo"};
  return names;
}

RewriteSystem les_target_system() {
  RewriteSystem sys = lambdaj_system();
  sys.name = "les_target";
  for (const Rule& r : inner_system().rules) sys.rules.push_back(r);
  sys.axioms = axiom_set("cs");
  return sys;
}

SimulationResult simulate_les_step(const TermPtr& before, const Step& les_step, int budget) {
  RewriteSystem target = les_target_system();
  SimulationResult out;

  EqClass goal = equivalence_class(target.axioms, les_step.after);
  std::set<std::string> goal_keys;
  for (const TermPtr& m : goal.members) goal_keys.insert(term_key(m));

  struct Node {
    TermPtr canon;
    std::vector<std::string> path;
  };
  EqClass start = equivalence_class(target.axioms, before);
  if (goal_keys.count(term_key(start.canonical()))) {
    out.ok = true;
    out.detail = "endpoints already CS-equivalent";
    return out;
  }
  std::deque<Node> queue{{start.canonical(), {}}};
  std::set<std::string> seen{term_key(start.canonical())};
  while (!queue.empty()) {
    Node cur = std::move(queue.front());
    queue.pop_front();
    if (static_cast<int>(cur.path.size()) >= budget) continue;
    EqClass cls = equivalence_class(target.axioms, cur.canon);
    for (const ModuloStep& ms : one_step_modulo(target, cls)) {
      EqClass next = equivalence_class(target.axioms, ms.step.after);
      std::string key = term_key(next.canonical());
      std::vector<std::string> path = cur.path;
      path.push_back(ms.step.rule_id);
      if (goal_keys.count(key)) {
        out.ok = true;
        out.rule_ids = std::move(path);
        return out;
      }
      if (!seen.insert(key).second) continue;
      queue.push_back(Node{next.canonical(), std::move(path)});
    }
  }
  out.detail = "no simulation of " + les_step.rule_id + " from " + print_term(before) +
               " within " + std::to_string(budget) + " steps";
  return out;
}

}  // namespace lj
