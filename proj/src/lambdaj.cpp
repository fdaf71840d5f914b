#include "lj/lambdaj.hpp"

#include <deque>
#include <map>
#include <utility>

#include "lj/equivalences.hpp"

namespace lj {

namespace {

// f is a stack of jumps over a lambda. Rename every jump binder of the stack
// that appears free in `bad_names`, so the stack can be rebuilt around a body
// that now contains the argument.
TermPtr cleanse_stack(const TermPtr& f, const std::set<std::string>& bad,
                      std::set<std::string>& avoid) {
  if (f->tag != Tag::Jump) return f;
  TermPtr body = cleanse_stack(f->a, bad, avoid);
  std::string z = f->name;
  if (z != void_binder && bad.count(z)) {
    std::string nz = fresh_name(z, avoid);
    avoid.insert(nz);
    body = subst_raw(body, z, var(nz));
    z = nz;
  }
  if (body == f->a && z == f->name) return f;
  return jump(body, z, f->b);
}

enum class FireMode { Jump, Substitute, VoidJump };

// (\x.t)L u: rebuilds t*L with the argument attached according to the mode;
// used by dB (attach a jump), plain beta (substitute), and the memory
// calculus (substitute when x occurs, attach an anonymous jump otherwise).
std::vector<TermPtr> fire_redex(const TermPtr& r, FireMode mode) {
  if (r->tag != Tag::App) return {};
  TermPtr u = r->b;
  TermPtr cur = r->a;
  while (cur->tag == Tag::Jump) cur = cur->a;
  if (cur->tag != Tag::Lam) return {};

  std::set<std::string> avoid = all_names(r);
  TermPtr clean = cleanse_stack(r->a, u->fvs, avoid);
  std::vector<std::pair<std::string, TermPtr>> stack;  // outermost first
  cur = clean;
  while (cur->tag == Tag::Jump) {
    stack.emplace_back(cur->name, cur->b);
    cur = cur->a;
  }
  const std::string& x = cur->name;
  TermPtr body = cur->a;

  TermPtr out;
  switch (mode) {
    case FireMode::Jump: out = jump(body, x, u); break;
    case FireMode::Substitute: out = subst_raw(body, x, u); break;
    case FireMode::VoidJump:
      out = body->fvs.count(x) ? subst_raw(body, x, u) : jump(body, void_binder, u);
      break;
  }
  for (auto it = stack.rbegin(); it != stack.rend(); ++it)
    out = jump(out, it->first, it->second);
  return {out};
}

std::vector<TermPtr> w_root(const TermPtr& r) {
  if (r->tag != Tag::Jump) return {};
  if (multiplicity(r->a, r->name) != 0) return {};
  return {r->a};
}

std::vector<TermPtr> d_root(const TermPtr& r) {
  if (r->tag != Tag::Jump || r->name == void_binder) return {};
  if (multiplicity(r->a, r->name) != 1) return {};
  return {subst_raw(r->a, r->name, r->b)};
}

std::vector<TermPtr> c_root(const TermPtr& r) {
  if (r->tag != Tag::Jump || r->name == void_binder) return {};
  int n = multiplicity(r->a, r->name);
  if (n < 2) return {};
  if (n > 16) throw TermError("contraction with " + std::to_string(n) + " occurrences");
  std::string y = fresh_name(r->name, all_names(r));
  std::vector<TermPtr> out;
  for (const TermPtr& split : enumerate_splits(r->a, r->name, y))
    out.push_back(jump(jump(split, r->name, r->b), y, r->b));
  return out;
}

std::vector<TermPtr> u_root(const TermPtr& s) {
  std::vector<TermPtr> out;
  for (const Position& q : positions(s)) {
    if (q.empty()) continue;
    TermPtr j = subterm_at(s, q);
    if (j->tag != Tag::Jump) continue;
    if (j->name != void_binder && multiplicity(j->a, j->name) != 0) continue;
    if (!context_at(s, q).boxed) continue;  // lifting along spines is not a step
    bool blocked = false;
    for (const std::string& b : scoping_binders_at(s, q))
      if (j->b->fvs.count(b)) {
        blocked = true;
        break;
      }
    if (blocked) continue;
    TermPtr lifted_body = replace_at(s, q, j->a);
    std::string x = j->name;
    if (x != void_binder && lifted_body->fvs.count(x))
      x = fresh_name(x, all_names(s));  // void binder: nothing to rename
    out.push_back(jump(lifted_body, x, j->b));
  }
  return out;
}

}  // namespace

Rule rule_dB() {
  return Rule{"dB", [](const TermPtr& t) { return fire_redex(t, FireMode::Jump); }, {}};
}

Rule rule_beta() {
  return Rule{"beta", [](const TermPtr& t) { return fire_redex(t, FireMode::Substitute); }, {}};
}

Rule rule_w() { return Rule{"w", w_root, {}}; }
Rule rule_d() { return Rule{"d", d_root, {}}; }

Rule rule_c() {
  // the deterministic pick keeps the leftmost occurrence on the old name
  return Rule{"c", c_root, [](size_t n) { return n - 1; }};
}

Rule rule_u() { return Rule{"u", u_root, {}}; }

RewriteSystem beta_system() {
  return RewriteSystem{"beta", Universe::Pure, {rule_beta()}, {}};
}

RewriteSystem lambdaj_system() {
  return RewriteSystem{"lambdaj", Universe::Jump, {rule_dB(), rule_w(), rule_d(), rule_c()}, {}};
}

RewriteSystem lambdaj_o_system() {
  RewriteSystem sys = lambdaj_system();
  sys.name = "lambdaj_o";
  sys.axioms = axiom_set("o");
  return sys;
}

RewriteSystem lambdaj_obox_system() {
  RewriteSystem sys = lambdaj_system();
  sys.name = "lambdaj_obox";
  sys.axioms = axiom_set("obox");
  return sys;
}

RewriteSystem lambdaj_n_system() {
  RewriteSystem sys = lambdaj_system();
  sys.name = "lambdaj_n";
  sys.axioms = axiom_set("n");
  return sys;
}

RewriteSystem lambdaj_obox_u_system() {
  RewriteSystem sys = lambdaj_system();
  sys.name = "lambdaj_obox_u";
  sys.rules.push_back(rule_u());
  sys.axioms = axiom_set("obox");
  return sys;
}

RewriteSystem j_system() {
  return RewriteSystem{"j", Universe::Jump, {rule_w(), rule_d(), rule_c()}, {}};
}

RewriteSystem nogc_system() {
  return RewriteSystem{"nogc", Universe::Jump, {rule_dB(), rule_d(), rule_c()}, {}};
}

TermPtr j_normal_form(const TermPtr& t) {
  switch (t->tag) {
    case Tag::Var: return t;
    case Tag::Lam: return lam(t->name, j_normal_form(t->a));
    case Tag::App: return app(j_normal_form(t->a), j_normal_form(t->b));
    case Tag::Jump: return subst_raw(j_normal_form(t->a), t->name, j_normal_form(t->b));
  }
  throw TermError("unreachable");
}

Trace full_composition_witness(const TermPtr& t0) {
  if (t0->tag != Tag::Jump) throw TermError("full_composition_witness: root is not a jump");
  Rule rw = rule_w(), rd = rule_d(), rc = rule_c();
  Trace tr;
  tr.start = t0;
  TermPtr cur = t0;
  for (;;) {
    int n = cur->name == void_binder ? 0 : multiplicity(cur->a, cur->name);
    if (n == 0) {
      tr.steps.push_back(Step{"w", {}, 0, w_root(cur)[0]});
      break;
    }
    if (n == 1) {
      tr.steps.push_back(Step{"d", {}, 0, d_root(cur)[0]});
      break;
    }
    std::vector<TermPtr> splits = rc.apply_root(cur);
    size_t alt = splits.size() - 1;  // keep the leftmost occurrence
    tr.steps.push_back(Step{"c", {}, alt, splits[alt]});
    std::vector<TermPtr> used = apply_rule_at(rd, splits[alt], {1});
    tr.steps.push_back(Step{"d", {1}, 0, used[0]});
    cur = used[0];
  }
  return tr;
}

std::vector<TermPtr> beta_reducts(const TermPtr& t) {
  std::vector<TermPtr> out;
  for (Step& s : one_step_reducts(beta_system(), t)) out.push_back(std::move(s.after));
  return out;
}

std::vector<TermPtr> parallel_reducts(const TermPtr& t) {
  std::vector<TermPtr> raw;
  switch (t->tag) {
    case Tag::Var:
      raw.push_back(t);
      break;
    case Tag::Lam:
      for (const TermPtr& b : parallel_reducts(t->a)) raw.push_back(lam(t->name, b));
      break;
    case Tag::App: {
      std::vector<TermPtr> fs = parallel_reducts(t->a);
      std::vector<TermPtr> as = parallel_reducts(t->b);
      for (const TermPtr& f : fs)
        for (const TermPtr& a : as) raw.push_back(app(f, a));
      if (t->a->tag == Tag::Lam) {
        for (const TermPtr& b : parallel_reducts(t->a->a))
          for (const TermPtr& a : as) raw.push_back(subst_raw(b, t->a->name, a));
      }
      break;
    }
    case Tag::Jump:
      throw TermError("parallel_reducts: not a pure term");
  }
  std::vector<TermPtr> out;
  std::map<std::string, bool> seen;
  for (const TermPtr& r : raw)
    if (!std::exchange(seen[term_key(r)], true)) out.push_back(r);
  return out;
}

Trace simulate_beta(const TermPtr& t, const Position& redex) {
  Rule dB = rule_dB();
  std::vector<TermPtr> fired = apply_rule_at(dB, t, redex);
  if (fired.empty()) throw TermError("simulate_beta: no redex at " + position_to_string(redex));
  Trace tr;
  tr.start = t;
  tr.steps.push_back(Step{"dB", redex, 0, fired[0]});
  RewriteSystem js = j_system();
  TermPtr cur = fired[0];
  while (std::optional<Step> s = deterministic_step(js, cur)) {
    cur = s->after;
    tr.steps.push_back(std::move(*s));
  }
  return tr;
}

namespace {

// All one-step reducts by the system's non-erasing rules.
std::vector<Step> nonerasing_steps(const RewriteSystem& sys, const TermPtr& t) {
  RewriteSystem sub = sys;
  sub.rules.clear();
  for (const Rule& r : sys.rules)
    if (r.id != "w") sub.rules.push_back(r);
  return one_step_reducts(sub, t);
}

// Breadth-first w-only path from `from` to `to` (up to alpha), bounded.
std::optional<std::vector<Step>> w_path(const TermPtr& from, const TermPtr& to, size_t max_depth) {
  Rule rw = rule_w();
  RewriteSystem ws{"w-only", Universe::Jump, {rw}, {}};
  std::string goal = term_key(to);
  if (term_key(from) == goal) return std::vector<Step>{};
  struct Node {
    TermPtr term;
    std::vector<Step> path;
  };
  std::deque<Node> queue{{from, {}}};
  std::map<std::string, bool> seen{{term_key(from), true}};
  while (!queue.empty()) {
    Node cur = std::move(queue.front());
    queue.pop_front();
    if (cur.path.size() >= max_depth) continue;
    for (Step& s : one_step_reducts(ws, cur.term)) {
      std::string key = term_key(s.after);
      if (std::exchange(seen[key], true)) continue;
      std::vector<Step> path = cur.path;
      path.push_back(s);
      if (key == goal) return path;
      queue.push_back(Node{path.back().after, std::move(path)});
    }
  }
  return std::nullopt;
}

}  // namespace

Trace postpone_w(const RewriteSystem& sys, const Trace& trace) {
  std::vector<Step> steps = trace.steps;
  // Selection pass: bring each non-erasing step to the front of the remaining
  // suffix by swapping it across the w steps just before it. A swap may cost
  // several trailing w steps (duplication) and, when the erasure enabled a
  // dereliction, one extra leading contraction; either way the distance of
  // the chosen step to the front of the suffix strictly shrinks. dB and d
  // step counts are always preserved; only c steps can be added.
  size_t done = 0;  // steps[0..done) is the finished non-erasing prefix
  for (;;) {
    size_t next = done;
    while (next < steps.size() && steps[next].rule_id == "w") ++next;
    if (next == steps.size()) break;  // only w steps remain
    while (next > done) {
      // swap the w at next-1 with the non-erasing step at next
      TermPtr source = next - 1 == 0 ? trace.start : steps[next - 2].after;
      TermPtr target = steps[next].after;
      std::optional<std::vector<Step>> replacement;
      for (Step& lifted : nonerasing_steps(sys, source)) {
        std::optional<std::vector<Step>> ws =
            w_path(lifted.after, target, steps.size() + 8);
        if (!ws) continue;
        replacement.emplace();
        replacement->push_back(std::move(lifted));
        for (Step& s : *ws) replacement->push_back(std::move(s));
        break;
      }
      if (!replacement) {
        // No single-step lift exists when the erasure enabled a dereliction:
        // the erased garbage held extra occurrences of the jumped variable,
        // so the multiplicity only dropped to one after the w. Splitting the
        // vanished occurrences off with a contraction first unblocks the
        // dereliction, at the price of one extra non-erasing step.
        for (Step& first : nonerasing_steps(sys, source)) {
          for (Step& second : nonerasing_steps(sys, first.after)) {
            std::optional<std::vector<Step>> ws =
                w_path(second.after, target, steps.size() + 8);
            if (!ws) continue;
            replacement.emplace();
            replacement->push_back(std::move(first));
            replacement->push_back(std::move(second));
            for (Step& s : *ws) replacement->push_back(std::move(s));
            break;
          }
          if (replacement) break;
        }
      }
      if (!replacement) throw TermError("postpone_w: no commuting step found");
      steps.erase(steps.begin() + static_cast<std::ptrdiff_t>(next - 1),
                  steps.begin() + static_cast<std::ptrdiff_t>(next + 1));
      steps.insert(steps.begin() + static_cast<std::ptrdiff_t>(next - 1),
                   replacement->begin(), replacement->end());
      --next;
    }
    ++done;
  }
  Trace out;
  out.start = trace.start;
  out.steps = std::move(steps);
  return out;
}

}  // namespace lj
