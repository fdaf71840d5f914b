#include "lj/equivalences.hpp"

#include <cctype>
#include <map>
#include <stdexcept>

namespace lj {

namespace {

bool occurs(const TermPtr& t, const std::string& x) { return t->fvs.count(x) != 0; }

// A fresh replacement for a bound name, avoiding everything in sight.
std::string freshen(const std::string& base, const TermPtr& whole) {
  return fresh_name(base, all_names(whole));
}

// --------------------------------------------------------------------------
// CS: t[x/s][y/v] ~ t[y/v][x/s]. Swapping is blocked when the inner content
// uses the outer binder (y free in s). When the outer content uses the inner
// name (x free in v, an unrelated outer x) the inner binder is renamed.
std::vector<TermPtr> cs_swap(const TermPtr& r) {
  if (r->tag != Tag::Jump || r->a->tag != Tag::Jump) return {};
  TermPtr inner = r->a;
  TermPtr t = inner->a, s = inner->b, v = r->b;
  std::string x = inner->name, y = r->name;
  if (y != void_binder && occurs(s, y)) return {};
  if (x != void_binder && (occurs(v, x) || x == y)) {
    std::string nx = freshen(x, r);
    t = subst_raw(t, x, var(nx));
    x = nx;
  }
  return {jump(jump(t, y, v), x, s)};
}

// --------------------------------------------------------------------------
// sigma1: \y.(t[x/s]) ~ (\y.t)[x/s]
std::vector<TermPtr> sigma1_fwd(const TermPtr& r) {
  if (r->tag != Tag::Lam || r->a->tag != Tag::Jump) return {};
  TermPtr j = r->a;
  TermPtr t = j->a, s = j->b;
  std::string y = r->name, x = j->name;
  if (occurs(s, y)) return {};  // the content needs the lambda
  if (x != void_binder && x == y) {
    std::string nx = freshen(x, r);
    t = subst_raw(t, x, var(nx));
    x = nx;
  }
  return {jump(lam(y, t), x, s)};
}

std::vector<TermPtr> sigma1_bwd(const TermPtr& r) {
  if (r->tag != Tag::Jump || r->a->tag != Tag::Lam) return {};
  TermPtr l = r->a;
  TermPtr t = l->a, s = r->b;
  std::string y = l->name, x = r->name;
  if (occurs(s, y) || y == x) {
    std::string ny = freshen(y, r);
    t = subst_raw(t, y, var(ny));
    y = ny;
  }
  return {lam(y, jump(t, x, s))};
}

// --------------------------------------------------------------------------
// sigma2: t[x/s] v ~ (t v)[x/s]
std::vector<TermPtr> sigma2_fwd(const TermPtr& r) {
  if (r->tag != Tag::App || r->a->tag != Tag::Jump) return {};
  TermPtr j = r->a;
  TermPtr t = j->a, s = j->b, v = r->b;
  std::string x = j->name;
  if (x != void_binder && occurs(v, x)) {
    std::string nx = freshen(x, r);
    t = subst_raw(t, x, var(nx));
    x = nx;
  }
  return {jump(app(t, v), x, s)};
}

std::vector<TermPtr> sigma2_bwd(const TermPtr& r) {
  if (r->tag != Tag::Jump || r->a->tag != Tag::App) return {};
  TermPtr t = r->a->a, v = r->a->b, s = r->b;
  const std::string& x = r->name;
  if (x != void_binder && occurs(v, x)) return {};  // the argument needs the jump
  return {app(jump(t, x, s), v)};
}

// --------------------------------------------------------------------------
// box1: (t v)[x/u] ~ t (v[x/u]), boxes following occurrences: x must occur in
// v and not in t. The unsafe variant drops the occurrence requirement.
std::vector<TermPtr> box1_fwd(const TermPtr& r, bool safe) {
  if (r->tag != Tag::Jump || r->a->tag != Tag::App) return {};
  TermPtr t = r->a->a, v = r->a->b, u = r->b;
  const std::string& x = r->name;
  if (x != void_binder && occurs(t, x)) return {};  // the function part needs the jump
  if (safe && (x == void_binder || !occurs(v, x))) return {};
  return {app(t, jump(v, x, u))};
}

std::vector<TermPtr> box1_bwd(const TermPtr& r, bool safe) {
  if (r->tag != Tag::App || r->b->tag != Tag::Jump) return {};
  TermPtr t = r->a, j = r->b;
  TermPtr v = j->a, u = j->b;
  std::string x = j->name;
  if (safe && (x == void_binder || !occurs(v, x))) return {};
  if (x != void_binder && occurs(t, x)) {
    std::string nx = freshen(x, r);
    v = subst_raw(v, x, var(nx));
    x = nx;
  }
  return {jump(app(t, v), x, u)};
}

// --------------------------------------------------------------------------
// box2: t[y/v][x/u] ~ t[y/(v[x/u])], same box discipline as box1.
std::vector<TermPtr> box2_fwd(const TermPtr& r, bool safe) {
  if (r->tag != Tag::Jump || r->a->tag != Tag::Jump) return {};
  TermPtr inner = r->a;
  TermPtr t = inner->a, v = inner->b, u = r->b;
  std::string y = inner->name, x = r->name;
  if (x != void_binder && x == y) {
    // the outer name is shadowed inside t; separate them first
    std::string nx = freshen(x, r);
    v = subst_raw(v, x, var(nx));
    x = nx;
  }
  if (x != void_binder && occurs(t, x)) return {};  // the body needs the jump
  if (safe && (x == void_binder || !occurs(v, x))) return {};
  return {jump(t, y, jump(v, x, u))};
}

std::vector<TermPtr> box2_bwd(const TermPtr& r, bool safe) {
  if (r->tag != Tag::Jump || r->b->tag != Tag::Jump) return {};
  TermPtr t = r->a, j = r->b;
  TermPtr v = j->a, u = j->b;
  std::string y = r->name, x = j->name;
  if (safe && (x == void_binder || !occurs(v, x))) return {};
  if (x != void_binder && (occurs(t, x) || x == y)) {
    std::string nx = freshen(x, r);
    v = subst_raw(v, x, var(nx));
    x = nx;
  }
  return {jump(jump(t, y, v), x, u)};
}

// --------------------------------------------------------------------------
// sigmahat1: (\x.\y.t) u ~ \y.((\x.t) u)
std::vector<TermPtr> sigmahat1_fwd(const TermPtr& r) {
  if (r->tag != Tag::App || r->a->tag != Tag::Lam || r->a->a->tag != Tag::Lam) return {};
  TermPtr t = r->a->a->a, u = r->b;
  std::string x = r->a->name, y = r->a->a->name;
  if (occurs(u, y) || y == x) {
    std::string ny = freshen(y, r);
    t = subst_raw(t, y, var(ny));
    y = ny;
  }
  return {lam(y, app(lam(x, t), u))};
}

std::vector<TermPtr> sigmahat1_bwd(const TermPtr& r) {
  if (r->tag != Tag::Lam || r->a->tag != Tag::App || r->a->a->tag != Tag::Lam) return {};
  TermPtr t = r->a->a->a, u = r->a->b;
  std::string y = r->name, x = r->a->a->name;
  if (occurs(u, y)) return {};  // the argument needs the lambda
  if (x == y) {
    std::string nx = freshen(x, r);
    t = subst_raw(t, x, var(nx));
    x = nx;
  }
  return {app(lam(x, lam(y, t)), u)};
}

// --------------------------------------------------------------------------
// sigmahat2: (\x.(t v)) u ~ (\x.t) u v
std::vector<TermPtr> sigmahat2_fwd(const TermPtr& r) {
  if (r->tag != Tag::App || r->a->tag != Tag::Lam || r->a->a->tag != Tag::App) return {};
  TermPtr t = r->a->a->a, v = r->a->a->b, u = r->b;
  const std::string& x = r->a->name;
  if (occurs(v, x)) return {};  // the argument needs the lambda
  return {app(app(lam(x, t), u), v)};
}

std::vector<TermPtr> sigmahat2_bwd(const TermPtr& r) {
  if (r->tag != Tag::App || r->a->tag != Tag::App || r->a->a->tag != Tag::Lam) return {};
  TermPtr t = r->a->a->a, u = r->a->b, v = r->b;
  std::string x = r->a->a->name;
  if (occurs(v, x)) {
    std::string nx = freshen(x, r);
    t = subst_raw(t, x, var(nx));
    x = nx;
  }
  return {app(lam(x, app(t, v)), u)};
}

// --------------------------------------------------------------------------
// boxhat: (\x.(t v)) u ~ t ((\x.v) u)
std::vector<TermPtr> boxhat_fwd(const TermPtr& r) {
  if (r->tag != Tag::App || r->a->tag != Tag::Lam || r->a->a->tag != Tag::App) return {};
  TermPtr t = r->a->a->a, v = r->a->a->b, u = r->b;
  const std::string& x = r->a->name;
  if (occurs(t, x)) return {};   // the function part needs the lambda
  if (!occurs(v, x)) return {};  // boxes follow occurrences
  return {app(t, app(lam(x, v), u))};
}

std::vector<TermPtr> boxhat_bwd(const TermPtr& r) {
  if (r->tag != Tag::App || r->b->tag != Tag::App || r->b->a->tag != Tag::Lam) return {};
  TermPtr t = r->a, u = r->b->b;
  TermPtr v = r->b->a->a;
  std::string x = r->b->a->name;
  if (!occurs(v, x)) return {};  // boxes follow occurrences
  if (occurs(t, x)) {
    std::string nx = freshen(x, r);
    v = subst_raw(v, x, var(nx));
    x = nx;
  }
  return {app(lam(x, app(t, v)), u)};
}

// --------------------------------------------------------------------------
// Global moves along a path of positions.

bool spine_position(const Position& p) {
  for (int i : p)
    if (i != 1) return false;
  return true;
}

// May the jump (binder x, content u) sitting at position q of s be lifted to
// the root of s? `spine_only` restricts to spine paths.
bool liftable(const TermPtr& s, const Position& q, const std::string& x, const TermPtr& u,
              const TermPtr& lifted_body, bool spine_only) {
  if (q.empty()) return false;
  TermPtr body = subterm_at(s, q)->a;
  int inside = multiplicity(body, x);
  if (spine_only || inside == 0) {
    if (!spine_position(q)) return false;
  }
  for (const std::string& b : scoping_binders_at(s, q))
    if (occurs(u, b)) return false;
  // every occurrence of the name stays with the jump: none left behind in the
  // rest of the term, none shadowed along the path
  return inside == multiplicity(lifted_body, x);
}

std::vector<TermPtr> global_lift(const TermPtr& s, bool spine_only) {
  std::vector<TermPtr> out;
  for (const Position& q : positions(s)) {
    if (q.empty()) continue;
    TermPtr j = subterm_at(s, q);
    if (j->tag != Tag::Jump) continue;
    TermPtr lifted_body = replace_at(s, q, j->a);
    if (!liftable(s, q, j->name, j->b, lifted_body, spine_only)) continue;
    out.push_back(jump(lifted_body, j->name, j->b));
  }
  return out;
}

std::vector<TermPtr> global_push(const TermPtr& s, bool spine_only) {
  if (s->tag != Tag::Jump) return {};
  TermPtr body = s->a, u = s->b;
  const std::string& x = s->name;
  std::vector<TermPtr> out;
  for (const Position& q : positions(body)) {
    if (q.empty()) continue;
    TermPtr target = subterm_at(body, q);
    TermPtr pushed = replace_at(body, q, jump(target, x, u));
    // pushing q deeper is the inverse of lifting it back up
    Position jq = q;  // the jump lands exactly at q
    if (!liftable(pushed, jq, x, u, body, spine_only)) continue;
    out.push_back(pushed);
  }
  return out;
}

std::map<std::string, Equivalence> make_catalog() {
  std::map<std::string, Equivalence> cat;
  auto add = [&cat](const std::string& id, auto fwd, auto bwd) {
    cat[id] = Equivalence{id, fwd, bwd};
  };
  add("CS", cs_swap, cs_swap);
  add("sigma1", sigma1_fwd, sigma1_bwd);
  add("sigma2", sigma2_fwd, sigma2_bwd);
  add("box1", [](const TermPtr& t) { return box1_fwd(t, true); },
      [](const TermPtr& t) { return box1_bwd(t, true); });
  add("box2", [](const TermPtr& t) { return box2_fwd(t, true); },
      [](const TermPtr& t) { return box2_bwd(t, true); });
  add("box1u", [](const TermPtr& t) { return box1_fwd(t, false); },
      [](const TermPtr& t) { return box1_bwd(t, false); });
  add("box2u", [](const TermPtr& t) { return box2_fwd(t, false); },
      [](const TermPtr& t) { return box2_bwd(t, false); });
  add("sigmahat1", sigmahat1_fwd, sigmahat1_bwd);
  add("sigmahat2", sigmahat2_fwd, sigmahat2_bwd);
  add("boxhat", boxhat_fwd, boxhat_bwd);
  return cat;
}

const std::map<std::string, Equivalence>& catalog() {
  static const std::map<std::string, Equivalence> cat = make_catalog();
  return cat;
}

}  // namespace

const Equivalence& axiom(const std::string& id) {
  auto it = catalog().find(id);
  if (it == catalog().end()) throw TermError("unknown axiom: " + id);
  return it->second;
}

const std::vector<std::string>& axiom_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [id, _] : catalog()) out.push_back(id);
    return out;
  }();
  return ids;
}

std::vector<Equivalence> axiom_set(const std::string& name) {
  auto ids_of = [](const std::string& n) -> std::vector<std::string> {
    if (n == "none") return {};
    if (n == "cs") return {"CS"};
    if (n == "o") return {"CS", "sigma1", "sigma2"};
    if (n == "box") return {"box1", "box2"};
    if (n == "obox") return {"CS", "sigma1", "sigma2", "box1", "box2"};
    if (n == "n") return {"CS", "sigma1", "sigma2", "box1u", "box2u"};
    if (n == "sigmahat") return {"sigmahat1", "sigmahat2"};
    if (n == "pi")
      return {"CS", "sigma1", "sigma2", "box1", "box2", "sigmahat1", "sigmahat2", "boxhat"};
    return {};
  };
  std::vector<std::string> ids = ids_of(name);
  if (ids.empty() && name != "none") {
    // comma-separated axiom ids
    std::string cur;
    for (char c : name + ",") {
      if (c == ',') {
        if (!cur.empty()) ids.push_back(cur);
        cur.clear();
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        cur += c;
      }
    }
  }
  std::vector<Equivalence> out;
  for (const std::string& id : ids) out.push_back(axiom(id));
  return out;
}

Equivalence global_o() {
  return Equivalence{"global_o",
                     [](const TermPtr& t) { return global_lift(t, true); },
                     [](const TermPtr& t) { return global_push(t, true); }};
}

Equivalence global_obox() {
  return Equivalence{"global_obox",
                     [](const TermPtr& t) { return global_lift(t, false); },
                     [](const TermPtr& t) { return global_push(t, false); }};
}

bool global_o_equal(const TermPtr& t, const TermPtr& u, size_t cap) {
  return eq_equivalent({global_o()}, t, u, cap);
}

bool global_obox_equal(const TermPtr& t, const TermPtr& u, size_t cap) {
  return eq_equivalent({global_obox()}, t, u, cap);
}

}  // namespace lj
