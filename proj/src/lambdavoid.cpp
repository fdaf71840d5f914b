#include "lj/lambdavoid.hpp"

#include <optional>

#include "lj/equivalences.hpp"
#include "lj/lambdaj.hpp"

namespace lj {

namespace {

struct Peeled {
  std::vector<TermPtr> cells;  // void-jump contents, outermost first
  std::string binder;
  TermPtr body;
  TermPtr arg;
};

// (\x.t)L u with L a stack of void jumps; anonymous binders never clash with
// the argument, so no renaming is needed.
std::optional<Peeled> peel_void(const TermPtr& r) {
  if (r->tag != Tag::App) return std::nullopt;
  Peeled p;
  p.arg = r->b;
  TermPtr cur = r->a;
  while (cur->tag == Tag::Jump) {
    if (!is_anonymous(cur)) return std::nullopt;
    p.cells.push_back(cur->b);
    cur = cur->a;
  }
  if (cur->tag != Tag::Lam) return std::nullopt;
  p.binder = cur->name;
  p.body = cur->a;
  return p;
}

TermPtr rewrap(TermPtr core, const std::vector<TermPtr>& cells) {
  for (auto it = cells.rbegin(); it != cells.rend(); ++it)
    core = jump(core, void_binder, *it);
  return core;
}

std::vector<TermPtr> beta_void_root(const TermPtr& r) {
  std::optional<Peeled> p = peel_void(r);
  if (!p || !p->body->fvs.count(p->binder)) return {};
  return {rewrap(subst_raw(p->body, p->binder, p->arg), p->cells)};
}

std::vector<TermPtr> dB_void_root(const TermPtr& r) {
  std::optional<Peeled> p = peel_void(r);
  if (!p || p->body->fvs.count(p->binder)) return {};
  return {rewrap(jump(p->body, void_binder, p->arg), p->cells)};
}

std::vector<TermPtr> h_root(const TermPtr& r, int cap) {
  if (r->tag != Tag::Jump || !is_anonymous(r)) return {};
  TermPtr t = r->a, u = r->b;
  std::vector<TermPtr> fragments;
  for (const TermPtr& s : distinct_subterms(u, /*proper=*/true)) {
    bool closed_in_u = true;
    for (const std::string& x : s->fvs)
      if (!u->fvs.count(x)) {
        closed_in_u = false;
        break;
      }
    if (closed_in_u) fragments.push_back(s);
  }
  std::vector<TermPtr> out{t};  // the empty list erases the cell
  std::vector<TermPtr> layer{t};
  for (int n = 1; n <= cap; ++n) {
    std::vector<TermPtr> next;
    for (const TermPtr& base : layer)
      for (const TermPtr& f : fragments) next.push_back(jump(base, void_binder, f));
    for (const TermPtr& s : next) out.push_back(s);
    layer = std::move(next);
    if (layer.empty()) break;
  }
  return out;
}

}  // namespace

Rule rule_beta_void() { return Rule{"beta_v", beta_void_root, {}}; }
Rule rule_dB_void() { return Rule{"dB_v", dB_void_root, {}}; }

Rule rule_h(int cap) {
  return Rule{"h", [cap](const TermPtr& t) { return h_root(t, cap); }, {}};
}

RewriteSystem void_system(int h_cap) {
  return RewriteSystem{"void",
                       Universe::Void,
                       {rule_beta_void(), rule_dB_void(), rule_h(h_cap), rule_u()},
                       axiom_set("o")};
}

namespace {

bool detachable(const TermPtr& cell, const std::set<std::string>& gamma) {
  for (const std::string& x : cell->b->fvs)
    if (gamma.count(x)) return false;
  return true;
}

}  // namespace

TermPtr trunk(const TermPtr& t, const std::set<std::string>& gamma) {
  switch (t->tag) {
    case Tag::Var:
      return t;
    case Tag::App: {
      TermPtr f = trunk(t->a, gamma);
      return f == t->a ? t : app(f, t->b);
    }
    case Tag::Lam: {
      std::set<std::string> inner = gamma;
      inner.insert(t->name);
      TermPtr b = trunk(t->a, inner);
      return b == t->a ? t : lam(t->name, b);
    }
    case Tag::Jump: {
      TermPtr b = trunk(t->a, gamma);
      if (detachable(t, gamma)) return b;
      return b == t->a ? t : jump(b, t->name, t->b);
    }
  }
  throw TermError("unreachable");
}

bool surface_sn(const TermPtr& t, const std::set<std::string>& gamma,
                const std::function<bool(const TermPtr&)>& sn) {
  switch (t->tag) {
    case Tag::Var:
      return true;
    case Tag::App:
      return surface_sn(t->a, gamma, sn);
    case Tag::Lam: {
      std::set<std::string> inner = gamma;
      inner.insert(t->name);
      return surface_sn(t->a, inner, sn);
    }
    case Tag::Jump: {
      if (!surface_sn(t->a, gamma, sn)) return false;
      return detachable(t, gamma) ? sn(t->b) : true;
    }
  }
  throw TermError("unreachable");
}

Multiset<std::pair<long long, long long>> surface_measure(
    const TermPtr& t, const std::set<std::string>& gamma,
    const std::function<long long(const TermPtr&)>& eta) {
  Multiset<std::pair<long long, long long>> out;
  switch (t->tag) {
    case Tag::Var:
      return out;
    case Tag::App:
      out = surface_measure(t->a, gamma, eta);
      out.join(surface_measure(t->b, gamma, eta));
      return out;
    case Tag::Lam: {
      std::set<std::string> inner = gamma;
      inner.insert(t->name);
      return surface_measure(t->a, inner, eta);
    }
    case Tag::Jump: {
      out = surface_measure(t->a, gamma, eta);
      if (detachable(t, gamma))
        out.add({eta(t->b), static_cast<long long>(size(t->b))});
      else
        out.join(surface_measure(t->b, gamma, eta));
      return out;
    }
  }
  throw TermError("unreachable");
}

}  // namespace lj
