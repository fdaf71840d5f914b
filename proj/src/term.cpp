#include "lj/term.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <unordered_set>

namespace lj {

namespace {

void check_name(const std::string& n, const char* what) {
  if (n.empty()) throw TermError(std::string(what) + ": empty name");
  if (n == void_binder) throw TermError(std::string(what) + ": reserved name '_'");
}

}  // namespace

TermPtr var(const std::string& name) {
  check_name(name, "var");
  auto t = std::make_shared<Term>();
  t->tag = Tag::Var;
  t->name = name;
  t->fvs = {name};
  t->sz = 1;
  return t;
}

TermPtr lam(const std::string& binder, TermPtr body) {
  check_name(binder, "lam");
  if (!body) throw TermError("lam: null body");
  auto t = std::make_shared<Term>();
  t->tag = Tag::Lam;
  t->name = binder;
  t->fvs = body->fvs;
  t->fvs.erase(binder);
  t->sz = 1 + body->sz;
  t->a = std::move(body);
  return t;
}

TermPtr app(TermPtr fun, TermPtr arg) {
  if (!fun || !arg) throw TermError("app: null child");
  auto t = std::make_shared<Term>();
  t->tag = Tag::App;
  t->fvs = fun->fvs;
  t->fvs.insert(arg->fvs.begin(), arg->fvs.end());
  t->sz = 1 + fun->sz + arg->sz;
  t->a = std::move(fun);
  t->b = std::move(arg);
  return t;
}

TermPtr jump(TermPtr body, const std::string& binder, TermPtr content) {
  if (binder.empty()) throw TermError("jump: empty binder");
  if (!body || !content) throw TermError("jump: null child");
  auto t = std::make_shared<Term>();
  t->tag = Tag::Jump;
  t->name = binder;
  t->fvs = body->fvs;
  t->fvs.erase(binder);  // no-op for "_", which is never free anywhere
  t->fvs.insert(content->fvs.begin(), content->fvs.end());
  t->sz = 1 + body->sz + content->sz;
  t->a = std::move(body);
  t->b = std::move(content);
  return t;
}

bool is_void_jump(const TermPtr& t) {
  if (t->tag != Tag::Jump) return false;
  return t->name == void_binder || t->a->fvs.count(t->name) == 0;
}

bool in_universe(const TermPtr& t, Universe u) {
  switch (t->tag) {
    case Tag::Var: return true;
    case Tag::Lam: return in_universe(t->a, u);
    case Tag::App: return in_universe(t->a, u) && in_universe(t->b, u);
    case Tag::Jump:
      if (u == Universe::Pure) return false;
      if (u == Universe::Void && t->name != void_binder) return false;
      if (u == Universe::Jump && t->name == void_binder) return false;
      return in_universe(t->a, u) && in_universe(t->b, u);
  }
  return false;
}

namespace {
void collect_bound(const TermPtr& t, std::set<std::string>& out) {
  switch (t->tag) {
    case Tag::Var: return;
    case Tag::Lam:
      out.insert(t->name);
      collect_bound(t->a, out);
      return;
    case Tag::App:
      collect_bound(t->a, out);
      collect_bound(t->b, out);
      return;
    case Tag::Jump:
      if (t->name != void_binder) out.insert(t->name);
      collect_bound(t->a, out);
      collect_bound(t->b, out);
      return;
  }
}
}  // namespace

std::set<std::string> bound_vars(const TermPtr& t) {
  std::set<std::string> out;
  collect_bound(t, out);
  return out;
}

std::set<std::string> all_names(const TermPtr& t) {
  std::set<std::string> out = bound_vars(t);
  out.insert(t->fvs.begin(), t->fvs.end());
  return out;
}

int multiplicity(const TermPtr& t, const std::string& x) {
  if (x == void_binder) return 0;
  if (t->fvs.count(x) == 0) return 0;  // also prunes shadowed branches
  switch (t->tag) {
    case Tag::Var: return t->name == x ? 1 : 0;
    case Tag::Lam: return t->name == x ? 0 : multiplicity(t->a, x);
    case Tag::App: return multiplicity(t->a, x) + multiplicity(t->b, x);
    case Tag::Jump: {
      int body = t->name == x ? 0 : multiplicity(t->a, x);
      return body + multiplicity(t->b, x);
    }
  }
  return 0;
}

int multiplicity_set(const TermPtr& t, const std::set<std::string>& gamma) {
  int n = 0;
  for (const auto& x : gamma) n += multiplicity(t, x);
  return n;
}

// ---------------------------------------------------------------------------
// Positions

std::string position_to_string(const Position& p) {
  if (p.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(p[i]);
  }
  return s;
}

Position parse_position(const std::string& s) {
  Position p;
  if (s.empty() || s == "e") return p;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, '.')) {
    if (item != "1" && item != "2") throw TermError("parse_position: bad index '" + item + "'");
    p.push_back(item == "1" ? 1 : 2);
  }
  return p;
}

namespace {
const TermPtr& child(const TermPtr& t, int i, const Position& p) {
  bool binary = t->tag == Tag::App || t->tag == Tag::Jump;
  if (i == 1 && t->tag != Tag::Var) return t->a;
  if (i == 2 && binary) return t->b;
  throw TermError("invalid position " + position_to_string(p));
}
}  // namespace

TermPtr subterm_at(const TermPtr& t, const Position& p) {
  TermPtr cur = t;
  for (int i : p) cur = child(cur, i, p);
  return cur;
}

TermPtr replace_at(const TermPtr& t, const Position& p, const TermPtr& s) {
  if (p.empty()) return s;
  Position rest(p.begin() + 1, p.end());
  switch (t->tag) {
    case Tag::Var: throw TermError("invalid position " + position_to_string(p));
    case Tag::Lam:
      if (p[0] != 1) throw TermError("invalid position " + position_to_string(p));
      return lam(t->name, replace_at(t->a, rest, s));
    case Tag::App:
      if (p[0] == 1) return app(replace_at(t->a, rest, s), t->b);
      if (p[0] == 2) return app(t->a, replace_at(t->b, rest, s));
      throw TermError("invalid position " + position_to_string(p));
    case Tag::Jump:
      if (p[0] == 1) return jump(replace_at(t->a, rest, s), t->name, t->b);
      if (p[0] == 2) return jump(t->a, t->name, replace_at(t->b, rest, s));
      throw TermError("invalid position " + position_to_string(p));
  }
  throw TermError("unreachable");
}

namespace {
void walk_positions(const TermPtr& t, Position& cur, std::vector<Position>& out) {
  out.push_back(cur);
  if (t->tag == Tag::Var) return;
  cur.push_back(1);
  walk_positions(t->a, cur, out);
  cur.back() = 2;
  if (t->tag == Tag::App || t->tag == Tag::Jump) walk_positions(t->b, cur, out);
  cur.pop_back();
}

void walk_free(const TermPtr& t, const std::string& x, Position& cur,
               std::vector<Position>& out) {
  if (t->fvs.count(x) == 0) return;
  switch (t->tag) {
    case Tag::Var:
      if (t->name == x) out.push_back(cur);
      return;
    case Tag::Lam:
      if (t->name == x) return;
      cur.push_back(1);
      walk_free(t->a, x, cur, out);
      cur.pop_back();
      return;
    case Tag::App:
    case Tag::Jump:
      cur.push_back(1);
      if (!(t->tag == Tag::Jump && t->name == x)) walk_free(t->a, x, cur, out);
      cur.back() = 2;
      walk_free(t->b, x, cur, out);
      cur.pop_back();
      return;
  }
}
}  // namespace

std::vector<Position> positions(const TermPtr& t) {
  std::vector<Position> out;
  Position cur;
  walk_positions(t, cur, out);
  return out;
}

std::vector<Position> free_positions(const TermPtr& t, const std::string& x) {
  std::vector<Position> out;
  Position cur;
  if (x != void_binder) walk_free(t, x, cur, out);
  return out;
}

ContextInfo context_at(const TermPtr& t, const Position& p) {
  ContextInfo info;
  TermPtr cur = t;
  bool crossed_box = false;
  for (int i : p) {
    switch (cur->tag) {
      case Tag::Lam:
        info.binding_set.insert(cur->name);
        break;
      case Tag::Jump:
        if (cur->name != void_binder) info.binding_set.insert(cur->name);
        if (i == 2) crossed_box = true;
        break;
      case Tag::App:
        if (i == 2) crossed_box = true;
        break;
      case Tag::Var: break;
    }
    cur = child(cur, i, p);
  }
  info.sub = cur;
  info.boxed = crossed_box;
  info.spine = !crossed_box;
  return info;
}

std::set<std::string> scoping_binders_at(const TermPtr& t, const Position& p) {
  std::set<std::string> out;
  TermPtr cur = t;
  for (int i : p) {
    if (cur->tag == Tag::Lam) out.insert(cur->name);
    if (cur->tag == Tag::Jump && i == 1 && cur->name != void_binder) out.insert(cur->name);
    cur = child(cur, i, p);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fresh names, substitution, renaming

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  std::string stem = base == void_binder ? "x" : base;
  if (avoid.count(stem) == 0) return stem;
  // Strip a trailing counter so x3 regenerates as x1, x2, ... not x31, x32.
  size_t end = stem.size();
  while (end > 1 && std::isdigit(static_cast<unsigned char>(stem[end - 1]))) --end;
  stem = stem.substr(0, end);
  for (int k = 1;; ++k) {
    std::string cand = stem + std::to_string(k);
    if (avoid.count(cand) == 0) return cand;
  }
}

TermPtr subst_raw(const TermPtr& t, const std::string& x, const TermPtr& u) {
  if (x == void_binder || t->fvs.count(x) == 0) return t;
  switch (t->tag) {
    case Tag::Var:
      return u;  // fvs ensures t->name == x
    case Tag::Lam: {
      // t->name != x (else x would not be free in t)
      if (u->fvs.count(t->name)) {
        std::set<std::string> avoid = all_names(t->a);
        avoid.insert(u->fvs.begin(), u->fvs.end());
        avoid.insert(x);
        std::string fresh = fresh_name(t->name, avoid);
        return lam(fresh, subst_raw(subst_raw(t->a, t->name, var(fresh)), x, u));
      }
      return lam(t->name, subst_raw(t->a, x, u));
    }
    case Tag::App:
      return app(subst_raw(t->a, x, u), subst_raw(t->b, x, u));
    case Tag::Jump: {
      TermPtr content = subst_raw(t->b, x, u);
      if (t->name == x || t->a->fvs.count(x) == 0)
        return jump(t->a, t->name, content);
      if (t->name != void_binder && u->fvs.count(t->name)) {
        std::set<std::string> avoid = all_names(t->a);
        avoid.insert(u->fvs.begin(), u->fvs.end());
        avoid.insert(x);
        std::string fresh = fresh_name(t->name, avoid);
        return jump(subst_raw(subst_raw(t->a, t->name, var(fresh)), x, u), fresh, content);
      }
      return jump(subst_raw(t->a, x, u), t->name, content);
    }
  }
  throw TermError("unreachable");
}

TermPtr substitute(const TermPtr& t, const std::string& x, const TermPtr& u) {
  return alpha_canonical(subst_raw(t, x, u));
}

namespace {
TermPtr rename_walk(const TermPtr& t, const std::string& x, const std::string& y,
                    Position& cur, const std::set<Position>& S, size_t& used) {
  if (t->fvs.count(x) == 0) return t;
  switch (t->tag) {
    case Tag::Var:
      if (S.count(cur)) {
        ++used;
        return var(y);
      }
      return t;
    case Tag::Lam: {
      if (t->name == x) return t;
      cur.push_back(1);
      TermPtr body = rename_walk(t->a, x, y, cur, S, used);
      cur.pop_back();
      return body == t->a ? t : lam(t->name, body);
    }
    case Tag::App: {
      cur.push_back(1);
      TermPtr f = rename_walk(t->a, x, y, cur, S, used);
      cur.back() = 2;
      TermPtr g = rename_walk(t->b, x, y, cur, S, used);
      cur.pop_back();
      return (f == t->a && g == t->b) ? t : app(f, g);
    }
    case Tag::Jump: {
      cur.push_back(1);
      TermPtr body = t->a;
      if (t->name != x) body = rename_walk(t->a, x, y, cur, S, used);
      cur.back() = 2;
      TermPtr content = rename_walk(t->b, x, y, cur, S, used);
      cur.pop_back();
      return (body == t->a && content == t->b) ? t : jump(body, t->name, content);
    }
  }
  throw TermError("unreachable");
}
}  // namespace

TermPtr rename_at(const TermPtr& t, const std::set<Position>& S,
                  const std::string& x, const std::string& y) {
  for (const auto& p : S) {
    TermPtr sub = subterm_at(t, p);  // throws on invalid positions
    if (sub->tag != Tag::Var || sub->name != x)
      throw TermError("rename_at: " + position_to_string(p) + " is not an occurrence of " + x);
  }
  size_t used = 0;
  Position cur;
  TermPtr out = rename_walk(t, x, y, cur, S, used);
  if (used != S.size())
    throw TermError("rename_at: some position is not a free occurrence of " + x);
  return out;
}

std::vector<TermPtr> enumerate_splits(const TermPtr& t, const std::string& x,
                                      const std::string& y) {
  std::vector<Position> occ = free_positions(t, x);
  size_t n = occ.size();
  if (n < 2) throw TermError("enumerate_splits: |t|_x = " + std::to_string(n) + " < 2");
  if (all_names(t).count(y)) throw TermError("enumerate_splits: " + y + " is not fresh");
  std::vector<TermPtr> out;
  for (uint64_t mask = 1; mask + 1 < (uint64_t{1} << n); ++mask) {
    std::set<Position> S;
    for (size_t i = 0; i < n; ++i)
      if (mask & (uint64_t{1} << i)) S.insert(occ[i]);
    out.push_back(rename_at(t, S, x, y));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Alpha machinery

namespace {
bool alpha_walk(const TermPtr& t, const TermPtr& u, std::map<std::string, int>& mt,
                std::map<std::string, int>& mu, int depth) {
  if (t->tag != u->tag || t->sz != u->sz) return false;
  switch (t->tag) {
    case Tag::Var: {
      auto it = mt.find(t->name);
      auto iu = mu.find(u->name);
      if ((it != mt.end()) != (iu != mu.end())) return false;
      if (it != mt.end()) return it->second == iu->second;
      return t->name == u->name;
    }
    case Tag::Lam: {
      auto st = mt.find(t->name);
      auto su = mu.find(u->name);
      int ot = st == mt.end() ? -1 : st->second;
      int ou = su == mu.end() ? -1 : su->second;
      mt[t->name] = depth;
      mu[u->name] = depth;
      bool ok = alpha_walk(t->a, u->a, mt, mu, depth + 1);
      if (ot >= 0) mt[t->name] = ot; else mt.erase(t->name);
      if (ou >= 0) mu[u->name] = ou; else mu.erase(u->name);
      return ok;
    }
    case Tag::App:
      return alpha_walk(t->a, u->a, mt, mu, depth) && alpha_walk(t->b, u->b, mt, mu, depth);
    case Tag::Jump: {
      if ((t->name == void_binder) != (u->name == void_binder)) return false;
      if (!alpha_walk(t->b, u->b, mt, mu, depth)) return false;
      if (t->name == void_binder) return alpha_walk(t->a, u->a, mt, mu, depth);
      auto st = mt.find(t->name);
      auto su = mu.find(u->name);
      int ot = st == mt.end() ? -1 : st->second;
      int ou = su == mu.end() ? -1 : su->second;
      mt[t->name] = depth;
      mu[u->name] = depth;
      bool ok = alpha_walk(t->a, u->a, mt, mu, depth + 1);
      if (ot >= 0) mt[t->name] = ot; else mt.erase(t->name);
      if (ou >= 0) mu[u->name] = ou; else mu.erase(u->name);
      return ok;
    }
  }
  return false;
}

struct Canonizer {
  const std::set<std::string>* frees;
  int next = 0;
  std::string take() {
    for (;;) {
      std::string cand = "v" + std::to_string(next++);
      if (frees->count(cand) == 0) return cand;
    }
  }
  TermPtr walk(const TermPtr& t, std::map<std::string, std::string>& env) {
    switch (t->tag) {
      case Tag::Var: {
        auto it = env.find(t->name);
        return it == env.end() ? t : var(it->second);
      }
      case Tag::Lam: {
        std::string nb = take();
        auto it = env.find(t->name);
        std::string old = it == env.end() ? std::string() : it->second;
        bool had = it != env.end();
        env[t->name] = nb;
        TermPtr body = walk(t->a, env);
        if (had) env[t->name] = old; else env.erase(t->name);
        return lam(nb, body);
      }
      case Tag::App: {
        TermPtr f = walk(t->a, env);
        return app(f, walk(t->b, env));
      }
      case Tag::Jump: {
        if (t->name == void_binder) {
          TermPtr body = walk(t->a, env);
          return jump(body, void_binder, walk(t->b, env));
        }
        std::string nb = take();
        auto it = env.find(t->name);
        std::string old = it == env.end() ? std::string() : it->second;
        bool had = it != env.end();
        env[t->name] = nb;
        TermPtr body = walk(t->a, env);
        if (had) env[t->name] = old; else env.erase(t->name);
        return jump(body, nb, walk(t->b, env));
      }
    }
    throw TermError("unreachable");
  }
};
}  // namespace

bool alpha_eq(const TermPtr& t, const TermPtr& u) {
  if (t == u) return true;
  if (t->sz != u->sz || t->fvs != u->fvs) return false;
  std::map<std::string, int> mt, mu;
  return alpha_walk(t, u, mt, mu, 0);
}

TermPtr alpha_canonical(const TermPtr& t) {
  Canonizer c;
  c.frees = &t->fvs;
  std::map<std::string, std::string> env;
  return c.walk(t, env);
}

namespace {
void key_walk(const TermPtr& t, std::string& out) {
  switch (t->tag) {
    case Tag::Var:
      out += 'V';
      out += t->name;
      out += ';';
      return;
    case Tag::Lam:
      out += 'L';
      out += t->name;
      out += ';';
      key_walk(t->a, out);
      return;
    case Tag::App:
      out += 'A';
      key_walk(t->a, out);
      key_walk(t->b, out);
      return;
    case Tag::Jump:
      out += 'J';
      out += t->name;
      out += ';';
      key_walk(t->a, out);
      key_walk(t->b, out);
      return;
  }
}
}  // namespace

std::string term_key(const TermPtr& t) {
  std::string out;
  out.reserve(static_cast<size_t>(t->sz) * 4);
  key_walk(alpha_canonical(t), out);
  return out;
}

int term_cmp(const TermPtr& a, const TermPtr& b) {
  if (a->tag != b->tag) return static_cast<int>(a->tag) < static_cast<int>(b->tag) ? -1 : 1;
  if (int c = a->name.compare(b->name)) return c < 0 ? -1 : 1;
  switch (a->tag) {
    case Tag::Var: return 0;
    case Tag::Lam: return term_cmp(a->a, b->a);
    case Tag::App:
    case Tag::Jump: {
      if (int c = term_cmp(a->a, b->a)) return c;
      return term_cmp(a->b, b->b);
    }
  }
  return 0;
}

namespace {
void gather_subterms(const TermPtr& t, bool skip_root,
                     std::unordered_set<std::string>& seen, std::vector<TermPtr>& out) {
  if (!skip_root && seen.insert(term_key(t)).second) out.push_back(t);
  if (t->tag == Tag::Var) return;
  gather_subterms(t->a, false, seen, out);
  if (t->b) gather_subterms(t->b, false, seen, out);
}
}  // namespace

std::vector<TermPtr> distinct_subterms(const TermPtr& t, bool proper) {
  std::vector<TermPtr> out;
  std::unordered_set<std::string> seen;
  gather_subterms(t, proper, seen, out);
  return out;
}

bool has_proper_subterm(const TermPtr& t, const TermPtr& s) {
  std::vector<TermPtr> stack;
  if (t->tag != Tag::Var) {
    stack.push_back(t->a);
    if (t->b) stack.push_back(t->b);
  }
  while (!stack.empty()) {
    TermPtr cur = stack.back();
    stack.pop_back();
    if (cur->sz == s->sz && alpha_eq(cur, s)) return true;
    if (cur->tag != Tag::Var && cur->sz > s->sz) {
      stack.push_back(cur->a);
      if (cur->b) stack.push_back(cur->b);
    }
  }
  return false;
}

}  // namespace lj
