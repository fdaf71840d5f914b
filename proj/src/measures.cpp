#include "lj/measures.hpp"

#include <algorithm>

namespace lj {

std::int64_t potential_multiplicity(const TermPtr& t, const std::string& x) {
  if (x == void_binder) return 0;
  switch (t->tag) {
    case Tag::Var:
      return t->name == x ? 1 : 0;
    case Tag::Lam:
      return t->name == x ? 0 : potential_multiplicity(t->a, x);
    case Tag::App:
      return potential_multiplicity(t->a, x) + potential_multiplicity(t->b, x);
    case Tag::Jump: {
      std::int64_t body = t->name == x ? 0 : potential_multiplicity(t->a, x);
      std::int64_t weight = std::max<std::int64_t>(1, potential_multiplicity(t->a, t->name));
      return body + weight * potential_multiplicity(t->b, x);
    }
  }
  return 0;
}

Multiset<std::int64_t> j_measure(const TermPtr& t) {
  switch (t->tag) {
    case Tag::Var:
      return {};
    case Tag::Lam:
      return j_measure(t->a);
    case Tag::App: {
      Multiset<std::int64_t> m = j_measure(t->a);
      m.join(j_measure(t->b));
      return m;
    }
    case Tag::Jump: {
      std::int64_t mx = potential_multiplicity(t->a, t->name);
      Multiset<std::int64_t> m;
      m.add(mx);
      m.join(j_measure(t->a));
      m.join(j_measure(t->b).scaled(std::max<std::int64_t>(1, mx)));
      return m;
    }
  }
  return {};
}

namespace {

// inner_measure(t) = weight(t) - base(t), where weight counts a jump
// multiplicatively and base additively. The difference is invariant under
// commutation of independent jumps (products commute), strictly drops when a
// jump moves below a lambda, into either side of an application, or into the
// content of another jump, and is zero exactly on jump-free terms.
std::int64_t inner_weight(const TermPtr& t) {
  switch (t->tag) {
    case Tag::Var: return 2;
    case Tag::Lam: return inner_weight(t->a) + 1;
    case Tag::App: return inner_weight(t->a) + inner_weight(t->b) + 1;
    case Tag::Jump: return inner_weight(t->a) * (inner_weight(t->b) + 1);
  }
  return 0;
}

std::int64_t inner_base(const TermPtr& t) {
  switch (t->tag) {
    case Tag::Var: return 2;
    case Tag::Lam: return inner_base(t->a) + 1;
    case Tag::App:
    case Tag::Jump: return inner_base(t->a) + inner_base(t->b) + 1;
  }
  return 0;
}

// Each jump occurrence contributes the number of edges on its path to the
// root other than jump-body edges. Zero exactly when every jump sits on the
// top spine of jumps; each outer step pulls some jump across one such edge.
std::int64_t outer_walk(const TermPtr& t, std::int64_t depth) {
  switch (t->tag) {
    case Tag::Var:
      return 0;
    case Tag::Lam:
      return outer_walk(t->a, depth + 1);
    case Tag::App:
      return outer_walk(t->a, depth + 1) + outer_walk(t->b, depth + 1);
    case Tag::Jump:
      return depth + outer_walk(t->a, depth) + outer_walk(t->b, depth + 1);
  }
  return 0;
}

}  // namespace

std::int64_t inner_measure(const TermPtr& t) { return inner_weight(t) - inner_base(t); }

std::int64_t outer_measure(const TermPtr& t) { return outer_walk(t, 0); }

}  // namespace lj
