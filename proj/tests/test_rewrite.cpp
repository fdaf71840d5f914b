#include "doctest.h"

#include <string>
#include <vector>

#include "lj/rewrite.hpp"
#include "lj/syntax.hpp"
#include "lj/term.hpp"

using namespace lj;

namespace {

TermPtr T(const std::string& src) { return parse_term(src, true); }

// Toy rule: the variable v rewrites to the variable a.
Rule rule_v2a() {
  return Rule{"v2a",
              [](const TermPtr& t) -> std::vector<TermPtr> {
                if (t->tag == Tag::Var && t->name == "v") return {var("a")};
                return {};
              },
              {}};
}

// Toy rule: the variable a rewrites to itself (never terminates).
Rule rule_spin() {
  return Rule{"spin",
              [](const TermPtr& t) -> std::vector<TermPtr> {
                if (t->tag == Tag::Var && t->name == "a") return {var("a")};
                return {};
              },
              {}};
}

// Toy axiom: swap the two sides of an application.
Equivalence ax_swap() {
  auto swap = [](const TermPtr& t) -> std::vector<TermPtr> {
    if (t->tag != Tag::App) return {};
    return {app(t->b, t->a)};
  };
  return Equivalence{"swap", swap, swap};
}

// Toy axiom: t ~ t a (grows without bound in the forward direction).
Equivalence ax_grow() {
  return Equivalence{"grow",
                     [](const TermPtr& t) -> std::vector<TermPtr> { return {app(t, var("a"))}; },
                     [](const TermPtr& t) -> std::vector<TermPtr> {
                       if (t->tag == Tag::App && t->b->tag == Tag::Var && t->b->name == "a")
                         return {t->a};
                       return {};
                     }};
}

RewriteSystem toy_system() { return RewriteSystem{"toy", Universe::Jump, {rule_v2a()}, {}}; }

}  // namespace

TEST_CASE("apply_rule_at rewrites exactly the addressed subterm") {
  Rule r = rule_v2a();
  TermPtr t = T("v v");
  CHECK(apply_rule_at(r, t, {}).empty());
  std::vector<TermPtr> at1 = apply_rule_at(r, t, {1});
  REQUIRE(at1.size() == 1);
  CHECK(print_term(at1[0]) == "a v");
  std::vector<TermPtr> at2 = apply_rule_at(r, t, {2});
  REQUIRE(at2.size() == 1);
  CHECK(print_term(at2[0]) == "v a");
}

TEST_CASE("one_step_reducts lists positions outside-in, left to right") {
  RewriteSystem sys = toy_system();
  std::vector<Step> steps = one_step_reducts(sys, T("v (v v)"));
  REQUIRE(steps.size() == 3);
  CHECK(steps[0].pos == Position{1});
  CHECK(steps[1].pos == Position{2, 1});
  CHECK(steps[2].pos == Position{2, 2});
  for (const Step& s : steps) CHECK(s.rule_id == "v2a");
  CHECK(print_term(steps[0].after) == "a (v v)");
}

TEST_CASE("deterministic_step picks the first step and normalize iterates it") {
  RewriteSystem sys = toy_system();
  std::optional<Step> s = deterministic_step(sys, T("v (v v)"));
  REQUIRE(s.has_value());
  CHECK(s->pos == Position{1});

  NormResult n = normalize(sys, T("v (v v)"));
  CHECK(n.complete);
  CHECK(n.trace.steps.size() == 3);
  CHECK(print_term(n.term()) == "a (a a)");
  CHECK(is_normal_form(sys, n.term()));
  CHECK(!is_normal_form(sys, T("v")));
}

TEST_CASE("normalize reports an incomplete trace when capped") {
  RewriteSystem sys{"spin", Universe::Jump, {rule_spin()}, {}};
  NormResult n = normalize(sys, T("a"), 10);
  CHECK(!n.complete);
  CHECK(n.trace.steps.size() == 10);
}

TEST_CASE("validate replays a trace and rejects corrupted steps") {
  RewriteSystem sys = toy_system();
  NormResult n = normalize(sys, T("v (v v)"));
  std::string why;
  CHECK(validate(sys, n.trace, &why));

  Trace bad = n.trace;
  bad.steps[1].after = T("z z");
  CHECK(!validate(sys, bad, &why));
  CHECK(!why.empty());

  Trace wrong_pos = n.trace;
  wrong_pos.steps[0].pos = Position{2, 2};
  CHECK(!validate(sys, wrong_pos, &why));
}

TEST_CASE("equivalence classes close over contexts and directions") {
  std::vector<Equivalence> axs{ax_swap()};
  // (a b) c: swapping at the root and below gives 2 * 2 = 4 arrangements, and
  // each of b a c / c (a b) / ... is reachable.
  EqClass cls = equivalence_class(axs, T("(a b) c"));
  CHECK(cls.complete);
  CHECK(cls.members.size() == 4);
  CHECK(cls.find(T("c (a b)")) >= 0);
  CHECK(cls.find(T("c (b a)")) >= 0);
  CHECK(cls.find(T("(b a) c")) >= 0);
  CHECK(cls.find(T("a (b c)")) == -1);

  for (int m = 0; m < static_cast<int>(cls.members.size()); ++m) {
    std::vector<EqMove> path = eq_path(cls, m);
    std::string why;
    CHECK(validate_eq_path(axs, cls.members[0], path, cls.members[static_cast<size_t>(m)], &why));
  }

  CHECK(eq_equivalent(axs, T("(a b) c"), T("c (b a)")));
  CHECK(!eq_equivalent(axs, T("(a b) c"), T("a (b c)")));
}

TEST_CASE("equivalence classes stop at the member cap") {
  std::vector<Equivalence> axs{ax_grow()};
  EqClass cls = equivalence_class(axs, T("b"), 6);
  CHECK(!cls.complete);
  CHECK(cls.members.size() == 6);
}

TEST_CASE("canonical member is the least member, independent of the start") {
  std::vector<Equivalence> axs{ax_swap()};
  EqClass from_ab = equivalence_class(axs, T("a b"));
  EqClass from_ba = equivalence_class(axs, T("b a"));
  CHECK(from_ab.members.size() == 2);
  CHECK(alpha_eq(from_ab.canonical(), from_ba.canonical()));
}

TEST_CASE("one_step_modulo fires from every member of the class") {
  RewriteSystem sys{"toy-mod", Universe::Jump, {rule_v2a()}, {ax_swap()}};
  EqClass cls = equivalence_class(sys.axioms, T("v b"));
  REQUIRE(cls.members.size() == 2);
  std::vector<ModuloStep> steps = one_step_modulo(sys, cls);
  REQUIRE(steps.size() == 2);
  // one step from each member, rewriting the v on whichever side it sits
  CHECK(steps[0].member != steps[1].member);
  for (const ModuloStep& ms : steps) {
    TermPtr member = cls.members[static_cast<size_t>(ms.member)];
    TermPtr expect = ms.step.pos == Position{1} ? T("a b") : T("b a");
    CHECK(alpha_eq(ms.step.after, expect));
    CHECK(alpha_eq(subterm_at(member, ms.step.pos), T("v")));
  }
}
