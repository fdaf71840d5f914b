#include "doctest.h"

#include <string>

#include "lj/lambdaj.hpp"
#include "lj/projection.hpp"
#include "lj/rewrite.hpp"
#include "lj/syntax.hpp"
#include "lj/term.hpp"

using namespace lj;

namespace {

TermPtr T(const std::string& src) { return parse_term(src, true); }

// Applies `rule` at `pos` and verifies the step projects correctly.
ProjectionCheck checked_step(const Rule& rule, const std::string& before, const Position& pos) {
  TermPtr t = T(before);
  std::vector<TermPtr> r = apply_rule_at(rule, t, pos);
  REQUIRE_MESSAGE(!r.empty(), rule.id, " does not apply to ", before);
  return check_projection_step(t, Step{rule.id, pos, 0, r[0]}, 6);
}

}  // namespace

TEST_CASE("gc projection values") {
  CHECK(print_term(gc_project(T("x[x/y]"))) == "y");
  CHECK(print_term(gc_project(T("(x x)[x/y]"))) == "y y");
  CHECK(print_term(gc_project(T("z[x/y]"))) == "z[_/y]");
  CHECK(print_term(gc_project(T("x[x/y[z'/w]]"))) == "y[_/w]");
  CHECK(print_term(gc_project(T("(\\x.z)[q/w]"))) == "(\\x.z)[_/w]");
  CHECK(print_term(gc_project(T("z[_/y]"))) == "z[_/y]");

  // pure terms are fixed points (same node, not merely alpha-equal)
  TermPtr pure = T("\\x.x y");
  CHECK(gc_project(pure) == pure);

  // erasure rows from the projection table
  CHECK(print_term(gc_project(T("f[y/x][x/u]"))) == "f[_/u]");
  CHECK(print_term(gc_project(T("f[y/x z][x/u][z/v]"))) == "f[_/u v]");
  CHECK(print_term(gc_project(T("f[x/u][z/v]"))) == "f[_/u][_/v]");
  CHECK(print_term(gc_project(T("f[y/x x][x/u]"))) == "f[_/u u]");
  CHECK(print_term(gc_project(T("(f[w/f[y/x z]] g)[x/u][z/v]"))) == "f[_/f[_/u v]] g");
  CHECK(print_term(gc_project(T("(f[w/f] g)[x/u][z/v]"))) == "(f[_/f] g)[_/u][_/v]");
}

TEST_CASE("erasing steps project to hydra and lifting steps") {
  // a chain collapses to the same memory
  CHECK(checked_step(rule_w(), "f[y/x][x/u]", {1}).ok);
  // one cell splits into two
  CHECK(checked_step(rule_w(), "f[y/x z][x/u][z/v]", {1, 1}).ok);
  // a duplicated fragment drops to one copy
  CHECK(checked_step(rule_w(), "f[y/x x][x/u]", {1}).ok);
  // nested cells split and lift out, modulo commutation
  CHECK(checked_step(rule_w(), "(f[w/f[y/x z]] g)[x/u][z/v]", {1, 1, 1, 2}).ok);
}

TEST_CASE("beta steps project to memory beta steps") {
  CHECK(checked_step(rule_dB(), "(\\x.x x) y", {}).ok);
  CHECK(checked_step(rule_dB(), "(\\x.z) y", {}).ok);
  CHECK(checked_step(rule_dB(), "(\\x.x)[z/w] y", {}).ok);
  CHECK(checked_step(rule_dB(), "q ((\\x.x x) y)", {2}).ok);
}

TEST_CASE("duplication and use project to silence") {
  CHECK(checked_step(rule_d(), "x[x/u u]", {}).ok);
  CHECK(checked_step(rule_c(), "(x x)[x/u]", {}).ok);
  CHECK(checked_step(rule_u(), "z (z'[x/y])", {}).ok);
}

TEST_CASE("a wrong target fails the check with a reason") {
  ProjectionCheck bad =
      check_projection_step(T("z[x/y]"), Step{"w", {}, 0, T("q")}, 4);
  CHECK(!bad.ok);
  CHECK(!bad.detail.empty());
  CHECK_THROWS_AS(check_projection_step(T("z[x/y]"), Step{"zz", {}, 0, T("z")}, 4), TermError);
}

TEST_CASE("axiom moves project by their family") {
  CHECK(check_projection_axiom(T("z[x/a][y/b]"), T("z[y/b][x/a]"), "CS").ok);
  CHECK(check_projection_axiom(T("\\y.z[x/a]"), T("(\\y.z)[x/a]"), "sigma1").ok);
  CHECK(check_projection_axiom(T("z[x/a] b"), T("(z b)[x/a]"), "sigma2").ok);
  CHECK(check_projection_axiom(T("(z x)[x/a]"), T("z (x[x/a])"), "box1").ok);
  CHECK(check_projection_axiom(T("z[y/x][x/a]"), T("z[y/x[x/a]]"), "box2").ok);
  CHECK(check_projection_axiom(T("(z b)[x/a]"), T("z (b[x/a])"), "box1u").ok);
  CHECK(check_projection_axiom(T("z[y/b][x/a]"), T("z[y/b[x/a]]"), "box2u").ok);
  CHECK(!check_projection_axiom(T("z[x/a][y/b]"), T("q"), "CS").ok);
  CHECK_THROWS_AS(check_projection_axiom(T("z"), T("z"), "zz"), TermError);
}
