#include "doctest.h"

#include <set>
#include <string>
#include <vector>

#include "lj/equivalences.hpp"
#include "lj/rewrite.hpp"
#include "lj/syntax.hpp"
#include "lj/term.hpp"

using namespace lj;

namespace {

TermPtr T(const std::string& src) { return parse_term(src, true); }

// Applies the axiom at the root and checks the single result against
// `expect` (up to alpha); an empty `expect` means the axiom must not apply.
void roundtrip(const std::string& id, bool forward, const std::string& from,
               const std::string& expect) {
  const Equivalence& ax = axiom(id);
  std::vector<TermPtr> out = forward ? ax.forward(T(from)) : ax.backward(T(from));
  INFO(id, (forward ? " forward on " : " backward on "), from);
  if (expect.empty()) {
    CHECK(out.empty());
  } else {
    REQUIRE(out.size() == 1);
    CHECK_MESSAGE(alpha_eq(out[0], T(expect)), "got ", print_term(out[0]));
  }
}

}  // namespace

TEST_CASE("axiom catalog") {
  CHECK(axiom_ids().size() == 10);
  CHECK_THROWS_AS(axiom("nope"), TermError);
  CHECK(axiom_set("none").empty());
  CHECK(axiom_set("cs").size() == 1);
  CHECK(axiom_set("o").size() == 3);
  CHECK(axiom_set("box").size() == 2);
  CHECK(axiom_set("obox").size() == 5);
  CHECK(axiom_set("n").size() == 5);
  CHECK(axiom_set("sigmahat").size() == 2);
  CHECK(axiom_set("pi").size() == 8);
  CHECK(axiom_set("CS,box1").size() == 2);
  CHECK_THROWS_AS(axiom_set("CS,nope"), TermError);
}

TEST_CASE("CS swaps independent jumps") {
  roundtrip("CS", true, "z[x/a][y/b]", "z[y/b][x/a]");
  // y occurs in the inner content: swapping would detach it
  roundtrip("CS", true, "z[x/y][y/b]", "");
  // x occurs in the outer content: rename the inner binder and proceed
  roundtrip("CS", true, "z[x/a][y/x]", "z[y/x][w/a]");
  // shadowed binders: the outer jump binds nothing, rename and proceed
  roundtrip("CS", true, "z[x/a][x/b]", "z[x/b][w/a]");
  // self-inverse
  roundtrip("CS", false, "z[x/a][y/b]", "z[y/b][x/a]");
  roundtrip("CS", false, "z[x/y][y/b]", "");
}

TEST_CASE("sigma1 moves a jump across a lambda") {
  roundtrip("sigma1", true, "\\y.z[x/a]", "(\\y.z)[x/a]");
  roundtrip("sigma1", true, "\\y.z[x/y]", "");  // content would detach from y
  // binder names collide: the jump keeps its occurrences via a fresh name
  roundtrip("sigma1", true, "\\y.y'[y/a]", "(\\y.y')[w/a]");
  roundtrip("sigma1", true, "\\y.(y y')[y/a]", "(\\y.w y')[w/a]");
  roundtrip("sigma1", false, "(\\y.z)[x/a]", "\\y.z[x/a]");
  roundtrip("sigma1", false, "(\\y.z)[x/y]", "\\w.z[x/y]");   // keep y free
  roundtrip("sigma1", false, "(\\y.y)[y/a]", "\\w.w[y/a]");   // keep the lambda's y
  roundtrip("sigma1", true, "\\y.z", "");                     // not a redex
}

TEST_CASE("sigma2 moves a jump across an application, function side") {
  roundtrip("sigma2", true, "z[x/a] b", "(z b)[x/a]");
  roundtrip("sigma2", true, "x'[x/a] x", "(x' x)[w/a]");  // x free in the argument
  roundtrip("sigma2", false, "(z b)[x/a]", "z[x/a] b");
  roundtrip("sigma2", false, "(z x)[x/a]", "");  // occurrences in the argument detach
  roundtrip("sigma2", false, "(x b)[x/a]", "x[x/a] b");
}

TEST_CASE("box1 moves a jump into the argument box") {
  roundtrip("box1", true, "(z x)[x/a]", "z (x[x/a])");
  roundtrip("box1", true, "(x z)[x/a]", "");  // occurrences in the function detach
  roundtrip("box1", true, "(z b)[x/a]", "");  // unsafe: the box would come loose
  roundtrip("box1", false, "z (x[x/a])", "(z x)[x/a]");
  roundtrip("box1", false, "z (b[x/a])", "");  // unsafe in reverse as well
  roundtrip("box1", false, "x (x[x/a])", "(x w)[w/a]");  // keep the outer x free
}

TEST_CASE("box1u is box1 without the safety condition") {
  roundtrip("box1u", true, "(z b)[x/a]", "z (b[x/a])");
  roundtrip("box1u", true, "(x z)[x/a]", "");  // detaching occurrences stays forbidden
  roundtrip("box1u", false, "z (b[x/a])", "(z b)[x/a]");
  roundtrip("box1u", true, "(z x)[x/a]", "z (x[x/a])");
}

TEST_CASE("box2 moves a jump into the content box") {
  roundtrip("box2", true, "z[y/x][x/a]", "z[y/x[x/a]]");
  roundtrip("box2", true, "x[y/x'][x/a]", "");  // x occurs in the body
  roundtrip("box2", true, "z[y/b][x/a]", "");   // unsafe: no occurrence in the content
  roundtrip("box2", true, "z[y/y][y/a]", "z[y/w[w/a]]");  // outer binder shadowed
  roundtrip("box2", false, "z[y/x[x/a]]", "z[y/x][x/a]");
  roundtrip("box2", false, "z[y/b[x/a]]", "");  // unsafe in reverse
  roundtrip("box2", false, "x[y/x[x/a]]", "x[y/w][w/a]");
  roundtrip("box2", false, "z[y/y[y/a]]", "z[y/w][w/a]");
}

TEST_CASE("box2u is box2 without the safety condition") {
  roundtrip("box2u", true, "z[y/b][x/a]", "z[y/b[x/a]]");
  roundtrip("box2u", true, "x[y/b][x/a]", "");
  roundtrip("box2u", false, "z[y/b[x/a]]", "z[y/b][x/a]");
}

TEST_CASE("sigmahat1 swaps a lambda with a beta redex") {
  roundtrip("sigmahat1", true, "(\\x.\\y.x y) a", "\\w.(\\x.x w) a");
  roundtrip("sigmahat1", true, "(\\x.\\y.x) y", "\\w.(\\x.x) y");  // y free in the argument
  roundtrip("sigmahat1", true, "(\\x.\\x.x) a", "\\w.(\\x.w) a");  // shadowed binder
  roundtrip("sigmahat1", false, "\\y.(\\x.x y) a", "(\\x.\\y.x y) a");
  roundtrip("sigmahat1", false, "\\y.(\\x.x) y", "");  // the argument leaves y's scope
  roundtrip("sigmahat1", false, "\\y.(\\y.y) a", "(\\w.\\y.w) a");
}

TEST_CASE("sigmahat2 splits a redex whose body is an application") {
  roundtrip("sigmahat2", true, "(\\x.x z) a", "(\\x.x) a z");
  roundtrip("sigmahat2", true, "(\\x.z x) a", "");  // the argument side needs x
  roundtrip("sigmahat2", false, "(\\x.x) a z", "(\\x.x z) a");
  roundtrip("sigmahat2", false, "(\\x.x) a x", "(\\w.w x) a");
}

TEST_CASE("boxhat moves a redex into the argument box") {
  roundtrip("boxhat", true, "(\\x.z x) a", "z ((\\x.x) a)");
  roundtrip("boxhat", true, "(\\x.x z) a", "");  // x occurs on the function side
  roundtrip("boxhat", true, "(\\x.z y) a", "");  // no occurrence to follow
  roundtrip("boxhat", false, "z ((\\x.x) a)", "(\\x.z x) a");
  roundtrip("boxhat", false, "z ((\\x.y) a)", "");
  roundtrip("boxhat", false, "x ((\\x.x) a)", "(\\w.x w) a");
}

TEST_CASE("equivalence classes under o") {
  std::vector<Equivalence> o = axiom_set("o");
  EqClass cls = equivalence_class(o, T("z[x/a][y/b]"));
  CHECK(cls.complete);
  CHECK(cls.members.size() == 2);
  CHECK(cls.find(T("z[y/b][x/a]")) >= 0);

  // a pure term admits no o-moves
  CHECK(equivalence_class(o, T("(\\x.x x) y")).members.size() == 1);

  // sigma1 and sigma2 around a lambda and an application
  CHECK(eq_equivalent(o, T("\\y.z[x/a]"), T("(\\y.z)[x/a]")));
  CHECK(eq_equivalent(o, T("z[x/a] b"), T("(z b)[x/a]")));
  CHECK(!eq_equivalent(o, T("(z b)[x/a]"), T("z (b[x/a])")));
  CHECK(!eq_equivalent(o, T("(z x)[x/a]"), T("z (x[x/a])")));
}

TEST_CASE("global o agrees with the local presentation") {
  // lift from under a lambda, one and two levels
  Equivalence g = global_o();
  std::vector<TermPtr> lifted = g.forward(T("\\y.z[x/a]"));
  REQUIRE(lifted.size() == 1);
  CHECK(alpha_eq(lifted[0], T("(\\y.z)[x/a]")));

  std::vector<TermPtr> two = g.forward(T("\\w.\\y.z[x/a]"));
  REQUIRE(two.size() == 1);
  CHECK(alpha_eq(two[0], T("(\\w.\\y.z)[x/a]")));

  std::vector<TermPtr> pushed = g.backward(T("(\\w.\\y.z)[x/a]"));
  REQUIRE(pushed.size() == 2);
  std::set<std::string> got;
  for (const TermPtr& p : pushed) got.insert(term_key(alpha_canonical(p)));
  CHECK(got.count(term_key(alpha_canonical(T("\\w.((\\y.z)[x/a])")))));
  CHECK(got.count(term_key(alpha_canonical(T("\\w.\\y.z[x/a]")))));

  // a binder on the path that is free in the content blocks the lift
  CHECK(g.forward(T("\\y.z[x/y]")).empty());
  // crossing an argument edge is not a spine move
  CHECK(g.forward(T("z (x[x/a])")).empty());

  // same-class answers agree with the local axioms on sample pairs
  CHECK(global_o_equal(T("\\y.z[x/a]"), T("(\\y.z)[x/a]")));
  CHECK(global_o_equal(T("z[x/a] b"), T("(z b)[x/a]")));
  CHECK(global_o_equal(T("z[x/a][y/b]"), T("z[y/b][x/a]")));
  CHECK(!global_o_equal(T("(z x)[x/a]"), T("z (x[x/a])")));
  CHECK(!global_o_equal(T("z[x/a]"), T("z")));
}

TEST_CASE("global obox follows occurrences across boxes") {
  Equivalence g = global_obox();
  // a used jump crosses the argument edge
  std::vector<TermPtr> lifted = g.forward(T("z (x[x/a])"));
  REQUIRE(lifted.size() == 1);
  CHECK(alpha_eq(lifted[0], T("(z x)[x/a]")));
  // an unused jump moves along spines only
  CHECK(g.forward(T("z (b[x/a])")).empty());
  REQUIRE(g.forward(T("\\y.b[x/a]")).size() == 1);

  CHECK(global_obox_equal(T("(z x)[x/a]"), T("z (x[x/a])")));
  CHECK(global_obox_equal(T("z[y/x][x/a]"), T("z[y/x[x/a]]")));
  CHECK(!global_obox_equal(T("(z b)[x/a]"), T("z (b[x/a])")));

  // local obox matches on the same pairs
  std::vector<Equivalence> obox = axiom_set("obox");
  CHECK(eq_equivalent(obox, T("(z x)[x/a]"), T("z (x[x/a])")));
  CHECK(eq_equivalent(obox, T("z[y/x][x/a]"), T("z[y/x[x/a]]")));
  CHECK(!eq_equivalent(obox, T("(z b)[x/a]"), T("z (b[x/a])")));
}
