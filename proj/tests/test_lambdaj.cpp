#include "doctest.h"

#include <set>
#include <string>
#include <vector>

#include "lj/lambdaj.hpp"
#include "lj/rewrite.hpp"
#include "lj/syntax.hpp"
#include "lj/term.hpp"

using namespace lj;

namespace {

TermPtr T(const std::string& src) { return parse_term(src, true); }

std::set<std::string> keys(const std::vector<TermPtr>& ts) {
  std::set<std::string> out;
  for (const TermPtr& t : ts) out.insert(term_key(alpha_canonical(t)));
  return out;
}

std::string key(const std::string& src) { return term_key(alpha_canonical(T(src))); }

std::vector<std::string> rule_ids(const Trace& tr) {
  std::vector<std::string> out;
  for (const Step& s : tr.steps) out.push_back(s.rule_id);
  return out;
}

}  // namespace

TEST_CASE("dB fires at a distance and renames clashing stack binders") {
  Rule dB = rule_dB();
  std::vector<TermPtr> r = dB.apply_root(T("(\\x.x) y"));
  REQUIRE(r.size() == 1);
  CHECK(print_term(r[0]) == "x[x/y]");

  // the jump stack stays outside, the new jump lands innermost
  r = dB.apply_root(T("(\\x.x)[z/w] y"));
  REQUIRE(r.size() == 1);
  CHECK(print_term(r[0]) == "x[x/y][z/w]");

  // two stacked jumps keep their order
  r = dB.apply_root(T("(\\x.x)[z/w][z'/w'] y"));
  REQUIRE(r.size() == 1);
  CHECK(print_term(r[0]) == "x[x/y][z/w][z'/w']");

  // a stack binder capturing the argument is renamed
  r = dB.apply_root(T("(\\x.x z)[z/w] z"));
  REQUIRE(r.size() == 1);
  CHECK(alpha_eq(r[0], T("(x v)[x/z][v/w]")));

  CHECK(dB.apply_root(T("x y")).empty());
  CHECK(dB.apply_root(T("\\x.x")).empty());
  CHECK(dB.apply_root(T("x[z/w] y")).empty());
}

TEST_CASE("w erases, d substitutes a unique occurrence") {
  CHECK(print_term(rule_w().apply_root(T("z[x/y]"))[0]) == "z");
  CHECK(rule_w().apply_root(T("x[x/y]")).empty());
  CHECK(rule_w().apply_root(T("x y")).empty());

  CHECK(print_term(rule_d().apply_root(T("x[x/y]"))[0]) == "y");
  CHECK(rule_d().apply_root(T("(x x)[x/y]")).empty());
  CHECK(rule_d().apply_root(T("z[x/y]")).empty());
  // substitution avoids capture
  CHECK(alpha_eq(rule_d().apply_root(T("(\\y.x)[x/y]"))[0], T("\\w.y")));
}

TEST_CASE("c splits the occurrences every proper way") {
  Rule c = rule_c();
  std::vector<TermPtr> r = c.apply_root(T("(x x)[x/u]"));
  REQUIRE(r.size() == 2);
  CHECK(alpha_eq(r[0], T("(y x)[x/u][y/u]")));
  CHECK(alpha_eq(r[1], T("(x y)[x/u][y/u]")));
  CHECK(c.det_pick(r.size()) == 1);  // leftmost occurrence keeps the old name

  CHECK(c.apply_root(T("(x x x)[x/u]")).size() == 6);
  CHECK(c.apply_root(T("x[x/u]")).empty());
  CHECK(c.apply_root(T("z[x/u]")).empty());
}

TEST_CASE("u lifts a void jump out of a box") {
  Rule u = rule_u();
  std::vector<TermPtr> r = u.apply_root(T("z (z'[x/y])"));
  REQUIRE(r.size() == 1);
  CHECK(print_term(r[0]) == "(z z')[x/y]");

  r = u.apply_root(T("v[w/z[x/y]]"));
  REQUIRE(r.size() == 1);
  CHECK(print_term(r[0]) == "v[w/z][x/y]");

  // spine-only path: lifting is an equivalence there, not a u step
  CHECK(u.apply_root(T("\\x.x'[y/z]")).empty());
  CHECK(u.apply_root(T("z'[x/y] z")).empty());
  // a used jump is not void
  CHECK(u.apply_root(T("z (x[x/y])")).empty());
  // a path binder free in the content blocks the lift at this root ...
  CHECK(u.apply_root(T("\\y.(z (z'[x/y]))")).empty());
  // ... but the contextual closure still lifts below the lambda
  std::vector<TermPtr> inner = apply_rule_at(u, T("\\y.(z (z'[x/y]))"), {1});
  REQUIRE(inner.size() == 1);
  CHECK(print_term(inner[0]) == "\\y.(z z')[x/y]");

  // the lifted binder is renamed when it would capture
  r = u.apply_root(T("z (z'[x/y]) x"));
  REQUIRE(r.size() == 1);
  CHECK(alpha_eq(r[0], T("(z z' x)[w/y]")));

  // anonymous jumps lift the same way
  r = u.apply_root(T("z (z'[_/y])"));
  REQUIRE(r.size() == 1);
  CHECK(print_term(r[0]) == "(z z')[_/y]");
}

TEST_CASE("deterministic normalization in lambdaj") {
  NormResult n = normalize(lambdaj_system(), T("(\\x.x x) y"));
  CHECK(n.complete);
  CHECK(print_term(n.term()) == "y y");
  CHECK(rule_ids(n.trace) == std::vector<std::string>{"dB", "c", "d", "d"});
  std::string why;
  CHECK(validate(lambdaj_system(), n.trace, &why));

  // plain beta agrees on the normal form
  NormResult b = normalize(beta_system(), T("(\\x.x x) y"));
  CHECK(b.complete);
  CHECK(print_term(b.term()) == "y y");
  CHECK(rule_ids(b.trace) == std::vector<std::string>{"beta"});

  // an erasing step: the argument is dropped unevaluated
  NormResult e = normalize(lambdaj_system(), T("(\\x.z) ((\\y.y) w)"));
  CHECK(print_term(e.term()) == "z");
  CHECK(rule_ids(e.trace) == std::vector<std::string>{"dB", "w"});
}

TEST_CASE("system inventory") {
  CHECK(lambdaj_system().rules.size() == 4);
  CHECK(lambdaj_system().axioms.empty());
  CHECK(lambdaj_o_system().axioms.size() == 3);
  CHECK(lambdaj_obox_system().axioms.size() == 5);
  CHECK(lambdaj_n_system().axioms.size() == 5);
  CHECK(lambdaj_obox_u_system().rules.size() == 5);
  CHECK(lambdaj_obox_u_system().find_rule("u") != nullptr);
  CHECK(j_system().rules.size() == 3);
  CHECK(j_system().find_rule("dB") == nullptr);
  CHECK(nogc_system().rules.size() == 3);
  CHECK(nogc_system().find_rule("w") == nullptr);
  CHECK(beta_system().universe == Universe::Pure);
}

TEST_CASE("jump normal form composes substitutions") {
  CHECK(print_term(j_normal_form(T("x[y/z][x/w]"))) == "w");
  CHECK(print_term(j_normal_form(T("(x x)[x/y]"))) == "y y");
  CHECK(print_term(j_normal_form(T("\\x.x[y/z]"))) == "\\x.x");
  CHECK(print_term(j_normal_form(T("z[_/w]"))) == "z");
  CHECK(print_term(j_normal_form(T("x[x/y[y/z]]"))) == "z");
  TermPtr pure = T("\\x.x (\\y.y)");
  CHECK(alpha_eq(j_normal_form(pure), pure));
}

TEST_CASE("full composition: a witness trace down to the substitution") {
  for (const char* src : {"z[x/u]", "x[x/u]", "(x x)[x/u]", "(x (x x))[x/u]",
                          "(\\y.x x)[x/u u]", "(x x)[x/x']"}) {
    TermPtr t = T(src);
    Trace tr = full_composition_witness(t);
    CHECK(alpha_eq(tr.start, t));
    std::string why;
    CHECK_MESSAGE(validate(j_system(), tr, &why), src, ": ", why);
    CHECK(alpha_eq(tr.end(), subst_raw(t->a, t->name, t->b)));
    int n = multiplicity(t->a, t->name);
    for (const Step& s : tr.steps) {
      if (n == 0)
        CHECK(s.rule_id == "w");
      else
        CHECK((s.rule_id == "d" || s.rule_id == "c"));
    }
    CHECK(tr.steps.size() == (n == 0 ? 1 : 2 * static_cast<size_t>(n) - 1));
  }
  CHECK_THROWS_AS(full_composition_witness(T("x y")), TermError);
}

TEST_CASE("beta and parallel reducts") {
  std::set<std::string> b = keys(beta_reducts(T("(\\x.x x) ((\\y.y) z)")));
  CHECK(b.size() == 2);
  CHECK(b.count(key("((\\y.y) z) ((\\y.y) z)")));
  CHECK(b.count(key("(\\x.x x) z")));

  // parallel reduction: any set of redexes at once, including none
  std::set<std::string> p = keys(parallel_reducts(T("(\\x.(\\i.i) (\\j.j)) ((\\i.i) (\\j.j))")));
  CHECK(p.count(key("(\\x.(\\i.i) (\\j.j)) ((\\i.i) (\\j.j))")));
  CHECK(p.count(key("(\\x.\\j.j) ((\\i.i) (\\j.j))")));
  CHECK(p.count(key("(\\x.\\j.j) (\\j.j)")));
  CHECK(p.count(key("\\j.j")));

  // the diamond: joint reducts of any two parallel reducts intersect
  std::vector<TermPtr> ps = parallel_reducts(T("(\\x.(\\i.i) (\\j.j)) ((\\i.i) (\\j.j))"));
  for (const TermPtr& t1 : ps)
    for (const TermPtr& t2 : ps) {
      std::set<std::string> k1 = keys(parallel_reducts(t1));
      std::set<std::string> k2 = keys(parallel_reducts(t2));
      bool meet = false;
      for (const std::string& k : k1) meet = meet || k2.count(k);
      CHECK(meet);
    }

  CHECK_THROWS_AS(parallel_reducts(T("x[y/z]")), TermError);
}

TEST_CASE("simulate_beta drives one beta step through the jumps") {
  TermPtr t = T("(\\x.x x) (\\z.z)");
  Trace tr = simulate_beta(t, {});
  CHECK(tr.steps[0].rule_id == "dB");
  for (size_t i = 1; i < tr.steps.size(); ++i)
    CHECK((tr.steps[i].rule_id == "w" || tr.steps[i].rule_id == "d" || tr.steps[i].rule_id == "c"));
  CHECK(alpha_eq(tr.end(), T("(\\z.z) (\\z.z)")));
  std::string why;
  CHECK(validate(lambdaj_system(), tr, &why));

  // an inner redex
  TermPtr s = T("y ((\\x.z) w)");
  Trace ti = simulate_beta(s, {2});
  CHECK(alpha_eq(ti.end(), T("y z")));
  CHECK_THROWS_AS(simulate_beta(s, {1}), TermError);
}

TEST_CASE("postpone_w pushes erasure to the end of a trace") {
  RewriteSystem sys = lambdaj_system();

  // w, dB, d  ->  dB, d, w
  Trace tr;
  tr.start = T("z[x/a] ((\\y.y) b)");
  {
    TermPtr t1 = T("z ((\\y.y) b)");
    TermPtr t2 = T("z (y[y/b])");
    TermPtr t3 = T("z b");
    tr.steps = {Step{"w", {1}, 0, t1}, Step{"dB", {2}, 0, t2}, Step{"d", {2}, 0, t3}};
  }
  std::string why;
  REQUIRE(validate(sys, tr, &why));
  Trace out = postpone_w(sys, tr);
  CHECK(validate(sys, out, &why));
  CHECK(alpha_eq(out.start, tr.start));
  CHECK(alpha_eq(out.end(), tr.end()));
  CHECK(rule_ids(out) == std::vector<std::string>{"dB", "d", "w"});

  // duplication: the calculus may need two erasures afterwards
  Trace dup;
  dup.start = T("(x x)[x/z[y/a]]");
  {
    TermPtr t1 = T("(x x)[x/z]");
    std::vector<TermPtr> split = rule_c().apply_root(t1);
    dup.steps = {Step{"w", {2}, 0, t1}, Step{"c", {}, split.size() - 1, split.back()}};
  }
  REQUIRE(validate(sys, dup, &why));
  Trace dout = postpone_w(sys, dup);
  CHECK(validate(sys, dout, &why));
  CHECK(alpha_eq(dout.end(), dup.end()));
  REQUIRE(dout.steps.size() == 3);
  CHECK(rule_ids(dout) == std::vector<std::string>{"c", "w", "w"});

  // a trace with no erasing step is returned unchanged
  NormResult n = normalize(sys, T("(\\x.x x) y"));
  Trace same = postpone_w(sys, n.trace);
  CHECK(rule_ids(same) == rule_ids(n.trace));
}

TEST_CASE("postpone_w repairs an erasure that enabled a dereliction") {
  RewriteSystem sys = lambdaj_system();

  // The erased garbage [y/x] holds a second occurrence of x, so d on [x/z]
  // only fires after the w. No single non-erasing step from the start reaches
  // z by erasures alone: the postponed trace needs one extra contraction to
  // split the vanished occurrence off first.
  Trace tr;
  tr.start = T("x[y/x][x/z]");
  {
    TermPtr t1 = T("x[x/z]");
    TermPtr t2 = T("z");
    tr.steps = {Step{"w", {1}, 0, t1}, Step{"d", {}, 0, t2}};
  }
  std::string why;
  REQUIRE(validate(sys, tr, &why));
  Trace out = postpone_w(sys, tr);
  CHECK(validate(sys, out, &why));
  CHECK(alpha_eq(out.start, tr.start));
  CHECK(alpha_eq(out.end(), T("z")));
  std::vector<std::string> ids = rule_ids(out);
  auto count = [&ids](const char* id) {
    return std::count(ids.begin(), ids.end(), std::string(id));
  };
  CHECK(count("d") == 1);
  CHECK(count("c") == 1);
  CHECK(count("dB") == 0);
  bool seen_w = false;
  for (const std::string& id : ids) {
    if (id == "w") seen_w = true;
    else CHECK(!seen_w);
  }
}
