#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "lj/rewrite.hpp"
#include "lj/syntax.hpp"
#include "lj/term.hpp"
#include "lj/zoo.hpp"

using namespace lj;

namespace {

TermPtr T(const std::string& src) { return parse_term(src, true); }

// Applies the named rule of the system at the root, expecting one result (or
// none when `expect` is empty).
void rule_case(const RewriteSystem& sys, const std::string& rule_id, const std::string& from,
               const std::string& expect) {
  const Rule* r = sys.find_rule(rule_id);
  REQUIRE_MESSAGE(r != nullptr, sys.name, " has no rule ", rule_id);
  std::vector<TermPtr> out = r->apply_root(T(from));
  INFO(sys.name, ".", rule_id, " on ", from);
  if (expect.empty()) {
    CHECK(out.empty());
  } else {
    REQUIRE(out.size() == 1);
    CHECK_MESSAGE(alpha_eq(out[0], T(expect)), "got ", print_term(out[0]));
  }
}

std::vector<std::string> rule_ids(const Trace& tr) {
  std::vector<std::string> out;
  for (const Step& s : tr.steps) out.push_back(s.rule_id);
  return out;
}

// One root step of the les system by rule id.
Step les_root_step(const std::string& rule_id, const TermPtr& t) {
  const Rule* r = les_system().find_rule(rule_id);
  REQUIRE(r != nullptr);
  std::vector<TermPtr> out = r->apply_root(t);
  REQUIRE_MESSAGE(!out.empty(), rule_id, " does not apply to ", print_term(t));
  return Step{rule_id, {}, 0, out[0]};
}

}  // namespace

TEST_CASE("inner system sinks jumps towards occurrences") {
  RewriteSystem in = inner_system();
  CHECK(in.rules.size() == 4);
  CHECK(in.axioms.size() == 1);

  rule_case(in, "in1", "(\\y.z)[x/a]", "\\y.z[x/a]");
  rule_case(in, "in1", "(\\y.y)[y/a]", "\\w.w[y/a]");
  rule_case(in, "in2", "(z b)[x/a]", "z[x/a] b");
  rule_case(in, "in2", "(z x)[x/a]", "");
  rule_case(in, "in3", "(z x)[x/a]", "z x[x/a]");
  rule_case(in, "in3", "(x z)[x/a]", "");
  rule_case(in, "in3", "(z b)[x/a]", "");
  rule_case(in, "in4", "z[y/x][x/a]", "z[y/x[x/a]]");
  rule_case(in, "in4", "x[y/x'][x/a]", "");

  // a jump used on both sides of an application is inner-normal
  CHECK(is_normal_form(in, T("(x (\\y.x))[x/a]")));
  NormResult n = normalize(in, T("((z b) x)[x/a]"));
  CHECK(n.complete);
  CHECK(print_term(n.term()) == "z b x[x/a]");
}

TEST_CASE("outer system floats jumps to the top") {
  RewriteSystem out = outer_system();
  CHECK(out.rules.size() == 4);

  rule_case(out, "out1", "\\y.z[x/a]", "(\\y.z)[x/a]");
  rule_case(out, "out1", "\\y.z[x/y]", "");
  rule_case(out, "out2", "z[x/a] b", "(z b)[x/a]");
  rule_case(out, "out2", "x'[x/a] x", "(x' x)[w/a]");
  rule_case(out, "out3", "z (b[x/a])", "(z b)[x/a]");
  rule_case(out, "out3", "x (x'[x/a])", "(x x')[w/a]");
  rule_case(out, "out4", "z[y/b[x/a]]", "z[y/b][x/a]");
  rule_case(out, "out4", "x[y/b[x/a]]", "x[y/b][w/a]");

  NormResult n = normalize(out, T("\\y.(z[x/a] b)"));
  CHECK(n.complete);
  CHECK(print_term(n.term()) == "(\\y.z b)[x/a]");
  CHECK(rule_ids(n.trace) == std::vector<std::string>{"out2", "out1"});
}

TEST_CASE("les propagates substitutions by occurrence") {
  RewriteSystem les = les_system();
  CHECK(les.rules.size() == 9);

  rule_case(les, "B", "(\\x.x) y", "x[x/y]");
  rule_case(les, "B", "(\\x.x)[z/w] y", "");  // no action at a distance
  rule_case(les, "var", "x[x/u]", "u");
  rule_case(les, "var", "(x y)[x/u]", "");
  rule_case(les, "w", "z[x/u]", "z");
  rule_case(les, "app_l", "(x b)[x/u]", "x[x/u] b");
  rule_case(les, "app_l", "(x x)[x/u]", "");
  rule_case(les, "app_r", "(b x)[x/u]", "b x[x/u]");
  rule_case(les, "app_both", "(x x)[x/u]", "x[x/u] x[x/u]");
  rule_case(les, "app_both", "(x b)[x/u]", "");
  rule_case(les, "lam", "(\\y.x)[x/u]", "\\y.x[x/u]");
  rule_case(les, "comp1", "z[y/x][x/u]", "z[y/x[x/u]]");
  rule_case(les, "comp2", "x[y/x][x/u]", "x[y/x[x/u]][x/u]");
  rule_case(les, "comp2", "z[y/x][x/u]", "");
  // the inner copy of the content must not be captured
  rule_case(les, "comp2", "x[y/x][x/x z]", "w[y/x[x/x z]][w/x z]");

  NormResult n = normalize(les, T("(\\x.x x) y"));
  CHECK(n.complete);
  CHECK(print_term(n.term()) == "y y");
  CHECK(rule_ids(n.trace) == std::vector<std::string>{"B", "app_both", "var", "var"});
}

TEST_CASE("permutative calculus permutes arguments") {
  RewriteSystem perm = permutative_system();
  CHECK(perm.universe == Universe::Pure);
  rule_case(perm, "u_hat", "z ((\\x.x) a)", "(\\x.z x) a");
  rule_case(perm, "u_hat", "z ((\\x.y) a)", "");
  rule_case(perm, "u_hat", "x ((\\x.x) a)", "(\\w.x w) a");

  RewriteSystem variant = permutative_system(true);
  rule_case(variant, "u_hat", "z ((\\x.y) a)", "(\\x.z y) a");
  rule_case(variant, "u_hat", "z ((\\x.x) a)", "");

  CHECK(print_term(normalize(perm, T("(\\x.x) y")).term()) == "y");
}

TEST_CASE("structural calculus modulo the permutation theory") {
  RewriteSystem sys = structural_modulo_system();
  CHECK(sys.rules.size() == 5);
  CHECK(sys.axioms.size() == 8);
  CHECK(sys.find_rule("u") != nullptr);
}

TEST_CASE("calculi are built by name") {
  CHECK(calculus_names().size() == 12);
  for (const std::string& name : calculus_names()) CHECK(build_calculus(name).name == name);
  CHECK_THROWS_AS(build_calculus("nope"), TermError);
}

TEST_CASE("les root steps embed into the structural calculus with inner moves") {
  struct Row {
    const char* rule;
    const char* term;
    std::vector<std::string> path;
  };
  const std::vector<Row> rows = {
      {"B", "(\\x.x) y", {"dB"}},
      {"var", "x[x/u]", {"d"}},
      {"w", "z[x/u]", {"w"}},
      {"lam", "(\\y.x)[x/u]", {"in1"}},
      {"app_l", "(x b)[x/u]", {"in2"}},
      {"app_r", "(b x)[x/u]", {"in3"}},
      {"comp1", "z[y/x][x/u]", {"in4"}},
      {"app_both", "(x x)[x/u]", {"c", "in2", "in3"}},
      {"comp2", "x[y/x][x/u]", {"c", "in4"}},
  };
  for (const Row& row : rows) {
    TermPtr t = T(row.term);
    Step step = les_root_step(row.rule, t);
    SimulationResult sim = simulate_les_step(t, step, 6);
    INFO(row.rule, " on ", row.term);
    REQUIRE_MESSAGE(sim.ok, sim.detail);
    std::vector<std::string> sorted = sim.rule_ids, want = row.path;
    std::sort(sorted.begin(), sorted.end());
    std::sort(want.begin(), want.end());
    CHECK(sorted == want);
  }

  // an unreachable target fails with a reason
  SimulationResult bad = simulate_les_step(T("z[x/u]"), Step{"w", {}, 0, T("q q")}, 3);
  CHECK(!bad.ok);
  CHECK(!bad.detail.empty());
}
