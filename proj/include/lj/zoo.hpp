#pragma once
// Satellite calculi around the structural core: directed jump-permutation
// calculi (inner, outer), a calculus of explicit substitutions (les), the
// permutative lambda-calculus, and the structural calculus modulo the full
// permutation theory. All identifiers here double as CLI calculus names.

#include <string>
#include <vector>

#include "lj/rewrite.hpp"
#include "lj/term.hpp"

namespace lj {

// inner/CS: jumps sink towards their occurrences.
//   in1 (\y.t)[x/u]   -> \y.(t[x/u])
//   in2 (t v)[x/u]    -> t[x/u] v        (x not free in v)
//   in3 (t v)[x/u]    -> t (v[x/u])      (x only free in v)
//   in4 t[y/v][x/u]   -> t[y/(v[x/u])]   (x only free in v)
RewriteSystem inner_system();

// outer/CS: jumps float to the top.
//   out1 \y.(t[x/u])  -> (\y.t)[x/u]     (y not free in u)
//   out2 (t[x/u]) v   -> (t v)[x/u]
//   out3 t (v[x/u])   -> (t v)[x/u]
//   out4 t[y/(v[x/u])]-> t[y/v][x/u]
RewriteSystem outer_system();

// les/CS: explicit substitutions with occurrence-directed propagation.
//   B        (\x.t) u     -> t[x/u]           (no distance)
//   var      x[x/u]       -> u
//   w        t[x/u]       -> t                (x not free in t)
//   app_l    (t v)[x/u]   -> t[x/u] v         (x free in t only)
//   app_r    (t v)[x/u]   -> t (v[x/u])       (x free in v only)
//   app_both (t v)[x/u]   -> t[x/u] (v[x/u])  (x free in both)
//   lam      (\y.t)[x/u]  -> \y.(t[x/u])
//   comp1    t[y/v][x/u]  -> t[y/(v[x/u])]    (x free in v only)
//   comp2    t[y/v][x/u]  -> t[y/(v[x/u])][x/u] (x free in both)
RewriteSystem les_system();

// The permutative lambda-calculus on pure terms: beta plus the argument
// permutation u_hat : t ((\x.v) u) -> (\x.(t v)) u. By default the redex
// must be used (x free in v); the variant flips the condition to x not free
// in v.
RewriteSystem permutative_system(bool variant_unused = false);

// {dB, w, d, c, u} modulo the full permutation theory pi.
RewriteSystem structural_modulo_system();

// Builds any system by its CLI name: beta, lambdaj, lambdaj_o, lambdaj_obox,
// lambdaj_n, lambdaj_obox_u, void, inner, outer, les, permutative,
// structural_modulo.
RewriteSystem build_calculus(const std::string& name);
const std::vector<std::string>& calculus_names();

// The simulation target for les: the structural rules plus the inner
// permutation rules, modulo CS.
RewriteSystem les_target_system();

struct SimulationResult {
  bool ok = false;
  std::vector<std::string> rule_ids;  // rules along the found path, in order
  std::string detail;
};

// Expands one root step of les into a shortest path of les_target_system
// steps (modulo CS) joining the two endpoints. The atomic les rules map to
// single steps; app_both expands through {c, in2, in3} and comp2 through
// {c, in4} (with the commutation absorbed by CS).
SimulationResult simulate_les_step(const TermPtr& before, const Step& les_step, int budget = 6);

}  // namespace lj
