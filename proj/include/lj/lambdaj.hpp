#pragma once
// The structural lambda-calculus: beta at a distance (dB) plus the jump
// subsystem {w, d, c}, the lifting rule u, and the composed systems used
// throughout (plain, modulo o, modulo obox, modulo the unsafe theory n).

#include <optional>
#include <vector>

#include "lj/rewrite.hpp"
#include "lj/term.hpp"

namespace lj {

// Individual rules (also usable to assemble custom systems):
//   dB : (\x.t)L u -> t[x/u]L       (L a stack of jumps; new jump innermost)
//   w  : t[x/u] -> t                (x has no occurrence in t)
//   d  : t[x/u] -> t{x/u}           (exactly one occurrence)
//   c  : t[x/u] -> t'[x/u][y/u]     (n >= 2 occurrences; t' renames a proper,
//                                    non-empty subset of them to a fresh y;
//                                    one result per subset)
//   u  : B[t[x/u]] -> B[t][x/u]     (B crosses at least one argument or
//                                    content edge; the jump is void; binders
//                                    scoping the jump stay out of its content)
//   beta: (\x.t)L u -> t{x/u}L      (plain beta, used by the pure calculus)
// The deterministic strategy resolves c by keeping the leftmost occurrence on
// the old name and renaming the rest.
Rule rule_dB();
Rule rule_w();
Rule rule_d();
Rule rule_c();
Rule rule_u();
Rule rule_beta();

// Systems. The names double as CLI calculus identifiers.
//   beta            pure lambda-calculus, plain beta
//   lambdaj         {dB, w, d, c}
//   lambdaj_o       {dB, w, d, c} modulo o
//   lambdaj_obox    {dB, w, d, c} modulo obox
//   lambdaj_n       {dB, w, d, c} modulo the unsafe theory n
//   lambdaj_obox_u  {dB, w, d, c, u} modulo obox
//   j               {w, d, c} (the jump subsystem alone)
//   nogc            {dB, d, c} (no erasure)
RewriteSystem beta_system();
RewriteSystem lambdaj_system();
RewriteSystem lambdaj_o_system();
RewriteSystem lambdaj_obox_system();
RewriteSystem lambdaj_n_system();
RewriteSystem lambdaj_obox_u_system();
RewriteSystem j_system();
RewriteSystem nogc_system();

// The jump normal form, computed directly: j(u[x/v]) = j(u){x/j(v)} and
// homomorphic elsewhere. Always jump-free.
TermPtr j_normal_form(const TermPtr& t);

// A {w,d,c} trace from t[x/u] (the root must be a jump) to body{x/u},
// witnessing full composition. Splits keep the leftmost occurrence.
Trace full_composition_witness(const TermPtr& t);

// One-step beta reducts of a pure term, and the parallel (simultaneous)
// reducts: every way of firing a set of non-overlapping beta redexes at once,
// including none (the term itself).
std::vector<TermPtr> beta_reducts(const TermPtr& t);
std::vector<TermPtr> parallel_reducts(const TermPtr& t);

// Drives a beta step through the jump calculus: dB on the same redex, then
// {w,d,c} to the jump normal form.
Trace simulate_beta(const TermPtr& t, const Position& redex);

// Rewrites a {dB,w,d,c} trace into one where every w comes last: repeatedly
// swaps a w step followed by a non-erasing step. Preserves both endpoints
// and the number of non-erasing steps.
Trace postpone_w(const RewriteSystem& sys, const Trace& trace);

}  // namespace lj
