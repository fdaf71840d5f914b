#pragma once
// The equational theories: local axioms, named axiom sets, and the global
// (spine) characterizations used to cross-check the local presentations.
//
// Axioms are given as root transformations; the engine closes them under
// contexts and symmetry. Each local axiom returns at most one result. A side
// condition is enforced semantically when it protects a binding (the move
// would detach or retarget occurrences); when it merely avoids a name clash
// the implementation renames the offending bound name and proceeds.

#include <string>
#include <vector>

#include "lj/rewrite.hpp"
#include "lj/term.hpp"

namespace lj {

// Local axioms:
//   CS        t[x/s][y/v] ~ t[y/v][x/s]        (y not free in s, x not in v)
//   sigma1    \y.(t[x/s]) ~ (\y.t)[x/s]        (y not free in s)
//   sigma2    t[x/s] v ~ (t v)[x/s]            (x not free in v)
//   box1      (t v)[x/u] ~ t (v[x/u])          (x not in t, x free in v)
//   box2      t[y/v][x/u] ~ t[y/(v[x/u])]      (x not in t, x free in v)
//   box1u     box1 without "x free in v"       (may detach a needed box)
//   box2u     box2 without "x free in v"
//   sigmahat1 (\x.\y.t) u ~ \y.((\x.t) u)      (y not free in u)
//   sigmahat2 (\x.(t v)) u ~ (\x.t) u v        (x not free in v)
//   boxhat    (\x.(t v)) u ~ t ((\x.v) u)      (x not in t, x free in v)
const Equivalence& axiom(const std::string& id);
const std::vector<std::string>& axiom_ids();

// Named sets: none, cs {CS}, o {CS,sigma1,sigma2}, box {box1,box2},
// obox = o + box, n = o + {box1u,box2u}, sigmahat {sigmahat1,sigmahat2},
// pi = obox + {sigmahat1,sigmahat2,boxhat}. Anything else is read as a
// comma-separated list of axiom ids.
std::vector<Equivalence> axiom_set(const std::string& name);

// Global characterizations. A spine context is built from hole, \x.S, S t,
// and S[x/t], so a spine position is a chain of first-child edges. The
// forward direction lifts a jump from below to the top of the subterm it is
// applied to; backward pushes a top jump down. Both directions can yield
// several results (one per landing site).
//
// global_o moves jumps along spines only, requiring that no binder on the
// path is free in the content and that the body keeps every occurrence of
// the bound name (no occurrence may be left behind or newly caught).
Equivalence global_o();

// global_obox also moves jumps across argument and content edges, provided
// the bound name occurs (a used jump follows its occurrences); jumps whose
// name does not occur move along spines only. Binders that scope the
// crossing point must stay disjoint from the content's free variables.
Equivalence global_obox();

// Same-class tests under the global presentations (closure over all
// positions, both directions).
bool global_o_equal(const TermPtr& t, const TermPtr& u, size_t cap = 100000);
bool global_obox_equal(const TermPtr& t, const TermPtr& u, size_t cap = 100000);

}  // namespace lj
