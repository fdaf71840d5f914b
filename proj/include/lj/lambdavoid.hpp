#pragma once
// The memory calculus: every jump is anonymous (a pure memory cell), beta
// substitutes used arguments and parks unused ones in a void jump, and the
// hydra rule lets a cell spawn any bounded list of fragments of its content.
// Reduction is taken modulo the void restriction of o (jumps commute and
// move along spines; boxes never fire because an anonymous name never
// occurs).

#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lj/multiset.hpp"
#include "lj/rewrite.hpp"
#include "lj/term.hpp"

namespace lj {

// beta_v : (\x.t)L u -> t{x/u}L     (x occurs in t; L a stack of void jumps)
// dB_v   : (\x.t)L u -> t[_/u]L     (x does not occur in t)
Rule rule_beta_void();
Rule rule_dB_void();

// h : t[_/u] -> t[_/u1]...[_/un] with u1 innermost, 0 <= n <= cap, where each
// ui is a proper subterm of u whose free variables all occur free in u.
// Lists are ordered and may repeat fragments; n = 0 erases the cell.
Rule rule_h(int cap = 3);

// {beta_v, dB_v, h, u} modulo the void restriction of o.
RewriteSystem void_system(int h_cap = 3);

// The surface of t relative to the names gamma bound above it: arguments
// stay whole, lambdas extend gamma, and a memory cell stays on the surface
// only if its content touches gamma (otherwise the cell is detachable and
// vanishes from the surface).
TermPtr trunk(const TermPtr& t, const std::set<std::string>& gamma = {});

// Surface strong normalization: the head is walked structurally (arguments
// are not entered), and each detachable cell's content must satisfy the
// supplied strong-normalization oracle.
bool surface_sn(const TermPtr& t, const std::set<std::string>& gamma,
                const std::function<bool(const TermPtr&)>& sn);

// The surface measure: one <eta, size> pair per detachable cell, where eta
// scores the content via the supplied oracle; non-detachable cells
// contribute the measure of their content instead. Compared with dm_greater.
Multiset<std::pair<long long, long long>> surface_measure(
    const TermPtr& t, const std::set<std::string>& gamma,
    const std::function<long long(const TermPtr&)>& eta);

}  // namespace lj
