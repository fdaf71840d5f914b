#pragma once
// Termination measures for the jump fragment and the satellite systems.

#include <cstdint>

#include "lj/multiset.hpp"
#include "lj/term.hpp"

namespace lj {

// Potential multiplicity M_x(t): an upper bound on how many copies of x
// substitution can create.
//   M_x(x) = 1, M_x(y) = 0
//   M_x(\y.t) = M_x(t)
//   M_x(t u) = M_x(t) + M_x(u)
//   M_x(u[y/v]) = M_x(u) + max(1, M_y(u)) * M_x(v)
std::int64_t potential_multiplicity(const TermPtr& t, const std::string& x);

// The decreasing multiset measure of the jump subsystem {w, d, c}:
//   dm(x) = {}          dm(\x.t) = dm(t)        dm(t u) = dm(t) + dm(u)
//   dm(u[x/v]) = {M_x(u)} + dm(u) + max(1, M_x(u)) . dm(v)
// where "." scales elements and "+" is additive union. Every w, d, or c step
// anywhere in a term strictly decreases it in the multiset order.
Multiset<std::int64_t> j_measure(const TermPtr& t);

// Measures for the inner and outer jump-propagation systems. Both are
// non-negative, invariant under the commutation axiom for independent jumps,
// and zero exactly on the respective normal shapes; every inner (resp. outer)
// step strictly decreases the respective measure.
std::int64_t inner_measure(const TermPtr& t);
std::int64_t outer_measure(const TermPtr& t);

}  // namespace lj
