#pragma once
// Projection from the jump calculus onto the memory calculus: used jumps are
// carried out by substitution, unused jumps stay behind as anonymous cells.
// The checker verifies, step class by step class, that reduction commutes
// with the projection.

#include <string>

#include "lj/rewrite.hpp"
#include "lj/term.hpp"

namespace lj {

// Gc(t[x/u]) = Gc(t){x/Gc(u)} when x occurs in t, Gc(t)[_/Gc(u)] otherwise;
// homomorphic on the other constructors. The image is a void term; pure
// terms are fixed points.
TermPtr gc_project(const TermPtr& t);

struct ProjectionCheck {
  bool ok = false;
  std::string detail;  // what was checked, or why it failed
};

// Verifies that one step of the jump calculus projects correctly:
//   dB        the projections are joined by one or more {beta_v, dB_v} steps
//   w, d, c   the projections are joined by {h, u} steps modulo void o
//   u         likewise
// `budget` caps the search depth on the memory side.
ProjectionCheck check_projection_step(const TermPtr& before, const Step& step, int budget = 6);

// Verifies that one axiom move projects correctly: o-axioms land in the same
// void-o class, safe box axioms project to alpha-equal terms, and the unsafe
// box axioms are joined by {h, u} steps modulo void o in one direction or
// the other.
ProjectionCheck check_projection_axiom(const TermPtr& before, const TermPtr& after,
                                       const std::string& axiom_id, int budget = 6);

}  // namespace lj
