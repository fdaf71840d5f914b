#pragma once
// Core term representation for the structural lambda-calculus with jumps
// t[x/u], shared by the pure lambda-calculus (no jumps) and the memory
// calculus (anonymous "void" jumps t[_/u]).
//
// Terms are immutable shared trees; every operation is capture-avoiding and
// equality of terms always means alpha-equality.

#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace lj {

// Raised on violated preconditions (invalid positions, bad renames, ...).
struct TermError : std::logic_error {
  using std::logic_error::logic_error;
};

enum class Tag { Var, Lam, App, Jump };

// Which grammar a term (or rewrite system) lives in.
enum class Universe { Pure, Jump, Void };

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// Fields by tag:
//   Var : name
//   Lam : name = binder, a = body
//   App : a = function, b = argument
//   Jump: a = body, name = binder, b = content; prints a[name/b].
// The binder scopes the body only -- never the content.
// The reserved name "_" marks the anonymous binder of void jumps; it is
// rejected as a Var name and Lam binder, and no operation counts it as a
// variable, so "the binder has no occurrence in the body" is unforgeable.
struct Term {
  Tag tag;
  std::string name;
  TermPtr a;
  TermPtr b;
  std::set<std::string> fvs;  // free variables (computed on construction)
  int sz = 0;                 // number of constructors
};

inline const std::string void_binder = "_";

TermPtr var(const std::string& name);
TermPtr lam(const std::string& binder, TermPtr body);
TermPtr app(TermPtr fun, TermPtr arg);
TermPtr jump(TermPtr body, const std::string& binder, TermPtr content);

inline const std::set<std::string>& free_vars(const TermPtr& t) { return t->fvs; }
inline int size(const TermPtr& t) { return t->sz; }
inline bool is_anonymous(const TermPtr& t) {
  return t->tag == Tag::Jump && t->name == void_binder;
}
// A jump whose binder has no free occurrence in its body.
bool is_void_jump(const TermPtr& t);
// True when every constructor is allowed in the universe (Pure: no jumps;
// Void: every jump anonymous; Jump: no anonymous binders).
bool in_universe(const TermPtr& t, Universe u);

std::set<std::string> bound_vars(const TermPtr& t);
std::set<std::string> all_names(const TermPtr& t);

// |t|_x: number of free occurrences of x in t.
int multiplicity(const TermPtr& t, const std::string& x);
// |t|_G: summed over the set.
int multiplicity_set(const TermPtr& t, const std::set<std::string>& gamma);

// ---------------------------------------------------------------------------
// Positions: 1-based child indices. Lam body = 1; App fun = 1, arg = 2;
// Jump body = 1, content = 2. Root is the empty sequence.
using Position = std::vector<int>;

std::string position_to_string(const Position& p);
Position parse_position(const std::string& s);  // "1.2.1" or "" for root

TermPtr subterm_at(const TermPtr& t, const Position& p);
TermPtr replace_at(const TermPtr& t, const Position& p, const TermPtr& s);
std::vector<Position> positions(const TermPtr& t);  // pre-order
// pos_x(t): positions of the free occurrences of x, in pre-order.
std::vector<Position> free_positions(const TermPtr& t, const std::string& x);

// Classification of the context t[]_p: binding_set lists every binder name on
// the path (abstractions and jumps alike, the paper's bs); spine means the
// path uses only Lam-body / App-fun / Jump-body edges; boxed means it crosses
// at least one App-arg or Jump-content edge.
struct ContextInfo {
  TermPtr sub;
  std::set<std::string> binding_set;
  bool spine = false;
  bool boxed = false;
};
ContextInfo context_at(const TermPtr& t, const Position& p);

// Binders on the path that actually scope the subterm at p (a jump binder
// reached through its content edge does not). Used by capture checks.
std::set<std::string> scoping_binders_at(const TermPtr& t, const Position& p);

// ---------------------------------------------------------------------------
// Fresh names: base + counter (x, x1, x2, ...), never colliding with avoid.
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

// Capture-avoiding meta-substitution t{x/u}; the result is alpha-canonical.
TermPtr substitute(const TermPtr& t, const std::string& x, const TermPtr& u);
// Same, without the final canonicalization (for rule internals).
TermPtr subst_raw(const TermPtr& t, const std::string& x, const TermPtr& u);

// ren t{S: x->y}: replace exactly the free x-occurrences at S by y.
// Throws if some p in S is not a free occurrence of x.
TermPtr rename_at(const TermPtr& t, const std::set<Position>& S,
                  const std::string& x, const std::string& y);

// All t_[y]_x: rename_at over every S with 1 <= |S| <= n-1, n = |t|_x.
// Throws if n < 2 or y is not fresh for t (occurs free or bound).
std::vector<TermPtr> enumerate_splits(const TermPtr& t, const std::string& x,
                                      const std::string& y);

// ---------------------------------------------------------------------------
// Alpha-equality and canonical representatives.
bool alpha_eq(const TermPtr& t, const TermPtr& u);
// Deterministic renaming of every named binder to v0, v1, ... (pre-order,
// skipping free names of the whole term); free names untouched; "_" kept.
TermPtr alpha_canonical(const TermPtr& t);
// Unambiguous structural serialization of alpha_canonical(t); usable as a
// hash key: term_key(t) == term_key(u) iff alpha_eq(t, u).
std::string term_key(const TermPtr& t);
// Total order on terms (structural, compares tags then fields); combined with
// alpha_canonical it yields the class-canonical minimum.
int term_cmp(const TermPtr& a, const TermPtr& b);
inline bool term_lt(const TermPtr& a, const TermPtr& b) { return term_cmp(a, b) < 0; }

// Distinct subterms (by term_key), optionally excluding t itself.
std::vector<TermPtr> distinct_subterms(const TermPtr& t, bool proper);
// Does t contain a subterm alpha-equal to s (strictly below the root)?
bool has_proper_subterm(const TermPtr& t, const TermPtr& s);

}  // namespace lj
