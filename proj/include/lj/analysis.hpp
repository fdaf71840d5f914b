#pragma once
// Reduction-graph analysis modulo an equational theory: exhaustive
// exploration, termination certificates, longest-path heights, bisimulation
// checking, divergence detection, and deterministic term enumeration.
//
// An Analyzer wraps one rewriting system and memoizes everything by the
// alpha-canonical key of a class representative, so repeated questions about
// overlapping reduction graphs are answered once.

#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lj/rewrite.hpp"
#include "lj/term.hpp"

namespace lj {

// ---------------------------------------------------------------------------
// Term enumeration

// All terms of size 1..max_size, alpha-canonically: binders are named b0,
// b1, ... by binding depth, variables draw from the free-name pool and the
// binders in scope. Distinct results are pairwise non-alpha-equivalent, and
// every alpha-class with such free names is hit exactly once. Pool names
// must not look like binders (b followed by digits). An empty pool
// enumerates closed terms.
std::vector<TermPtr> enumerate_terms(int max_size, Universe universe,
                                     const std::vector<std::string>& free_names);

// A pseudo-random term of size exactly target_size (pool must be nonempty).
TermPtr random_term(std::mt19937& rng, int target_size, Universe universe,
                    const std::vector<std::string>& free_names);

// ---------------------------------------------------------------------------
// Exploration

struct ExploreLimits {
  size_t max_states = 50000;
  int max_depth = 30;
};

struct ExploreEdge {
  int from = 0;
  int to = 0;
  std::string rule_id;
};

struct ExploreResult {
  std::vector<TermPtr> states;  // class canonicals; index 0 is the start
  std::vector<ExploreEdge> edges;
  bool complete = true;  // false when a cap cut the search short
  std::vector<int> normal_states() const;  // states with no outgoing edge
};

struct SnCertificate {
  enum class Status { Proven, CycleFound, Capped } status = Status::Capped;
  size_t states = 0;            // classes visited
  std::vector<TermPtr> cycle;   // on CycleFound: path from the start into and
                                // around the cycle (last state repeats an
                                // earlier one; a self-loop repeats its
                                // predecessor)
};

struct DivergenceResult {
  bool found = false;
  std::string kind;             // "self-embedding" or "cycle"
  std::vector<TermPtr> path;    // class canonicals from the seed to the hit
  TermPtr witness;              // the member containing the seed, or the
                                // state where the cycle closes
};

struct BisimViolation {
  TermPtr from_member;  // the member with the unmatched step
  Step step;
  TermPtr other_member;  // an equivalent member that cannot answer it
};

class Analyzer {
 public:
  explicit Analyzer(RewriteSystem sys, size_t class_cap = 100000);
  ~Analyzer();  // out of line: infos_ holds an incomplete type here

  const RewriteSystem& system() const { return sys_; }

  // The canonical representative of t's equivalence class.
  TermPtr canon(const TermPtr& t);
  // All class members (alpha-canonical, deduplicated).
  std::vector<TermPtr> members(const TermPtr& t);
  // Successor classes of t's class: canonical representative plus the rule
  // that reaches it. Deduplicated by class, deterministic order.
  const std::vector<std::pair<TermPtr, std::string>>& successors(const TermPtr& t);

  // Breadth-first reduction graph from t's class.
  ExploreResult explore(const TermPtr& t, const ExploreLimits& limits = {});

  // Termination certificate: Proven when the reachable class graph is finite
  // and acyclic, CycleFound with a witness path otherwise, Capped when the
  // state budget ran out first.
  SnCertificate certify_sn(const TermPtr& t, size_t max_states = 50000);

  // The height of t's class: the length of the longest reduction. Throws
  // when a cycle is reachable or the budget is exhausted.
  long long eta(const TermPtr& t, size_t max_states = 100000);

  // Checks that every pair of reducts of t's class is joinable (within
  // `depth` further steps of each side). Returns an unjoinable pair.
  std::optional<std::pair<TermPtr, TermPtr>> local_confluence_gap(const TermPtr& t,
                                                                  int depth = 6);

  // Checks that the system's equational theory is a strong bisimulation at
  // t's class: every member must answer every step of every other member
  // into the same successor class. Throws if the class is capped.
  std::optional<BisimViolation> bisim_violation(const TermPtr& t);

  // Searches (depth-first) for a divergence certificate: a reachable cycle,
  // or a reachable class with a member containing the seed as a proper
  // subterm (up to alpha).
  DivergenceResult detect_divergence(const TermPtr& seed, int max_depth = 12,
                                     size_t max_states = 50000);

 private:
  struct ClassInfo;
  const ClassInfo& info(const TermPtr& t);

  RewriteSystem sys_;
  size_t class_cap_;
  std::map<std::string, int> index_;  // member key -> info index
  std::vector<ClassInfo> infos_;
  std::map<std::string, long long> eta_memo_;
  std::map<std::string, char> sn_memo_;  // 'S' proven, 'C' on a cycle
};

// ---------------------------------------------------------------------------
// Preservation of strong normalization

struct PsnReport {
  int candidates = 0;  // closed pure terms enumerated
  int beta_sn = 0;     // of which beta-strongly-normalizing
  int verified = 0;    // of which certified in both structural systems
  std::vector<TermPtr> failures;      // beta-SN but not certified SN
  std::vector<TermPtr> inconclusive;  // state budget exhausted somewhere
};

// Every closed pure term up to max_size that is beta-SN must stay SN in the
// structural calculus modulo obox, with and without the lifting rule u.
PsnReport psn_suite(int max_size, size_t state_cap = 50000);

}  // namespace lj
