#pragma once
// Named verification suites over the calculi: each suite enumerates its
// corpus, checks one family of theorems at desk scale, and returns structured
// verdicts. The command-line driver renders them as JSON; the acceptance
// binary aggregates them into its criteria.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace lj {

struct Verdict {
  std::string id;              // stable check identifier, e.g. "fc/witness"
  std::string status;          // "pass", "fail", or "inconclusive"
  std::string detail;          // counts and thresholds, human-readable
  std::string counterexample;  // printable witness for a failure, else empty
  long long millis = 0;        // wall time of the phase that produced it
};

struct SuiteResult {
  std::string suite;
  std::map<std::string, std::string> params;  // corpus sizes, pools, caps, seeds
  std::vector<Verdict> verdicts;

  bool passed() const;        // every verdict "pass"
  bool inconclusive() const;  // no failure, but some verdict "inconclusive"
};

struct SuiteOptions {
  int max_size = -1;         // corpus size bound; -1 = the suite's default
  unsigned seed = 2026;      // for sampled corpora
  size_t state_cap = 50000;  // exploration / certification budget
  size_t class_cap = 100000; // equivalence-class budget
  int budget = 6;            // step budget for reachability witnesses
  int trace_count = 1000;    // random traces for the postponement check
};

// fc, j-confluence, measures, bisim-o, bisim-void, bisim-sigmahat, perm,
// guerrini, psn, projection, inner, outer, les-sim, diamond, cr-modulo.
const std::vector<std::string>& suite_names();

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt = {});

}  // namespace lj
