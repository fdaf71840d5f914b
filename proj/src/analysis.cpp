#include "lj/analysis.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <utility>

#include "lj/lambdaj.hpp"

namespace lj {

namespace {

bool looks_like_binder(const std::string& name) {
  if (name.empty() || name[0] != 'b') return false;
  for (size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
  }
  return true;
}

void check_pool(const std::vector<std::string>& free_names) {
  for (const auto& n : free_names) {
    if (n == void_binder || looks_like_binder(n)) {
      throw TermError("enumeration pool name '" + n + "' collides with generated binders");
    }
  }
}

std::string depth_binder(int depth) { return "b" + std::to_string(depth); }

}  // namespace

// ---------------------------------------------------------------------------
// Enumeration

std::vector<TermPtr> enumerate_terms(int max_size, Universe universe,
                                     const std::vector<std::string>& free_names) {
  check_pool(free_names);
  // Memo by (size, binding depth): the available names are a function of the
  // depth alone, so equal-depth subproblems share their results.
  std::map<std::pair<int, int>, std::vector<TermPtr>> memo;

  std::function<const std::vector<TermPtr>&(int, int)> gen =
      [&](int size, int depth) -> const std::vector<TermPtr>& {
    auto key = std::make_pair(size, depth);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    std::vector<TermPtr> out;
    if (size >= 1) {
      if (size == 1) {
        for (const auto& n : free_names) out.push_back(var(n));
        for (int d = 0; d < depth; ++d) out.push_back(var(depth_binder(d)));
      } else {
        // Abstractions.
        for (const auto& body : gen(size - 1, depth + 1)) {
          out.push_back(lam(depth_binder(depth), body));
        }
        // Applications.
        for (int ls = 1; ls <= size - 2; ++ls) {
          for (const auto& f : gen(ls, depth)) {
            for (const auto& a : gen(size - 1 - ls, depth)) out.push_back(app(f, a));
          }
        }
        // Jumps: named in the jump universe, anonymous in the void universe.
        if (universe != Universe::Pure) {
          bool anon = universe == Universe::Void;
          for (int bs = 1; bs <= size - 2; ++bs) {
            for (const auto& body : gen(bs, anon ? depth : depth + 1)) {
              for (const auto& content : gen(size - 1 - bs, depth)) {
                out.push_back(jump(body, anon ? void_binder : depth_binder(depth), content));
              }
            }
          }
        }
      }
    }
    return memo.emplace(key, std::move(out)).first->second;
  };

  std::vector<TermPtr> all;
  for (int s = 1; s <= max_size; ++s) {
    const auto& layer = gen(s, 0);
    all.insert(all.end(), layer.begin(), layer.end());
  }
  return all;
}

TermPtr random_term(std::mt19937& rng, int target_size, Universe universe,
                    const std::vector<std::string>& free_names) {
  check_pool(free_names);
  if (free_names.empty()) throw TermError("random_term needs a nonempty name pool");
  if (target_size < 1) throw TermError("random_term needs a positive size");

  std::function<TermPtr(int, int)> build = [&](int size, int depth) -> TermPtr {
    if (size == 1) {
      size_t n = free_names.size() + static_cast<size_t>(depth);
      size_t pick = std::uniform_int_distribution<size_t>(0, n - 1)(rng);
      if (pick < free_names.size()) return var(free_names[pick]);
      return var(depth_binder(static_cast<int>(pick - free_names.size())));
    }
    std::vector<int> tags;  // 0 = lam, 1 = app, 2 = jump
    tags.push_back(0);
    if (size >= 3) {
      tags.push_back(1);
      if (universe != Universe::Pure) tags.push_back(2);
    }
    int tag = tags[std::uniform_int_distribution<size_t>(0, tags.size() - 1)(rng)];
    if (tag == 0) return lam(depth_binder(depth), build(size - 1, depth + 1));
    int left = std::uniform_int_distribution<int>(1, size - 2)(rng);
    if (tag == 1) return app(build(left, depth), build(size - 1 - left, depth));
    bool anon = universe == Universe::Void;
    TermPtr body = build(left, anon ? depth : depth + 1);
    return jump(body, anon ? void_binder : depth_binder(depth), build(size - 1 - left, depth));
  };
  return build(target_size, 0);
}

// ---------------------------------------------------------------------------
// Analyzer

struct Analyzer::ClassInfo {
  TermPtr canon;
  std::vector<TermPtr> members;
  bool complete = true;
  bool succ_done = false;
  std::vector<std::pair<TermPtr, std::string>> succ;
};

Analyzer::Analyzer(RewriteSystem sys, size_t class_cap)
    : sys_(std::move(sys)), class_cap_(class_cap) {}

Analyzer::~Analyzer() = default;

const Analyzer::ClassInfo& Analyzer::info(const TermPtr& t) {
  std::string key = term_key(t);
  auto it = index_.find(key);
  if (it != index_.end()) return infos_[static_cast<size_t>(it->second)];

  EqClass cls = equivalence_class(sys_.axioms, t, class_cap_);
  ClassInfo ci;
  ci.canon = cls.canonical();
  ci.members = std::move(cls.members);
  ci.complete = cls.complete;
  int idx = static_cast<int>(infos_.size());
  infos_.push_back(std::move(ci));
  for (const auto& m : infos_.back().members) index_[term_key(m)] = idx;
  index_[key] = idx;  // t itself may not be alpha-canonical
  return infos_[static_cast<size_t>(idx)];
}

TermPtr Analyzer::canon(const TermPtr& t) { return info(t).canon; }

std::vector<TermPtr> Analyzer::members(const TermPtr& t) { return info(t).members; }

const std::vector<std::pair<TermPtr, std::string>>& Analyzer::successors(const TermPtr& t) {
  info(t);
  int idx = index_.at(term_key(t));
  if (!infos_[static_cast<size_t>(idx)].succ_done) {
    // Copy the member list: computing reduct classes below may grow infos_.
    std::vector<TermPtr> mem = infos_[static_cast<size_t>(idx)].members;
    std::vector<std::pair<TermPtr, std::string>> out;
    std::set<std::string> seen;
    for (const auto& m : mem) {
      for (const auto& step : one_step_reducts(sys_, m)) {
        TermPtr c = canon(step.after);
        if (seen.insert(term_key(c)).second) out.emplace_back(c, step.rule_id);
      }
    }
    infos_[static_cast<size_t>(idx)].succ = std::move(out);
    infos_[static_cast<size_t>(idx)].succ_done = true;
  }
  return infos_[static_cast<size_t>(idx)].succ;
}

std::vector<int> ExploreResult::normal_states() const {
  std::set<int> with_out;
  for (const auto& e : edges) with_out.insert(e.from);
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(states.size()); ++i) {
    if (!with_out.count(i)) out.push_back(i);
  }
  return out;
}

ExploreResult Analyzer::explore(const TermPtr& t, const ExploreLimits& limits) {
  ExploreResult res;
  std::map<std::string, int> at;
  std::deque<std::pair<int, int>> queue;  // state index, depth

  TermPtr c0 = canon(t);
  res.states.push_back(c0);
  at[term_key(c0)] = 0;
  if (!info(t).complete) res.complete = false;
  queue.emplace_back(0, 0);

  while (!queue.empty()) {
    auto [i, depth] = queue.front();
    queue.pop_front();
    // Copy: computing reduct classes below can invalidate memo references.
    auto succ = successors(res.states[static_cast<size_t>(i)]);
    if (depth >= limits.max_depth) {
      if (!succ.empty()) res.complete = false;
      continue;
    }
    for (const auto& [next, rule] : succ) {
      std::string key = term_key(next);
      auto it = at.find(key);
      int j;
      if (it == at.end()) {
        if (res.states.size() >= limits.max_states) {
          res.complete = false;
          continue;
        }
        j = static_cast<int>(res.states.size());
        res.states.push_back(next);
        at[key] = j;
        if (!info(next).complete) res.complete = false;
        queue.emplace_back(j, depth + 1);
      } else {
        j = it->second;
      }
      res.edges.push_back({i, j, rule});
    }
  }
  return res;
}

SnCertificate Analyzer::certify_sn(const TermPtr& t, size_t max_states) {
  struct Frame {
    TermPtr node;
    std::string key;
    size_t next = 0;
  };
  std::vector<Frame> stack;
  std::map<std::string, int> color;  // 1 = on stack, 2 = finished this call
  size_t visited = 0;

  TermPtr c0 = canon(t);
  std::string k0 = term_key(c0);
  if (sn_memo_.count(k0)) return {SnCertificate::Status::Proven, 0, {}};
  visited = 1;
  color[k0] = 1;
  stack.push_back({c0, k0, 0});

  while (!stack.empty()) {
    const auto& succ = successors(stack.back().node);
    if (stack.back().next < succ.size()) {
      auto [next, rule] = succ[stack.back().next++];
      (void)rule;
      std::string key = term_key(next);
      if (sn_memo_.count(key)) continue;  // already proven terminating
      auto it = color.find(key);
      if (it != color.end() && it->second == 1) {
        // Back edge: unwind the stack from the first occurrence of `key`.
        SnCertificate cert{SnCertificate::Status::CycleFound, visited, {}};
        size_t from = 0;
        while (stack[from].key != key) ++from;
        for (size_t i = from; i < stack.size(); ++i) cert.cycle.push_back(stack[i].node);
        cert.cycle.push_back(next);
        return cert;
      }
      if (it != color.end()) continue;  // finished, no cycle below
      if (++visited > max_states) return {SnCertificate::Status::Capped, visited, {}};
      color[key] = 1;
      stack.push_back({next, key, 0});
    } else {
      color[stack.back().key] = 2;
      sn_memo_[stack.back().key] = 'S';
      stack.pop_back();
    }
  }
  return {SnCertificate::Status::Proven, visited, {}};
}

long long Analyzer::eta(const TermPtr& t, size_t max_states) {
  struct Frame {
    TermPtr node;
    std::string key;
    size_t next = 0;
    long long best = 0;
  };
  TermPtr c0 = canon(t);
  std::string k0 = term_key(c0);
  {
    auto it = eta_memo_.find(k0);
    if (it != eta_memo_.end()) return it->second;
  }

  std::vector<Frame> stack;
  std::set<std::string> gray;
  size_t visited = 1;
  gray.insert(k0);
  stack.push_back({c0, k0, 0});

  while (!stack.empty()) {
    const auto& succ = successors(stack.back().node);
    if (stack.back().next < succ.size()) {
      auto [next, rule] = succ[stack.back().next++];
      (void)rule;
      std::string key = term_key(next);
      auto it = eta_memo_.find(key);
      if (it != eta_memo_.end()) {
        stack.back().best = std::max(stack.back().best, it->second + 1);
        continue;
      }
      if (gray.count(key)) throw TermError("eta: the reduction graph has a cycle");
      if (++visited > max_states) throw TermError("eta: state budget exhausted");
      gray.insert(key);
      stack.push_back({next, key, 0});
    } else {
      Frame done = stack.back();
      stack.pop_back();
      gray.erase(done.key);
      eta_memo_[done.key] = done.best;
      if (!stack.empty()) stack.back().best = std::max(stack.back().best, done.best + 1);
    }
  }
  return eta_memo_.at(k0);
}

std::optional<std::pair<TermPtr, TermPtr>> Analyzer::local_confluence_gap(const TermPtr& t,
                                                                          int depth) {
  auto succ = successors(t);  // copied: reach() below grows the memo tables
  // Reachable class keys within `depth` steps of each peak side.
  auto reach = [&](const TermPtr& s) {
    std::set<std::string> seen{term_key(s)};
    std::deque<std::pair<TermPtr, int>> queue{{s, 0}};
    while (!queue.empty()) {
      auto [cur, d] = queue.front();
      queue.pop_front();
      if (d >= depth) continue;
      for (const auto& [next, rule] : successors(cur)) {
        (void)rule;
        if (seen.insert(term_key(next)).second) queue.emplace_back(next, d + 1);
      }
    }
    return seen;
  };
  std::vector<std::set<std::string>> sets;
  sets.reserve(succ.size());
  for (const auto& [s, rule] : succ) {
    (void)rule;
    sets.push_back(reach(s));
  }
  for (size_t i = 0; i < sets.size(); ++i) {
    for (size_t j = i + 1; j < sets.size(); ++j) {
      bool meet = false;
      for (const auto& k : sets[i]) {
        if (sets[j].count(k)) {
          meet = true;
          break;
        }
      }
      if (!meet) return std::make_pair(succ[i].first, succ[j].first);
    }
  }
  return std::nullopt;
}

std::optional<BisimViolation> Analyzer::bisim_violation(const TermPtr& t) {
  info(t);
  int idx = index_.at(term_key(t));
  if (!infos_[static_cast<size_t>(idx)].complete) {
    throw TermError("bisim_violation: equivalence class capped");
  }
  std::vector<TermPtr> mem = infos_[static_cast<size_t>(idx)].members;

  // For each member, its one-step reducts bucketed by reduct class.
  std::vector<std::vector<Step>> steps(mem.size());
  std::vector<std::map<std::string, size_t>> reachable(mem.size());  // key -> step index
  for (size_t i = 0; i < mem.size(); ++i) {
    steps[i] = one_step_reducts(sys_, mem[i]);
    for (size_t s = 0; s < steps[i].size(); ++s) {
      reachable[i].emplace(term_key(canon(steps[i][s].after)), s);
    }
  }
  for (size_t i = 0; i < mem.size(); ++i) {
    for (const auto& [key, s] : reachable[i]) {
      for (size_t j = 0; j < mem.size(); ++j) {
        if (!reachable[j].count(key)) {
          return BisimViolation{mem[i], steps[i][s], mem[j]};
        }
      }
    }
  }
  return std::nullopt;
}

DivergenceResult Analyzer::detect_divergence(const TermPtr& seed, int max_depth,
                                             size_t max_states) {
  // Breadth-first, so a shallow self-embedding is found before deep branches
  // are expanded. Cycles are recognized when a successor reappears on its own
  // ancestor chain (a revisit elsewhere is just a confluence diamond).
  struct Node {
    TermPtr term;
    std::string key;
    int parent;
    int depth;
  };
  std::vector<Node> nodes;
  std::map<std::string, int> at;
  std::deque<int> queue;

  // A class member that contains the seed as a proper subterm witnesses
  // self-embedding; sizes filter cheaply before the alpha comparison.
  auto embedding_witness = [&](const TermPtr& state) -> TermPtr {
    for (const auto& m : members(state)) {
      if (m->sz > seed->sz && has_proper_subterm(m, seed)) return m;
    }
    return nullptr;
  };
  auto chain = [&](int i) {
    std::vector<TermPtr> path;
    for (int k = i; k >= 0; k = nodes[static_cast<size_t>(k)].parent) {
      path.push_back(nodes[static_cast<size_t>(k)].term);
    }
    std::reverse(path.begin(), path.end());
    return path;
  };

  TermPtr c0 = canon(seed);
  nodes.push_back({c0, term_key(c0), -1, 0});
  at[nodes[0].key] = 0;
  queue.push_back(0);

  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    if (nodes[static_cast<size_t>(i)].depth >= max_depth) continue;
    auto succ = successors(nodes[static_cast<size_t>(i)].term);  // copy (memo may grow)
    for (const auto& [next, rule] : succ) {
      (void)rule;
      std::string key = term_key(next);
      auto seen = at.find(key);
      if (seen != at.end()) {
        for (int k = i; k >= 0; k = nodes[static_cast<size_t>(k)].parent) {
          if (nodes[static_cast<size_t>(k)].key == key) {
            DivergenceResult res;
            res.found = true;
            res.kind = "cycle";
            res.witness = next;
            res.path = chain(i);  // the repeated state appears at position k
            res.path.push_back(next);
            return res;
          }
        }
        continue;
      }
      if (nodes.size() >= max_states) return {};
      if (TermPtr w = embedding_witness(next)) {
        DivergenceResult res;
        res.found = true;
        res.kind = "self-embedding";
        res.witness = w;
        res.path = chain(i);
        res.path.push_back(next);
        return res;
      }
      int j = static_cast<int>(nodes.size());
      nodes.push_back({next, key, i, nodes[static_cast<size_t>(i)].depth + 1});
      at[key] = j;
      queue.push_back(j);
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Preservation of strong normalization

PsnReport psn_suite(int max_size, size_t state_cap) {
  PsnReport rep;
  Analyzer beta(beta_system());
  Analyzer with_u(lambdaj_obox_u_system());
  Analyzer without_u(lambdaj_obox_system());

  for (const auto& t : enumerate_terms(max_size, Universe::Pure, {})) {
    ++rep.candidates;
    SnCertificate base = beta.certify_sn(t, state_cap);
    if (base.status == SnCertificate::Status::Capped) {
      rep.inconclusive.push_back(t);
      continue;
    }
    if (base.status != SnCertificate::Status::Proven) continue;
    ++rep.beta_sn;

    SnCertificate a = without_u.certify_sn(t, state_cap);
    SnCertificate b = with_u.certify_sn(t, state_cap);
    if (a.status == SnCertificate::Status::Proven &&
        b.status == SnCertificate::Status::Proven) {
      ++rep.verified;
    } else if (a.status == SnCertificate::Status::Capped ||
               b.status == SnCertificate::Status::Capped) {
      rep.inconclusive.push_back(t);
    } else {
      rep.failures.push_back(t);
    }
  }
  return rep;
}

}  // namespace lj
