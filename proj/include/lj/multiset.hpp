#pragma once
// Finite multisets over a totally ordered element type, with the multiset
// (Dershowitz-Manna) well-founded order. For totally ordered elements the DM
// order coincides with the lexicographic order on the descending element
// sequences, where a proper prefix is smaller: {1,1} > {1}, {0} > {}, and
// {2} > {1,1,1,1}.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lj {

template <typename T>
struct Multiset {
  std::map<T, std::int64_t> count;  // only strictly positive counts are stored

  void add(const T& x, std::int64_t k = 1) {
    if (k == 0) return;
    auto it = count.find(x);
    std::int64_t next = (it == count.end() ? 0 : it->second) + k;
    if (next == 0)
      count.erase(x);
    else
      count[x] = next;
  }

  bool empty() const { return count.empty(); }

  std::int64_t total() const {
    std::int64_t n = 0;
    for (const auto& [_, k] : count) n += k;
    return n;
  }

  bool operator==(const Multiset& other) const { return count == other.count; }

  // Additive union: multiplicities sum.
  Multiset& join(const Multiset& other) {
    for (const auto& [x, k] : other.count) add(x, k);
    return *this;
  }

  // Per-element scalar multiplication: n * {a1, ..., ak} = {n*a1, ..., n*ak};
  // multiplicities are unchanged, and n * {} = {}.
  Multiset scaled(std::int64_t n) const {
    Multiset out;
    for (const auto& [x, k] : count) out.add(x * n, k);
    return out;
  }

  std::vector<T> sorted_desc() const {
    std::vector<T> out;
    for (auto it = count.rbegin(); it != count.rend(); ++it)
      out.insert(out.end(), static_cast<size_t>(it->second), it->first);
    return out;
  }
};

// Strict multiset order m > n.
template <typename T>
bool dm_greater(const Multiset<T>& m, const Multiset<T>& n) {
  std::vector<T> a = m.sorted_desc();
  std::vector<T> b = n.sorted_desc();
  size_t k = std::min(a.size(), b.size());
  for (size_t i = 0; i < k; ++i) {
    if (b[i] < a[i]) return true;
    if (a[i] < b[i]) return false;
  }
  return a.size() > b.size();
}

// Direct form of the DM definition, kept as an independent cross-check:
// m > n iff m != n and every element with more copies in n than in m is
// dominated by a strictly larger element with more copies in m.
template <typename T>
bool dm_greater_slow(const Multiset<T>& m, const Multiset<T>& n) {
  if (m == n) return false;
  for (const auto& [x, kn] : n.count) {
    auto it = m.count.find(x);
    std::int64_t km = it == m.count.end() ? 0 : it->second;
    if (kn <= km) continue;
    bool dominated = false;
    for (const auto& [y, kmy] : m.count) {
      if (!(x < y)) continue;
      auto jn = n.count.find(y);
      std::int64_t kny = jn == n.count.end() ? 0 : jn->second;
      if (kmy > kny) {
        dominated = true;
        break;
      }
    }
    if (!dominated) return false;
  }
  return true;
}

template <typename T>
std::string multiset_to_string(const Multiset<T>& m) {
  std::string out = "{";
  bool first = true;
  for (const T& x : m.sorted_desc()) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(x);
  }
  return out + "}";
}

}  // namespace lj
