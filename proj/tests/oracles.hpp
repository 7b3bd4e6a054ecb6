#pragma once

// Slow, independent reference implementations used to check the library.
// Nothing here calls into the code under test beyond Graph's edge list.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "irrdom/graph.hpp"

namespace oracle {

constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max() / 4;

// Floyd-Warshall over the edge list.
inline std::vector<std::vector<std::uint32_t>> distances(const irrdom::Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, kInf));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
  return d;
}

inline std::uint32_t diameter(const std::vector<std::vector<std::uint32_t>>& d) {
  std::uint32_t best = 0;
  for (const auto& row : d)
    for (auto x : row) best = std::max(best, x);
  return best;
}

using Assignment = std::vector<std::optional<std::uint32_t>>;

// Distinct labels, exactly one 0 (extended) or no 0 (classical), labels at most
// the diameter, and every vertex at distance label from some labeled vertex.
inline bool valid(const std::vector<std::vector<std::uint32_t>>& d, const Assignment& a, bool extended = true) {
  const std::size_t n = d.size();
  const std::uint32_t diam = diameter(d);
  std::set<std::uint32_t> seen;
  for (const auto& l : a) {
    if (!l) continue;
    if (*l > diam || !seen.insert(*l).second) return false;
  }
  if (extended != seen.contains(0)) return false;
  for (std::size_t u = 0; u < n; ++u) {
    bool hit = false;
    for (std::size_t v = 0; v < n && !hit; ++v) hit = a[v] && d[v][u] == *a[v];
    if (!hit) return false;
  }
  return true;
}

// Every valid extended k-labeling, in the order produced by walking vertices
// 0..n-1 and trying labels ascending before "unlabeled".
inline std::vector<Assignment> all_labelings(const irrdom::Graph& g, std::size_t k) {
  auto d = distances(g);
  const std::size_t n = g.order();
  const std::uint32_t diam = diameter(d);
  std::vector<Assignment> out;
  Assignment a(n);
  std::vector<bool> used(diam + 1, false);
  auto rec = [&](auto&& self, std::size_t v, std::size_t placed) -> void {
    if (placed == k) {
      if (valid(d, a)) out.push_back(a);
      return;
    }
    if (v == n || n - v < k - placed) return;
    for (std::uint32_t l = 0; l <= diam; ++l) {
      if (used[l]) continue;
      used[l] = true;
      a[v] = l;
      self(self, v + 1, placed + 1);
      a[v].reset();
      used[l] = false;
    }
    self(self, v + 1, placed);
  };
  rec(rec, 0, 0);
  return out;
}

// Minimum k with a valid extended labeling, or nullopt.
inline std::optional<std::size_t> gamma(const irrdom::Graph& g) {
  const std::size_t cap = std::min<std::size_t>(g.order(), diameter(distances(g)) + 1);
  for (std::size_t k = 1; k <= cap; ++k)
    if (!all_labelings(g, k).empty()) return k;
  return std::nullopt;
}

// Starter levels: 0 invalid, 1 starter, 2 strong, 3 skew.
inline int starter_level(std::uint32_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs) {
  if (n < 3 || pairs.size() != (n - 1) / 2) return 0;
  std::vector<int> elem(n, 0), diff(n, 0), sum(n, 0), pmsum(n, 0);
  for (auto [a, b] : pairs) {
    if (a == 0 || b == 0 || a >= n || b >= n) return 0;
    ++elem[a];
    ++elem[b];
    ++diff[(a + n - b) % n];
    ++diff[(b + n - a) % n];
    std::uint32_t s = (a + b) % n;
    ++sum[s];
    ++pmsum[s];
    ++pmsum[(n - s) % n];
  }
  for (std::uint32_t x = 1; x < n; ++x)
    if (elem[x] != 1 || diff[x] != 1) return 0;
  bool strong = sum[0] == 0;
  for (std::uint32_t x = 1; x < n; ++x) strong = strong && sum[x] <= 1;
  if (!strong) return 1;
  bool skew = pmsum[0] == 0;
  for (std::uint32_t x = 1; x < n; ++x) skew = skew && pmsum[x] == 1;
  return skew ? 3 : 2;
}

// Best starter level reachable in Z_n by trying every pairing.
inline int best_starter_level(std::uint32_t n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  std::vector<bool> used(n, false);
  int best = 0;
  auto rec = [&](auto&& self) -> void {
    std::uint32_t first = 1;
    while (first < n && used[first]) ++first;
    if (first == n) {
      best = std::max(best, starter_level(n, pairs));
      return;
    }
    used[first] = true;
    for (std::uint32_t b = first + 1; b < n && best < 3; ++b) {
      if (used[b]) continue;
      used[b] = true;
      pairs.emplace_back(first, b);
      self(self);
      pairs.pop_back();
      used[b] = false;
    }
    used[first] = false;
  };
  rec(rec);
  return best;
}

}  // namespace oracle
