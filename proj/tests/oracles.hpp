#pragma once

// Test-only oracles, independent of the library's computation paths.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "rcc/rational.hpp"
#include "rcc/tree.hpp"

namespace oracles {

// Dense determinant of -Q(T) by fraction-free (Bareiss) elimination.
inline rcc::Int det_minus_q(const rcc::WeightedTree& t) {
  int n = t.size();
  if (n == 0) return 1;
  std::vector<std::vector<rcc::Int>> m(static_cast<size_t>(n),
                                       std::vector<rcc::Int>(static_cast<size_t>(n), 0));
  for (int v = 0; v < n; ++v) {
    m[v][v] = t.weight[v];
    for (int u : t.adj[v]) m[v][u] = -1;
  }
  rcc::Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int swap = -1;
      for (int r = k + 1; r < n; ++r)
        if (m[r][k] != 0) { swap = r; break; }
      if (swap < 0) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// All unlabeled trees on n vertices, each once, as parent vectors
// (parent[i] < i, parent[0] unused). Canonized by the minimal rooted
// encoding over all roots.
inline std::string rooted_code(const std::vector<std::vector<int>>& adj, int v,
                               int parent) {
  std::vector<std::string> kids;
  for (int u : adj[static_cast<size_t>(v)])
    if (u != parent) kids.push_back(rooted_code(adj, u, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (auto& k : kids) s += k;
  return s + ")";
}

inline std::string tree_code(const std::vector<std::vector<int>>& adj) {
  std::string best;
  for (size_t v = 0; v < adj.size(); ++v) {
    std::string c = rooted_code(adj, static_cast<int>(v), -1);
    if (best.empty() || c < best) best = c;
  }
  return best;
}

inline std::vector<std::vector<int>> tree_shapes(int n) {
  // parent arrays p[i] in [0, i) enumerate all shapes with repetition;
  // canonical codes pick one representative per isomorphism class
  std::vector<std::vector<int>> shapes;
  std::map<std::string, bool> seen;
  std::vector<int> parent(static_cast<size_t>(n), 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      std::vector<std::vector<int>> adj(static_cast<size_t>(n));
      for (int v = 1; v < n; ++v) {
        adj[static_cast<size_t>(v)].push_back(parent[static_cast<size_t>(v)]);
        adj[static_cast<size_t>(parent[static_cast<size_t>(v)])].push_back(v);
      }
      std::string code = tree_code(adj);
      if (!seen.count(code)) {
        seen[code] = true;
        shapes.push_back(parent);
      }
      return;
    }
    for (int p = 0; p < i; ++p) {
      parent[static_cast<size_t>(i)] = p;
      self(self, i + 1);
    }
  };
  if (n == 1) {
    shapes.push_back({0});
    return shapes;
  }
  rec(rec, 1);
  return shapes;
}

inline rcc::WeightedTree tree_from_shape(const std::vector<int>& parent,
                                         const std::vector<rcc::Weight>& w) {
  rcc::WeightedTree t;
  for (size_t i = 0; i < parent.size(); ++i) t.add_vertex(w[i]);
  for (size_t i = 1; i < parent.size(); ++i)
    t.add_edge(static_cast<int>(i), parent[i]);
  return t;
}

} // namespace oracles
