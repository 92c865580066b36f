#pragma once

// Independent reference computations for the test suites. They only read
// the graph through order()/adjacent() and share no code with the library's
// algorithms.

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "msc/graph.hpp"

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;

inline std::vector<std::vector<bool>> matrix(const msc::Graph& g) {
  std::vector<std::vector<bool>> m(g.order(), std::vector<bool>(g.order(), false));
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v) m[u][v] = g.adjacent(u, v);
  return m;
}

/// Independent sets of the subgraph induced by `alive`, by extending
/// explicit vertex lists.
inline std::uint64_t independent_sets(const msc::Graph& g, const std::vector<int>& alive) {
  auto m = matrix(g);
  std::uint64_t count = 0;
  std::vector<int> chosen;
  auto rec = [&](auto&& self, std::size_t next) -> void {
    ++count;
    for (std::size_t i = next; i < alive.size(); ++i) {
      int v = alive[i];
      if (std::any_of(chosen.begin(), chosen.end(), [&](int c) { return m[c][v]; })) continue;
      chosen.push_back(v);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return count;
}

inline std::uint64_t independent_sets(const msc::Graph& g) {
  std::vector<int> all(g.order());
  for (int i = 0; i < g.order(); ++i) all[i] = i;
  return independent_sets(g, all);
}

inline std::uint64_t independent_sets_without(const msc::Graph& g, const std::set<int>& removed) {
  std::vector<int> alive;
  for (int v = 0; v < g.order(); ++v)
    if (!removed.count(v)) alive.push_back(v);
  return independent_sets(g, alive);
}

inline BigInt delta(const msc::Graph& g, const std::set<int>& a, const std::set<int>& b) {
  std::set<int> both = a;
  both.insert(b.begin(), b.end());
  return BigInt(independent_sets_without(g, a)) * independent_sets_without(g, b) -
         BigInt(independent_sets(g)) * independent_sets_without(g, both);
}

/// F(0) = 0, F(1) = 1.
inline BigInt fibonacci(int n) {
  BigInt a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    BigInt c = a + b;
    a = b;
    b = c;
  }
  return a;
}

/// L(0) = 2, L(1) = 1.
inline BigInt lucas(int n) {
  BigInt a = 2, b = 1;
  for (int i = 0; i < n; ++i) {
    BigInt c = a + b;
    a = b;
    b = c;
  }
  return a;
}

/// All-pairs shortest path lengths by Floyd-Warshall; -1 for unreachable.
inline std::vector<std::vector<int>> distances(const msc::Graph& g) {
  const int n = g.order();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (int v = 0; v < n; ++v)
      if (g.adjacent(u, v)) d[u][v] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (int& x : row)
      if (x == inf) x = -1;
  return d;
}

/// Every vertex sequence satisfying the induced A-B-path definition, found by
/// enumerating all sequences of distinct vertices and testing the definition
/// literally. Sorted lexicographically.
inline std::vector<std::vector<int>> induced_paths(const msc::Graph& g, const std::set<int>& a,
                                                   const std::set<int>& b) {
  auto m = matrix(g);
  const int n = g.order();
  std::vector<std::vector<int>> out;
  std::vector<int> seq;
  std::vector<bool> used(n, false);
  auto satisfies = [&] {
    const int k = static_cast<int>(seq.size());
    int in_a = 0, in_b = 0;
    for (int x : seq) {
      in_a += a.count(x);
      in_b += b.count(x);
    }
    if (in_a != 1 || in_b != 1 || !a.count(seq.front()) || !b.count(seq.back())) return false;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (m[seq[i]][seq[j]] != (j - i == 1)) return false;
    return true;
  };
  auto rec = [&](auto&& self) -> void {
    if (!seq.empty() && satisfies()) out.push_back(seq);
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      seq.push_back(v);
      self(self);
      seq.pop_back();
      used[v] = false;
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

/// Parity graph by the definition, via the literal induced-path oracle.
inline bool parity_graph(const msc::Graph& g) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      bool even = false, odd = false;
      for (const auto& p : induced_paths(g, {u}, {v})) ((p.size() - 1) % 2 ? odd : even) = true;
      if (even && odd) return false;
    }
  return true;
}

}  // namespace oracle
