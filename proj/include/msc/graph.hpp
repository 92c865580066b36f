#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "msc/vertex_set.hpp"

namespace msc {

using Edge = std::pair<int, int>;

/**
 * Immutable simple undirected graph on the vertices 0..n-1 (n <= 128).
 *
 * Adjacency is stored as one VertexSet per vertex. Construction validates
 * the edge list: self-loops and out-of-range endpoints are rejected,
 * repeated edges collapse.
 */
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  int edge_count() const { return m_; }

  const VertexSet& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return adj_.at(v).size(); }
  bool adjacent(int u, int v) const;

  VertexSet vertices() const { return VertexSet::prefix(n_); }

  /// Edges (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool is_vertex(int v) const { return v >= 0 && v < n_; }
  /// Throws InvalidArgument unless `s` only holds vertices of this graph.
  void require_subset(const VertexSet& s, const char* what = "vertex set") const;
  void require_vertex(int v, const char* what = "vertex") const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
};

/**
 * Result of deleting a vertex set: the induced subgraph on the survivors with
 * an order-preserving compact relabeling. `to_original[i]` is the old label
 * of new vertex i; `from_original[v]` is the new label of v or -1 if v was
 * deleted.
 */
struct Deletion {
  Graph graph;
  std::vector<int> to_original;
  std::vector<int> from_original;

  /// Image of a set of original labels; deleted members are dropped.
  VertexSet map_set(const VertexSet& original) const;
  /// Original labels of a set of new labels.
  VertexSet unmap_set(const VertexSet& relabeled) const;
};

Deletion delete_vertices(const Graph& g, const VertexSet& removed);

/// Open neighborhood N(W): every vertex adjacent to some member of W.
VertexSet neighborhood(const Graph& g, const VertexSet& w);

/// Vertices of `b` are shifted by a.order(); no edges between the parts.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Components ordered by their smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// The connected component of `v` inside the vertex subset `within`.
VertexSet component_of(const Graph& g, int v, const VertexSet& within);

class Distance {
 public:
  static Distance infinite() { return Distance(-1); }
  static Distance finite(int d) { return Distance(d); }

  bool is_finite() const { return value_ >= 0; }
  /// Precondition: is_finite().
  int value() const { return value_; }

  std::string to_string() const { return is_finite() ? std::to_string(value_) : "inf"; }

  friend bool operator==(const Distance&, const Distance&) = default;

 private:
  explicit Distance(int v) : value_(v) {}
  int value_;
};

Distance distance(const Graph& g, int u, int v);

/// The four unions of components of G: those meeting only A, only B, both,
/// or neither.
struct ComponentSplit {
  VertexSet part_a;
  VertexSet part_b;
  VertexSet part_ab;
  VertexSet part_star;
};

ComponentSplit split_by_sets(const Graph& g, const VertexSet& a, const VertexSet& b);

}  // namespace msc
