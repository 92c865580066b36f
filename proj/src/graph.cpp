#include "msc/graph.hpp"

#include <string>

namespace msc {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw InvalidArgument("graph order " + std::to_string(n) + " outside 0.." +
                          std::to_string(kMaxVertices));
  adj_.resize(n);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    require_vertex(u, "edge endpoint");
    require_vertex(v, "edge endpoint");
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    if (!adj_[u].contains(v)) ++m_;
    adj_[u].insert(v);
    adj_[v].insert(u);
  }
}

bool Graph::adjacent(int u, int v) const {
  return is_vertex(u) && adj_[u].contains(v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::require_subset(const VertexSet& s, const char* what) const {
  if (!s.is_subset_of(vertices()))
    throw InvalidArgument(std::string(what) + " " + s.to_string() +
                          " is not a subset of the " + std::to_string(n_) + " vertices");
}

void Graph::require_vertex(int v, const char* what) const {
  if (!is_vertex(v))
    throw InvalidArgument(std::string(what) + " " + std::to_string(v) + " outside 0.." +
                          std::to_string(n_ - 1));
}

VertexSet Deletion::map_set(const VertexSet& original) const {
  VertexSet out;
  for (int v : original)
    if (v < static_cast<int>(from_original.size()) && from_original[v] >= 0)
      out.insert(from_original[v]);
  return out;
}

VertexSet Deletion::unmap_set(const VertexSet& relabeled) const {
  VertexSet out;
  for (int v : relabeled) out.insert(to_original.at(v));
  return out;
}

Deletion delete_vertices(const Graph& g, const VertexSet& removed) {
  g.require_subset(removed, "deleted set");
  Deletion d;
  d.from_original.assign(g.order(), -1);
  for (int v = 0; v < g.order(); ++v) {
    if (removed.contains(v)) continue;
    d.from_original[v] = static_cast<int>(d.to_original.size());
    d.to_original.push_back(v);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (d.from_original[u] >= 0 && d.from_original[v] >= 0)
      edges.emplace_back(d.from_original[u], d.from_original[v]);
  d.graph = Graph(static_cast<int>(d.to_original.size()), edges);
  return d;
}

VertexSet neighborhood(const Graph& g, const VertexSet& w) {
  g.require_subset(w);
  VertexSet out;
  for (int v : w) out |= g.neighbors(v);
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
  return Graph(a.order() + b.order(), edges);
}

VertexSet component_of(const Graph& g, int v, const VertexSet& within) {
  VertexSet comp, frontier;
  comp.insert(v);
  frontier.insert(v);
  while (!frontier.empty()) {
    VertexSet next;
    for (int x : frontier) next |= g.neighbors(x);
    next &= within;
    next -= comp;
    comp |= next;
    frontier = next;
  }
  return comp;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet rest = g.vertices();
  while (!rest.empty()) {
    VertexSet comp = component_of(g, rest.first(), rest);
    rest -= comp;
    out.push_back(comp);
  }
  return out;
}

Distance distance(const Graph& g, int u, int v) {
  g.require_vertex(u);
  g.require_vertex(v);
  VertexSet seen, frontier;
  seen.insert(u);
  frontier.insert(u);
  for (int d = 0; !frontier.empty(); ++d) {
    if (frontier.contains(v)) return Distance::finite(d);
    VertexSet next;
    for (int x : frontier) next |= g.neighbors(x);
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return Distance::infinite();
}

ComponentSplit split_by_sets(const Graph& g, const VertexSet& a, const VertexSet& b) {
  g.require_subset(a, "set A");
  g.require_subset(b, "set B");
  ComponentSplit split;
  for (const VertexSet& comp : connected_components(g)) {
    bool meets_a = comp.intersects(a), meets_b = comp.intersects(b);
    if (meets_a && meets_b)
      split.part_ab |= comp;
    else if (meets_a)
      split.part_a |= comp;
    else if (meets_b)
      split.part_b |= comp;
    else
      split.part_star |= comp;
  }
  return split;
}

}  // namespace msc
