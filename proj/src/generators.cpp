#include "msc/generators.hpp"

#include <string>
#include <vector>

namespace msc {

namespace {

void require_size(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

}  // namespace

Graph path_graph(int n) {
  require_size(n >= 0, "path needs n >= 0");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  require_size(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  require_size(n >= 0, "complete graph needs n >= 0");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph complete_bipartite_graph(int a, int b) {
  require_size(a >= 0 && b >= 0, "complete bipartite graph needs part sizes >= 0");
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph(a + b, edges);
}

Graph star_graph(int leaves) {
  require_size(leaves >= 0, "star needs >= 0 leaves");
  return complete_bipartite_graph(1, leaves);
}

Graph grid_graph(int rows, int cols) {
  require_size(rows >= 0 && cols >= 0, "grid needs rows, cols >= 0");
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      int v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  return Graph(rows * cols, edges);
}

Graph generate_family(Family kind, int first, int second) {
  switch (kind) {
    case Family::Path: return path_graph(first);
    case Family::Cycle: return cycle_graph(first);
    case Family::Complete: return complete_graph(first);
    case Family::CompleteBipartite: return complete_bipartite_graph(first, second);
    case Family::Star: return star_graph(first);
    case Family::Grid: return grid_graph(first, second);
  }
  throw InvalidArgument("unknown family");
}

Family parse_family(std::string_view name) {
  if (name == "path") return Family::Path;
  if (name == "cycle") return Family::Cycle;
  if (name == "complete") return Family::Complete;
  if (name == "complete_bipartite") return Family::CompleteBipartite;
  if (name == "star") return Family::Star;
  if (name == "grid") return Family::Grid;
  throw InvalidArgument("unknown graph family '" + std::string(name) + "'");
}

std::uint64_t labeled_graph_count(int n) {
  require_size(n >= 0 && n <= kLabeledEnumerationCap,
               "labeled enumeration supports 0 <= n <= " + std::to_string(kLabeledEnumerationCap));
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph labeled_graph(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1U) edges.emplace_back(u, v);
  return Graph(n, edges);
}

void enumerate_labeled_graphs(int n, const std::function<bool(std::uint64_t, const Graph&)>& visit) {
  std::uint64_t count = labeled_graph_count(n);
  for (std::uint64_t mask = 0; mask < count; ++mask)
    if (!visit(mask, labeled_graph(n, mask))) return;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the combined input
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Graph erdos_renyi(int n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(p)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph random_tree(int n, Rng& rng) {
  require_size(n >= 0, "tree needs n >= 0");
  if (n <= 1) return Graph(n);
  if (n == 2) return Graph(2, {{0, 1}});
  std::vector<int> prufer(n - 2);
  for (int& x : prufer) x = static_cast<int>(rng.below(n));
  std::vector<int> degree(n, 1);
  for (int x : prufer) ++degree[x];
  std::vector<Edge> edges;
  for (int x : prufer) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, x);
    --degree[leaf];
    --degree[x];
  }
  int u = -1;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) {
      if (u < 0) {
        u = v;
      } else {
        edges.emplace_back(u, v);
        break;
      }
    }
  return Graph(n, edges);
}

VertexSet random_subset(const VertexSet& within, Rng& rng) {
  VertexSet out;
  for (int v : within)
    if (rng.next() & 1U) out.insert(v);
  return out;
}

VertexSet random_nonempty_subset(const VertexSet& within, Rng& rng) {
  if (within.empty()) throw InvalidArgument("cannot draw a non-empty subset of the empty set");
  for (;;) {
    VertexSet s = random_subset(within, rng);
    if (!s.empty()) return s;
  }
}

}  // namespace msc
