#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "msc/graph.hpp"

namespace msc {

/// An induced A-B-path: V(P) n A = {first}, V(P) n B = {last}, and two path
/// vertices are adjacent exactly when they are consecutive. A single vertex
/// of A n B is a path of length 0.
struct InducedPath {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  friend bool operator==(const InducedPath&, const InducedPath&) = default;
};

/// Parity of the whole set of induced A-B-paths. Mixed means both parities
/// occur (impossible in a parity graph when A and B are singletons).
enum class ParityClass { Even, Odd, Infinite, Mixed };

std::string_view to_string(ParityClass p);

/// Paths are produced in lexicographic order of their vertex sequences. The
/// callback returns false to stop. Throws InvalidArgument for empty A or B.
void for_each_induced_ab_path(const Graph& g, const VertexSet& a, const VertexSet& b,
                              const std::function<bool(std::span<const int>)>& visit);

std::vector<InducedPath> enumerate_induced_ab_paths(const Graph& g, const VertexSet& a,
                                                    const VertexSet& b);

/// Stops enumerating as soon as both parities have been seen.
ParityClass classify_parity(const Graph& g, const VertexSet& a, const VertexSet& b);

inline constexpr int kParityGraphCap = 12;

/// True when, for every pair u != v, all induced u-v-paths have the same
/// length parity. Runs one induced-path sweep per source vertex.
/// Throws ResourceLimit when n > cap.
bool is_parity_graph(const Graph& g, int cap = kParityGraphCap);

/// Same predicate evaluated literally: classify_parity({u}, {v}) for every
/// pair. Slower; kept as the reference for is_parity_graph.
bool is_parity_graph_reference(const Graph& g, int cap = kParityGraphCap);

bool is_bipartite(const Graph& g);

struct ParityFlipEntry {
  VertexSet w;             ///< independent subset of A
  VertexSet neighborhood;  ///< N(W) \ A, original labels
  ParityClass parity;      ///< class of (G - A, N(W), B)
};

struct ParityFlipReport {
  ParityClass outer = ParityClass::Infinite;  ///< class of (G, A, B)
  std::vector<ParityFlipEntry> entries;       ///< one per independent W
  std::vector<ParityFlipEntry> violations;    ///< entries keeping the outer parity or Mixed
  std::optional<int> witness;                 ///< start vertex of the first induced A-B-path
  bool witness_flips = false;                 ///< W = {witness} gives the flipped class

  bool ok() const { return violations.empty() && witness_flips; }
};

/// For Even (Odd) (G, A, B), checks that every independent W subset of A
/// gives an Odd (Even) or Infinite class on (G - A, N(W), B), and that the
/// W = {a} of a path endpoint gives the flipped class. Requires disjoint,
/// non-empty A and B with an Even or Odd class.
ParityFlipReport parity_flip_check(const Graph& g, const VertexSet& a, const VertexSet& b);

}  // namespace msc
