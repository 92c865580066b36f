#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>

#include "msc/graph.hpp"

namespace msc {

enum class Family { Path, Cycle, Complete, CompleteBipartite, Star, Grid };

Graph path_graph(int n);
/// Requires n >= 3.
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// Parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite_graph(int a, int b);
/// Center 0 with `leaves` leaves.
Graph star_graph(int leaves);
/// rows x cols grid, vertex (r, c) labeled r * cols + c.
Graph grid_graph(int rows, int cols);

/// `second` is only read by CompleteBipartite and Grid.
Graph generate_family(Family kind, int first, int second = 0);
Family parse_family(std::string_view name);

/// Largest n accepted by labeled enumeration (2^21 graphs at n = 7).
inline constexpr int kLabeledEnumerationCap = 7;

/// Number of labeled simple graphs on n vertices, 2^(n(n-1)/2).
std::uint64_t labeled_graph_count(int n);

/// The labeled graph whose edge set is `mask`: bit k stands for the k-th
/// vertex pair (u, v), u < v, in lexicographic order.
Graph labeled_graph(int n, std::uint64_t mask);

/// Visits every labeled graph on n vertices once, in increasing mask order.
/// The callback returns false to stop early.
void enumerate_labeled_graphs(int n, const std::function<bool(std::uint64_t mask, const Graph&)>& visit);

/**
 * Seeded 64-bit generator with distribution helpers that do not depend on
 * the standard library's (implementation-defined) distributions, so seeded
 * runs reproduce bit-for-bit across toolchains.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(engine_()) * bound) >> 64);
  }
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

/// Derives an independent stream seed from a base seed and an index.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

Graph erdos_renyi(int n, double p, Rng& rng);
/// Uniform labeled tree via a random Prüfer sequence.
Graph random_tree(int n, Rng& rng);
/// Each vertex of `within` joins with probability 1/2.
VertexSet random_subset(const VertexSet& within, Rng& rng);
VertexSet random_nonempty_subset(const VertexSet& within, Rng& rng);

}  // namespace msc
