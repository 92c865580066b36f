#pragma once

/**
 * Counting independent vertex sets.
 *
 * sigma_naive / sigma_naive_parallel enumerate all 2^n subsets and are kept
 * as the reference oracle. SigmaEngine is the production path: it splits the
 * surviving vertex set into connected components, multiplies the component
 * counts, and branches each component on a maximum-degree pivot v with
 *
 *     sigma(H) = sigma(H - v) + sigma(H - v - N(v)),
 *
 * memoizing every intermediate result on the surviving-vertex mask.
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "msc/graph.hpp"

namespace msc {

/// Arbitrary-precision integer. Independent-set counts are always >= 1.
using Count = boost::multiprecision::cpp_int;

inline constexpr int kNaiveSigmaCap = 25;
inline constexpr int kSubsetEnumerationCap = 20;

/// Brute force over all subsets. Throws ResourceLimit for n > kNaiveSigmaCap.
Count sigma_naive(const Graph& g);
/// Same enumeration split across OpenMP threads.
Count sigma_naive_parallel(const Graph& g);

/**
 * Memoizing sigma evaluator bound to one root graph. Sub-counts for vertex
 * deleted subgraphs share the cache, which is what the four-term Delta
 * evaluations rely on.
 *
 * The cache holds at most `cache_limit` entries; once full it is cleared
 * wholesale and refilled. Not thread-safe: use one engine per thread.
 */
class SigmaEngine {
 public:
  static constexpr std::size_t kDefaultCacheLimit = std::size_t{1} << 21;

  struct Stats {
    std::uint64_t calls = 0;
    std::uint64_t cache_hits = 0;
    std::uint64_t cache_clears = 0;
  };

  explicit SigmaEngine(const Graph& g, std::size_t cache_limit = kDefaultCacheLimit);
  ~SigmaEngine();
  SigmaEngine(SigmaEngine&&) noexcept;
  SigmaEngine& operator=(SigmaEngine&&) noexcept;

  const Graph& graph() const { return graph_; }

  /// sigma(G)
  Count count();
  /// sigma(G - removed), labels relative to the root graph.
  Count count_without(const VertexSet& removed);
  /// sigma of the subgraph induced by `survivors`.
  Count count_within(const VertexSet& survivors);

  Stats stats() const;

 private:
  struct Impl;
  Graph graph_;
  std::unique_ptr<Impl> impl_;
};

inline constexpr int kSigmaTableCap = 20;

/// sigma of every induced subgraph of a small graph, indexed by the
/// surviving-vertex mask. Built in O(2^n) with the lowest-vertex recurrence.
/// Throws ResourceLimit when n > kSigmaTableCap.
class SigmaTable {
 public:
  explicit SigmaTable(const Graph& g);

  const Graph& graph() const { return graph_; }
  std::uint64_t at(std::uint32_t survivors) const { return table_[survivors]; }

  Count count() const { return count_within(graph_.vertices()); }
  Count count_without(const VertexSet& removed) const;
  Count count_within(const VertexSet& survivors) const;

 private:
  Graph graph_;
  std::vector<std::uint64_t> table_;
};

/// sigma(G) through a fresh SigmaEngine.
Count sigma(const Graph& g);

/// Visits every independent W subset of U once, in increasing order of the
/// membership bitmask over U's sorted members. The callback returns false to
/// stop. Throws ResourceLimit when |U| > kSubsetEnumerationCap.
void for_each_independent_subset(const Graph& g, const VertexSet& u,
                                 const std::function<bool(const VertexSet&)>& visit);
std::vector<VertexSet> enumerate_independent_subsets(const Graph& g, const VertexSet& u);

/// Sum over independent W subset of U of sigma(G - U - N(W)); equals sigma(G).
Count sigma_subset_expansion(const Graph& g, const VertexSet& u);

}  // namespace msc
