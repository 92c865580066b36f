#pragma once

/**
 * Verification harness: sign checks of Delta against vertex distance (pairs)
 * and against induced-path parity (vertex subsets), randomized identity
 * suites, and counterexample search over graph streams.
 *
 * Corpus-level entry points fan graphs out over OpenMP threads and restore
 * stream order afterwards, so results are identical for any thread count.
 * Execution::Serial runs the same per-graph kernels on one thread and is the
 * reference the parallel path is tested against.
 */

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "msc/delta.hpp"
#include "msc/paths.hpp"

namespace msc {

enum class Execution { Serial, Parallel };

struct GraphEntry {
  std::string id;
  Graph graph;
};

/// Sign demanded by sgn(Delta) = (-1)^(d + 1); 0 for infinite distance.
int predicted_pair_sign(const Distance& d);
/// -1 for Even, +1 for Odd, 0 for Infinite, nullopt for Mixed.
std::optional<int> predicted_set_sign(ParityClass p);

struct PairVerdict {
  std::string graph_id;
  int u = 0;
  int v = 0;
  Distance distance = Distance::infinite();
  DeltaValue delta;
  int predicted_sign = 0;
  bool conforms = false;
};

/// One verdict per unordered pair u < v, in lexicographic order.
std::vector<PairVerdict> verify_msc_pairs(const Graph& g, std::string_view graph_id = {});

struct SetVerdict {
  std::string graph_id;
  VertexSet a;
  VertexSet b;
  ParityClass parity = ParityClass::Infinite;
  DeltaValue delta;
  std::optional<bool> conforms;  ///< nullopt for Mixed
};

inline constexpr int kExhaustiveSetCap = 8;

struct SetMode {
  bool exhaustive = true;
  std::size_t samples = 0;
  std::uint64_t seed = 0;

  static SetMode all() { return {}; }
  static SetMode sample(std::size_t k, std::uint64_t seed) { return {false, k, seed}; }
};

/// Exhaustive mode covers every ordered pair of non-empty subsets (A, B) in
/// increasing mask order and throws ResourceLimit for n > cap. Sample mode
/// draws `samples` pairs of non-empty subsets.
std::vector<SetVerdict> verify_gmsc_sets(const Graph& g, SetMode mode, std::string_view graph_id = {},
                                         int exhaustive_cap = kExhaustiveSetCap);

enum class Identity {
  Multiplicativity,       ///< sigma(G u H) = sigma(G) sigma(H)
  VertexRecurrence,       ///< sigma(G) = sigma(G - v) + sigma(G - v - N(v)), sigma(G - v) < sigma(G)
  SubsetExpansion,        ///< sum over independent W in U of sigma(G - U - N(W)) = sigma(G)
  NeighborhoodExpansion,  ///< Delta(G, A, B) = -sum Delta(G - A, N(W), B), A n B = {}
  Separation,             ///< Delta = 0 when no component meets both A and B
  Overlap,                ///< Delta(G, A, B) < Delta(G - C, A \ C, B \ C)
  ParityFlip,             ///< path-class flip under G -> (G - A, N(W), B)
};
inline constexpr std::size_t kIdentityCount = 7;
std::string_view to_string(Identity id);

struct IdentityTally {
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  std::uint64_t skipped = 0;  ///< trial drew an instance the identity does not apply to
};

struct IdentityFailure {
  Identity identity;
  std::uint64_t trial_seed;  ///< run_identity_trial(g, trial_seed) reproduces it
  std::string detail;
};

struct IdentityReport {
  std::array<IdentityTally, kIdentityCount> tallies{};
  std::vector<IdentityFailure> failures;

  const IdentityTally& tally(Identity id) const { return tallies[static_cast<std::size_t>(id)]; }
  IdentityTally& tally(Identity id) { return tallies[static_cast<std::size_t>(id)]; }
  bool ok() const { return failures.empty(); }
  void merge(const IdentityReport& other);
};

/// One randomized check of every identity on `g`, driven by `trial_seed`.
IdentityReport run_identity_trial(const Graph& g, std::uint64_t trial_seed);
/// `trials` trials with seeds mix_seed(seed, t).
IdentityReport verify_identities(const Graph& g, int trials, std::uint64_t seed);

struct CounterexampleRecord {
  std::string graph_id;
  std::size_t stream_index = 0;
  Graph graph;
  int u = 0;
  int v = 0;
  Count sigma_whole;
  Count sigma_without_u;
  Count sigma_without_v;
  Count sigma_without_both;
  DeltaValue delta;
  Distance distance = Distance::infinite();
  std::optional<bool> is_parity;  ///< nullopt above the recognition cap
  bool is_bipartite = false;
};

struct SearchLimits {
  std::size_t max_records = std::numeric_limits<std::size_t>::max();
  /// Keep only records of the smallest vertex count that has any.
  bool minimal_order_only = false;
  int parity_cap = kParityGraphCap;
};

/// Records for every non-conforming pair, ordered by (vertex count, edge
/// count, stream index, u, v) and truncated to max_records.
std::vector<CounterexampleRecord> search_counterexamples(std::span<const GraphEntry> graphs,
                                                         const SearchLimits& limits = {},
                                                         Execution exec = Execution::Parallel);

/// Scans the labeled graphs with n = 0, 1, ..., max_n in increasing order.
/// With limits.minimal_order_only the scan stops after the first n that
/// yields records.
std::vector<CounterexampleRecord> search_labeled_counterexamples(int max_n, const SearchLimits& limits = {},
                                                                 Execution exec = Execution::Parallel);

struct CorpusOptions {
  bool pairs = true;
  bool sets = false;
  std::optional<std::size_t> set_samples;  ///< nullopt: exhaustive
  int identity_trials = 0;
  std::uint64_t seed = 0;
  bool only_parity = false;
  int parity_cap = kParityGraphCap;
  int exhaustive_cap = kExhaustiveSetCap;
};

struct GraphVerification {
  std::size_t index = 0;
  std::string id;
  int order = 0;
  int edges = 0;
  std::optional<bool> is_parity;
  bool is_bipartite = false;
  bool filtered_out = false;  ///< only_parity and the graph is not a parity graph
  std::vector<PairVerdict> pairs;
  std::vector<SetVerdict> sets;
  IdentityReport identities;

  std::size_t pair_violations() const;
  std::size_t set_violations() const;
};

/// Per-graph seeds are mix_seed(options.seed, index).
std::vector<GraphVerification> verify_corpus(std::span<const GraphEntry> graphs, const CorpusOptions& options,
                                             Execution exec = Execution::Parallel);

}  // namespace msc
