#include "msc/verify.hpp"

#include <algorithm>
#include <exception>
#include <utility>

#include "msc/generators.hpp"

namespace msc {

namespace {

// Graphs up to this order get a full sigma table; larger ones share a
// memoizing engine across all their Delta evaluations.
constexpr int kTableOrder = 16;

class DeltaSource {
 public:
  explicit DeltaSource(const Graph& g) {
    if (g.order() <= kTableOrder)
      table_.emplace(g);
    else
      engine_.emplace(g);
  }

  DeltaTerms terms(const VertexSet& a, const VertexSet& b) {
    return table_ ? delta_terms(*table_, a, b) : delta_terms(*engine_, a, b);
  }

 private:
  std::optional<SigmaTable> table_;
  std::optional<SigmaEngine> engine_;
};

// Runs fn(i) for i in [0, count) and returns the results in index order.
// Exceptions thrown by workers are rethrown on the calling thread.
template <class Result, class Fn>
std::vector<Result> map_ordered(std::size_t count, Execution exec, Fn&& fn) {
  std::vector<Result> out(count);
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::exception_ptr error;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      out[i] = fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(msc_map_ordered_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

VertexSet bounded_subset(const VertexSet& within, Rng& rng, int cap) {
  VertexSet s = random_subset(within, rng);
  while (s.size() > cap) s.erase(s.last());
  return s;
}

VertexSet bounded_nonempty_subset(const VertexSet& within, Rng& rng, int cap) {
  VertexSet s = random_nonempty_subset(within, rng);
  while (s.size() > cap) s.erase(s.last());
  return s;
}

std::string describe(const VertexSet& a, const VertexSet& b) {
  return "A=" + a.to_string() + " B=" + b.to_string();
}

class TrialRecorder {
 public:
  TrialRecorder(IdentityReport& report, std::uint64_t seed) : report_(report), seed_(seed) {}

  void skip(Identity id) { ++report_.tally(id).skipped; }
  void check(Identity id, bool passed, const std::function<std::string()>& detail) {
    ++report_.tally(id).checked;
    if (passed) return;
    ++report_.tally(id).failed;
    report_.failures.push_back({id, seed_, detail()});
  }

 private:
  IdentityReport& report_;
  std::uint64_t seed_;
};

}  // namespace

int predicted_pair_sign(const Distance& d) {
  if (!d.is_finite()) return 0;
  return d.value() % 2 == 1 ? +1 : -1;
}

std::optional<int> predicted_set_sign(ParityClass p) {
  switch (p) {
    case ParityClass::Even: return -1;
    case ParityClass::Odd: return +1;
    case ParityClass::Infinite: return 0;
    case ParityClass::Mixed: return std::nullopt;
  }
  return std::nullopt;
}

std::vector<PairVerdict> verify_msc_pairs(const Graph& g, std::string_view graph_id) {
  std::vector<PairVerdict> out;
  if (g.order() < 2) return out;
  out.reserve(static_cast<std::size_t>(g.order()) * (g.order() - 1) / 2);
  DeltaSource source(g);
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      PairVerdict pv;
      pv.graph_id = graph_id;
      pv.u = u;
      pv.v = v;
      pv.distance = distance(g, u, v);
      pv.delta = source.terms(VertexSet{u}, VertexSet{v}).delta;
      pv.predicted_sign = predicted_pair_sign(pv.distance);
      pv.conforms = pv.delta.sign() == pv.predicted_sign;
      out.push_back(std::move(pv));
    }
  return out;
}

std::vector<SetVerdict> verify_gmsc_sets(const Graph& g, SetMode mode, std::string_view graph_id,
                                         int exhaustive_cap) {
  DeltaSource source(g);
  std::vector<SetVerdict> out;
  auto judge = [&](const VertexSet& a, const VertexSet& b) {
    SetVerdict sv;
    sv.graph_id = graph_id;
    sv.a = a;
    sv.b = b;
    sv.parity = classify_parity(g, a, b);
    sv.delta = source.terms(a, b).delta;
    if (auto expected = predicted_set_sign(sv.parity)) sv.conforms = sv.delta.sign() == *expected;
    out.push_back(std::move(sv));
  };

  if (mode.exhaustive) {
    if (g.order() > exhaustive_cap)
      throw ResourceLimit("exhaustive subset-pair verification is capped at n <= " +
                          std::to_string(exhaustive_cap) + " (got n = " + std::to_string(g.order()) + ")");
    const std::uint64_t limit = std::uint64_t{1} << g.order();
    out.reserve((limit - 1) * (limit - 1));
    for (std::uint64_t a = 1; a < limit; ++a)
      for (std::uint64_t b = 1; b < limit; ++b) judge(VertexSet::from_words(a), VertexSet::from_words(b));
    return out;
  }

  if (g.order() == 0) return out;
  Rng rng(mode.seed);
  out.reserve(mode.samples);
  for (std::size_t i = 0; i < mode.samples; ++i) {
    VertexSet a = random_nonempty_subset(g.vertices(), rng);
    VertexSet b = random_nonempty_subset(g.vertices(), rng);
    judge(a, b);
  }
  return out;
}

std::string_view to_string(Identity id) {
  switch (id) {
    case Identity::Multiplicativity: return "multiplicativity";
    case Identity::VertexRecurrence: return "vertex-recurrence";
    case Identity::SubsetExpansion: return "subset-expansion";
    case Identity::NeighborhoodExpansion: return "neighborhood-expansion";
    case Identity::Separation: return "separation";
    case Identity::Overlap: return "overlap";
    case Identity::ParityFlip: return "parity-flip";
  }
  return "?";
}

void IdentityReport::merge(const IdentityReport& other) {
  for (std::size_t i = 0; i < kIdentityCount; ++i) {
    tallies[i].checked += other.tallies[i].checked;
    tallies[i].failed += other.tallies[i].failed;
    tallies[i].skipped += other.tallies[i].skipped;
  }
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

IdentityReport run_identity_trial(const Graph& g, std::uint64_t trial_seed) {
  IdentityReport report;
  TrialRecorder rec(report, trial_seed);
  Rng rng(trial_seed);
  const VertexSet all = g.vertices();
  const int n = g.order();
  const Count whole = sigma(g);

  {
    Graph h = erdos_renyi(rng.between(0, 5), 0.5, rng);
    if (n + h.order() > kMaxVertices) {
      rec.skip(Identity::Multiplicativity);
    } else {
      const Count joint = sigma(disjoint_union(g, h));
      const Count part = sigma(h);
      rec.check(Identity::Multiplicativity, joint == whole * part, [&] {
        return "sigma(G u H)=" + joint.str() + " sigma(G)*sigma(H)=" + Count(whole * part).str() +
               " |H|=" + std::to_string(h.order());
      });
    }
  }

  if (n == 0) {
    rec.skip(Identity::VertexRecurrence);
  } else {
    const int v = static_cast<int>(rng.below(n));
    VertexSet closed = g.neighbors(v);
    closed.insert(v);
    const Count without = sigma(delete_vertices(g, VertexSet{v}).graph);
    const Count without_closed = sigma(delete_vertices(g, closed).graph);
    rec.check(Identity::VertexRecurrence, whole == without + without_closed && without < whole, [&] {
      return "v=" + std::to_string(v) + " sigma(G)=" + whole.str() + " sigma(G-v)=" + without.str() +
             " sigma(G-N[v])=" + without_closed.str();
    });
  }

  {
    const VertexSet u = bounded_subset(all, rng, kSubsetEnumerationCap);
    const Count expanded = sigma_subset_expansion(g, u);
    rec.check(Identity::SubsetExpansion, expanded == whole, [&] {
      return "U=" + u.to_string() + " expansion=" + expanded.str() + " sigma=" + whole.str();
    });
  }

  {
    const VertexSet a = bounded_subset(all, rng, kSubsetEnumerationCap);
    const VertexSet b = random_subset(all - a, rng);
    const DeltaValue direct = delta_sets(g, a, b);
    const DeltaValue expanded = delta_neighborhood_expansion(g, a, b);
    rec.check(Identity::NeighborhoodExpansion, direct == expanded, [&] {
      return describe(a, b) + " direct=" + direct.to_string() + " expanded=" + expanded.to_string();
    });
  }

  {
    const auto components = connected_components(g);
    if (components.size() < 2) {
      rec.skip(Identity::Separation);
    } else {
      VertexSet side_a, side_b;
      for (const VertexSet& c : components) {
        switch (rng.below(3)) {
          case 0: side_a |= c; break;
          case 1: side_b |= c; break;
          default: break;
        }
      }
      const VertexSet a = random_subset(side_a, rng);
      const VertexSet b = random_subset(side_b, rng);
      const bool separated = split_by_sets(g, a, b).part_ab.empty();
      const DeltaValue d = delta_sets(g, a, b);
      rec.check(Identity::Separation, separated && d.sign() == 0,
                [&] { return describe(a, b) + " delta=" + d.to_string(); });
    }
  }

  if (n == 0) {
    rec.skip(Identity::Overlap);
  } else {
    const int c = static_cast<int>(rng.below(n));
    VertexSet a = random_subset(all, rng), b = random_subset(all, rng);
    a.insert(c);
    b.insert(c);
    const OverlapBound bound = delta_nondisjoint_bound(g, a, b);
    rec.check(Identity::Overlap, bound.whole < bound.reduced, [&] {
      return describe(a, b) + " delta=" + bound.whole.to_string() + " reduced=" + bound.reduced.to_string();
    });
  }

  {
    bool checked = false;
    for (int attempt = 0; attempt < 16 && n >= 2 && !checked; ++attempt) {
      VertexSet a, b;
      if (attempt % 2 == 0) {
        const int u = static_cast<int>(rng.below(n));
        int v = static_cast<int>(rng.below(n - 1));
        if (v >= u) ++v;
        a.insert(u);
        b.insert(v);
      } else {
        a = bounded_nonempty_subset(all, rng, kSubsetEnumerationCap);
        if (a == all) continue;
        b = random_nonempty_subset(all - a, rng);
      }
      const ParityClass p = classify_parity(g, a, b);
      if (p != ParityClass::Even && p != ParityClass::Odd) continue;
      const ParityFlipReport flip = parity_flip_check(g, a, b);
      rec.check(Identity::ParityFlip, flip.ok(), [&] {
        return describe(a, b) + " class=" + std::string(to_string(flip.outer)) +
               " violations=" + std::to_string(flip.violations.size()) +
               " witness_flips=" + (flip.witness_flips ? "yes" : "no");
      });
      checked = true;
    }
    if (!checked) rec.skip(Identity::ParityFlip);
  }
  return report;
}

IdentityReport verify_identities(const Graph& g, int trials, std::uint64_t seed) {
  IdentityReport report;
  for (int t = 0; t < trials; ++t) report.merge(run_identity_trial(g, mix_seed(seed, static_cast<std::uint64_t>(t))));
  return report;
}

namespace {

std::vector<CounterexampleRecord> graph_counterexamples(const GraphEntry& entry, std::size_t index,
                                                        int parity_cap) {
  std::vector<CounterexampleRecord> out;
  const Graph& g = entry.graph;
  auto verdicts = verify_msc_pairs(g, entry.id);
  if (std::all_of(verdicts.begin(), verdicts.end(), [](const PairVerdict& pv) { return pv.conforms; }))
    return out;

  DeltaSource source(g);
  std::optional<bool> parity;
  if (g.order() <= parity_cap) parity = is_parity_graph(g, parity_cap);
  const bool bipartite = is_bipartite(g);
  for (const PairVerdict& pv : verdicts) {
    if (pv.conforms) continue;
    DeltaTerms t = source.terms(VertexSet{pv.u}, VertexSet{pv.v});
    CounterexampleRecord r;
    r.graph_id = entry.id;
    r.stream_index = index;
    r.graph = g;
    r.u = pv.u;
    r.v = pv.v;
    r.sigma_whole = t.whole;
    r.sigma_without_u = t.without_a;
    r.sigma_without_v = t.without_b;
    r.sigma_without_both = t.without_both;
    r.delta = t.delta;
    r.distance = pv.distance;
    r.is_parity = parity;
    r.is_bipartite = bipartite;
    out.push_back(std::move(r));
  }
  return out;
}

void order_and_truncate(std::vector<CounterexampleRecord>& records, const SearchLimits& limits) {
  std::stable_sort(records.begin(), records.end(), [](const CounterexampleRecord& x, const CounterexampleRecord& y) {
    return std::pair(x.graph.order(), x.graph.edge_count()) < std::pair(y.graph.order(), y.graph.edge_count());
  });
  if (limits.minimal_order_only && !records.empty()) {
    const int smallest = records.front().graph.order();
    std::erase_if(records, [&](const CounterexampleRecord& r) { return r.graph.order() != smallest; });
  }
  if (records.size() > limits.max_records) records.resize(limits.max_records);
}

std::vector<CounterexampleRecord> scan(std::span<const GraphEntry> graphs, std::size_t index_offset,
                                       const SearchLimits& limits, Execution exec) {
  auto per_graph = map_ordered<std::vector<CounterexampleRecord>>(graphs.size(), exec, [&](std::size_t i) {
    return graph_counterexamples(graphs[i], index_offset + i, limits.parity_cap);
  });
  std::vector<CounterexampleRecord> out;
  for (auto& records : per_graph)
    for (auto& r : records) out.push_back(std::move(r));
  return out;
}

}  // namespace

std::vector<CounterexampleRecord> search_counterexamples(std::span<const GraphEntry> graphs,
                                                         const SearchLimits& limits, Execution exec) {
  auto records = scan(graphs, 0, limits, exec);
  order_and_truncate(records, limits);
  return records;
}

std::vector<CounterexampleRecord> search_labeled_counterexamples(int max_n, const SearchLimits& limits,
                                                                 Execution exec) {
  if (max_n < 0 || max_n > kLabeledEnumerationCap)
    throw ResourceLimit("labeled search is capped at n <= " + std::to_string(kLabeledEnumerationCap) +
                        " (got " + std::to_string(max_n) + ")");
  constexpr std::uint64_t kBatch = std::uint64_t{1} << 14;
  std::vector<CounterexampleRecord> records;
  for (int n = 0; n <= max_n; ++n) {
    const std::uint64_t total = labeled_graph_count(n);
    for (std::uint64_t start = 0; start < total; start += kBatch) {
      const std::uint64_t stop = std::min(total, start + kBatch);
      std::vector<GraphEntry> batch;
      batch.reserve(stop - start);
      for (std::uint64_t mask = start; mask < stop; ++mask)
        batch.push_back({"labeled:" + std::to_string(n) + ":" + std::to_string(mask), labeled_graph(n, mask)});
      auto found = scan(batch, start, limits, exec);
      for (auto& r : found) records.push_back(std::move(r));
      order_and_truncate(records, limits);
    }
    if (limits.minimal_order_only && !records.empty()) break;
  }
  return records;
}

std::size_t GraphVerification::pair_violations() const {
  return static_cast<std::size_t>(
      std::count_if(pairs.begin(), pairs.end(), [](const PairVerdict& p) { return !p.conforms; }));
}

std::size_t GraphVerification::set_violations() const {
  return static_cast<std::size_t>(std::count_if(
      sets.begin(), sets.end(), [](const SetVerdict& s) { return s.conforms.has_value() && !*s.conforms; }));
}

std::vector<GraphVerification> verify_corpus(std::span<const GraphEntry> graphs, const CorpusOptions& options,
                                             Execution exec) {
  return map_ordered<GraphVerification>(graphs.size(), exec, [&](std::size_t i) {
    const GraphEntry& entry = graphs[i];
    const Graph& g = entry.graph;
    const std::uint64_t seed = mix_seed(options.seed, i);
    GraphVerification out;
    out.index = i;
    out.id = entry.id;
    out.order = g.order();
    out.edges = g.edge_count();
    out.is_bipartite = is_bipartite(g);
    if (options.only_parity || g.order() <= options.parity_cap)
      out.is_parity = is_parity_graph(g, options.parity_cap);
    if (options.only_parity && !*out.is_parity) {
      out.filtered_out = true;
      return out;
    }
    if (options.pairs) out.pairs = verify_msc_pairs(g, entry.id);
    if (options.sets) {
      SetMode mode = options.set_samples ? SetMode::sample(*options.set_samples, seed) : SetMode::all();
      out.sets = verify_gmsc_sets(g, mode, entry.id, options.exhaustive_cap);
    }
    if (options.identity_trials > 0) out.identities = verify_identities(g, options.identity_trials, seed);
    return out;
  });
}

}  // namespace msc
