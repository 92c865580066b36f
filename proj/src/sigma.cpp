#include "msc/sigma.hpp"

#include <bit>
#include <type_traits>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace msc {

namespace {

void require_naive_cap(const Graph& g) {
  if (g.order() > kNaiveSigmaCap)
    throw ResourceLimit("brute-force sigma is capped at n <= " + std::to_string(kNaiveSigmaCap) +
                        " (got n = " + std::to_string(g.order()) + ")");
}

std::vector<std::uint32_t> adjacency_words(const Graph& g) {
  std::vector<std::uint32_t> adj(g.order());
  for (int v = 0; v < g.order(); ++v) adj[v] = static_cast<std::uint32_t>(g.neighbors(v).word(0));
  return adj;
}

inline bool independent_mask(const std::vector<std::uint32_t>& adj, std::uint32_t mask) {
  for (std::uint32_t rest = mask; rest; rest &= rest - 1)
    if (adj[std::countr_zero(rest)] & mask) return false;
  return true;
}

// Mask primitives shared by the narrow (uint64) and wide (VertexSet) cores.
inline bool none(std::uint64_t s) { return s == 0; }
inline bool none(const VertexSet& s) { return s.empty(); }
inline int lowest(std::uint64_t s) { return std::countr_zero(s); }
inline int lowest(const VertexSet& s) { return s.first(); }
inline int popcount(std::uint64_t s) { return std::popcount(s); }
inline int popcount(const VertexSet& s) { return s.size(); }
inline std::uint64_t drop_lowest(std::uint64_t s) { return s & (s - 1); }
inline VertexSet drop_lowest(VertexSet s) {
  s.erase(s.first());
  return s;
}
inline std::uint64_t singleton(std::uint64_t, int v) { return std::uint64_t{1} << v; }
inline VertexSet singleton(const VertexSet&, int v) {
  VertexSet s;
  s.insert(v);
  return s;
}
inline std::uint64_t to_mask(std::uint64_t, const VertexSet& s) { return s.word(0); }
inline VertexSet to_mask(const VertexSet&, const VertexSet& s) { return s; }

inline std::uint64_t minus(std::uint64_t a, std::uint64_t b) { return a & ~b; }
inline VertexSet minus(const VertexSet& a, const VertexSet& b) { return a - b; }

inline Count to_count(std::uint64_t x) { return Count(x); }
inline Count to_count(const Count& x) { return x; }

template <class Mask, class Acc, class Hash>
struct Core {
  using MaskType = Mask;

  std::vector<Mask> adj;
  std::unordered_map<Mask, Acc, Hash> memo;
  std::size_t cache_limit;
  SigmaEngine::Stats stats;

  Core(const Graph& g, std::size_t limit) : cache_limit(limit) {
    adj.reserve(g.order());
    for (int v = 0; v < g.order(); ++v) adj.push_back(to_mask(Mask{}, g.neighbors(v)));
  }

  Mask component(Mask s) const {
    Mask comp = singleton(s, lowest(s));
    Mask frontier = comp;
    while (!none(frontier)) {
      Mask next{};
      for (Mask f = frontier; !none(f); f = drop_lowest(f)) next |= adj[lowest(f)];
      next = minus(next & s, comp);
      comp |= next;
      frontier = next;
    }
    return comp;
  }

  void remember(const Mask& s, const Acc& value) {
    if (memo.size() >= cache_limit) {
      memo.clear();
      ++stats.cache_clears;
    }
    memo.emplace(s, value);
  }

  Acc solve(Mask s) {
    ++stats.calls;
    if (none(s)) return Acc(1);
    int size = popcount(s);
    if (size == 1) return Acc(2);

    if (auto it = memo.find(s); it != memo.end()) {
      ++stats.cache_hits;
      return it->second;
    }

    int pivot = -1, best = -1;
    for (Mask rest = s; !none(rest); rest = drop_lowest(rest)) {
      int v = lowest(rest);
      int d = popcount(adj[v] & s);
      if (d > best) {
        best = d;
        pivot = v;
      }
    }

    Acc result;
    if (best == 0) {
      result = Acc(1) << size;
    } else if (Mask comp = component(s); comp != s) {
      Acc first = solve(comp);
      result = first * solve(minus(s, comp));
    } else {
      Mask without = minus(s, singleton(s, pivot));
      Mask closed = minus(without, adj[pivot]);
      Acc a = solve(without);
      result = a + solve(closed);
    }
    remember(s, result);
    return result;
  }
};

// n <= 63 keeps sigma <= 2^63 inside a uint64 accumulator.
constexpr int kNarrowLimit = 63;

using NarrowCore = Core<std::uint64_t, std::uint64_t, std::hash<std::uint64_t>>;
using WideCore = Core<VertexSet, Count, VertexSetHash>;

}  // namespace

struct SigmaEngine::Impl {
  std::variant<NarrowCore, WideCore> core;
};

SigmaEngine::SigmaEngine(const Graph& g, std::size_t cache_limit) : graph_(g) {
  if (g.order() <= kNarrowLimit)
    impl_ = std::make_unique<Impl>(Impl{NarrowCore(g, cache_limit)});
  else
    impl_ = std::make_unique<Impl>(Impl{WideCore(g, cache_limit)});
}

SigmaEngine::~SigmaEngine() = default;
SigmaEngine::SigmaEngine(SigmaEngine&&) noexcept = default;
SigmaEngine& SigmaEngine::operator=(SigmaEngine&&) noexcept = default;

Count SigmaEngine::count() { return count_within(graph_.vertices()); }

Count SigmaEngine::count_without(const VertexSet& removed) {
  graph_.require_subset(removed, "deleted set");
  return count_within(graph_.vertices() - removed);
}

Count SigmaEngine::count_within(const VertexSet& survivors) {
  graph_.require_subset(survivors, "surviving set");
  return std::visit(
      [&](auto& core) {
        using Mask = typename std::decay_t<decltype(core)>::MaskType;
        return to_count(core.solve(to_mask(Mask{}, survivors)));
      },
      impl_->core);
}

SigmaEngine::Stats SigmaEngine::stats() const {
  return std::visit([](const auto& core) { return core.stats; }, impl_->core);
}

SigmaTable::SigmaTable(const Graph& g) : graph_(g) {
  if (g.order() > kSigmaTableCap)
    throw ResourceLimit("sigma table is capped at n <= " + std::to_string(kSigmaTableCap) +
                        " (got n = " + std::to_string(g.order()) + ")");
  auto adj = adjacency_words(g);
  const std::uint32_t size = std::uint32_t{1} << g.order();
  table_.resize(size);
  table_[0] = 1;
  for (std::uint32_t s = 1; s < size; ++s) {
    int v = std::countr_zero(s);
    std::uint32_t without = s & (s - 1);
    table_[s] = table_[without] + table_[without & ~adj[v]];
  }
}

Count SigmaTable::count_without(const VertexSet& removed) const {
  graph_.require_subset(removed, "deleted set");
  return count_within(graph_.vertices() - removed);
}

Count SigmaTable::count_within(const VertexSet& survivors) const {
  graph_.require_subset(survivors, "surviving set");
  return Count(table_[static_cast<std::uint32_t>(survivors.word(0))]);
}

Count sigma(const Graph& g) { return SigmaEngine(g).count(); }

Count sigma_naive(const Graph& g) {
  require_naive_cap(g);
  auto adj = adjacency_words(g);
  std::uint64_t total = 0;
  std::uint32_t limit = std::uint32_t{1} << g.order();
  for (std::uint32_t mask = 0; mask < limit; ++mask)
    if (independent_mask(adj, mask)) ++total;
  return Count(total);
}

Count sigma_naive_parallel(const Graph& g) {
  require_naive_cap(g);
  auto adj = adjacency_words(g);
  std::uint64_t total = 0;
  const std::int64_t limit = std::int64_t{1} << g.order();
#pragma omp parallel for reduction(+ : total) schedule(static)
  for (std::int64_t mask = 0; mask < limit; ++mask)
    if (independent_mask(adj, static_cast<std::uint32_t>(mask))) ++total;
  return Count(total);
}

void for_each_independent_subset(const Graph& g, const VertexSet& u,
                                 const std::function<bool(const VertexSet&)>& visit) {
  g.require_subset(u, "subset universe");
  if (u.size() > kSubsetEnumerationCap)
    throw ResourceLimit("subset enumeration is capped at |U| <= " +
                        std::to_string(kSubsetEnumerationCap) + " (got " +
                        std::to_string(u.size()) + ")");
  std::vector<int> members = u.to_vector();
  const int k = static_cast<int>(members.size());
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << k); ++bits) {
    VertexSet w;
    bool independent = true;
    for (int i = 0; i < k && independent; ++i) {
      if (!((bits >> i) & 1U)) continue;
      if (g.neighbors(members[i]).intersects(w)) independent = false;
      w.insert(members[i]);
    }
    if (independent && !visit(w)) return;
  }
}

std::vector<VertexSet> enumerate_independent_subsets(const Graph& g, const VertexSet& u) {
  std::vector<VertexSet> out;
  for_each_independent_subset(g, u, [&](const VertexSet& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

Count sigma_subset_expansion(const Graph& g, const VertexSet& u) {
  SigmaEngine engine(g);
  Count total = 0;
  for_each_independent_subset(g, u, [&](const VertexSet& w) {
    total += engine.count_without(u | neighborhood(g, w));
    return true;
  });
  return total;
}

}  // namespace msc
