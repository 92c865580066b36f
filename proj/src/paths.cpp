#include "msc/paths.hpp"

#include <string>

#include "msc/sigma.hpp"

namespace msc {

namespace {

void require_endpoint_sets(const Graph& g, const VertexSet& a, const VertexSet& b) {
  g.require_subset(a, "set A");
  g.require_subset(b, "set B");
  if (a.empty() || b.empty()) throw InvalidArgument("induced A-B-paths need non-empty A and B");
}

VertexSet closed_neighborhood(const Graph& g, int v) {
  VertexSet s = g.neighbors(v);
  s.insert(v);
  return s;
}

// Depth-first extension of an induced path. `blocked` holds every vertex the
// next vertex may not be: A, all earlier path vertices and their neighbors,
// and the current end.
class PathSearch {
 public:
  PathSearch(const Graph& g, const VertexSet& a, const VertexSet& b,
             const std::function<bool(std::span<const int>)>& visit)
      : g_(g), a_(a), b_(b), visit_(visit) {}

  void run() {
    for (int start : a_) {
      path_.assign(1, start);
      if (b_.contains(start)) {
        if (!visit_(path_)) return;
        continue;
      }
      VertexSet blocked = a_;
      if (!extend(blocked)) return;
    }
  }

 private:
  bool extend(const VertexSet& blocked) {
    const int end = path_.back();
    VertexSet next_blocked = blocked | closed_neighborhood(g_, end);
    for (int w : g_.neighbors(end) - blocked) {
      path_.push_back(w);
      bool keep_going = b_.contains(w) ? visit_(path_) : extend(next_blocked);
      path_.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  const Graph& g_;
  const VertexSet& a_;
  const VertexSet& b_;
  const std::function<bool(std::span<const int>)>& visit_;
  std::vector<int> path_;
};

// Induced-path sweep from `source` recording which parities reach each
// endpoint; returns false once some endpoint is reached with both.
bool single_source_parities(const Graph& g, int source) {
  std::vector<unsigned> seen(g.order(), 0);
  std::vector<int> path{source};
  bool consistent = true;

  std::function<void(const VertexSet&)> extend = [&](const VertexSet& blocked) {
    const int end = path.back();
    VertexSet next_blocked = blocked | closed_neighborhood(g, end);
    for (int w : g.neighbors(end) - blocked) {
      const unsigned parity = 1U << (path.size() % 2);
      seen[w] |= parity;
      if (seen[w] == 3U) {
        consistent = false;
        return;
      }
      path.push_back(w);
      extend(next_blocked);
      path.pop_back();
      if (!consistent) return;
    }
  };
  extend(VertexSet{});
  return consistent;
}

void require_parity_cap(const Graph& g, int cap) {
  if (g.order() > cap)
    throw ResourceLimit("parity-graph recognition is capped at n <= " + std::to_string(cap) +
                        " (got n = " + std::to_string(g.order()) + ")");
}

ParityClass flipped(ParityClass p) {
  return p == ParityClass::Even ? ParityClass::Odd : ParityClass::Even;
}

}  // namespace

std::string_view to_string(ParityClass p) {
  switch (p) {
    case ParityClass::Even: return "even";
    case ParityClass::Odd: return "odd";
    case ParityClass::Infinite: return "infinite";
    case ParityClass::Mixed: return "mixed";
  }
  return "?";
}

void for_each_induced_ab_path(const Graph& g, const VertexSet& a, const VertexSet& b,
                              const std::function<bool(std::span<const int>)>& visit) {
  require_endpoint_sets(g, a, b);
  PathSearch(g, a, b, visit).run();
}

std::vector<InducedPath> enumerate_induced_ab_paths(const Graph& g, const VertexSet& a,
                                                    const VertexSet& b) {
  std::vector<InducedPath> out;
  for_each_induced_ab_path(g, a, b, [&](std::span<const int> p) {
    out.push_back({{p.begin(), p.end()}});
    return true;
  });
  return out;
}

ParityClass classify_parity(const Graph& g, const VertexSet& a, const VertexSet& b) {
  bool even = false, odd = false;
  for_each_induced_ab_path(g, a, b, [&](std::span<const int> p) {
    ((p.size() - 1) % 2 == 0 ? even : odd) = true;
    return !(even && odd);
  });
  if (even && odd) return ParityClass::Mixed;
  if (even) return ParityClass::Even;
  if (odd) return ParityClass::Odd;
  return ParityClass::Infinite;
}

bool is_parity_graph(const Graph& g, int cap) {
  require_parity_cap(g, cap);
  for (int u = 0; u < g.order(); ++u)
    if (!single_source_parities(g, u)) return false;
  return true;
}

bool is_parity_graph_reference(const Graph& g, int cap) {
  require_parity_cap(g, cap);
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (classify_parity(g, VertexSet{u}, VertexSet{v}) == ParityClass::Mixed) return false;
  return true;
}

bool is_bipartite(const Graph& g) {
  VertexSet unvisited = g.vertices();
  while (!unvisited.empty()) {
    VertexSet frontier{unvisited.first()};
    VertexSet side[2];
    int layer = 0;
    while (!frontier.empty()) {
      side[layer % 2] |= frontier;
      unvisited -= frontier;
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      if (next.intersects(side[layer % 2])) return false;
      frontier = next & unvisited;
      ++layer;
    }
  }
  return true;
}

ParityFlipReport parity_flip_check(const Graph& g, const VertexSet& a, const VertexSet& b) {
  require_endpoint_sets(g, a, b);
  if (a.intersects(b)) throw InvalidArgument("parity flip check needs disjoint A and B");

  ParityFlipReport report;
  report.outer = classify_parity(g, a, b);
  if (report.outer != ParityClass::Even && report.outer != ParityClass::Odd)
    throw InvalidArgument("parity flip check needs an even or odd path class, got " +
                          std::string(to_string(report.outer)));
  const ParityClass expected = flipped(report.outer);

  Deletion rest = delete_vertices(g, a);
  const VertexSet b_rest = rest.map_set(b);
  auto inner_class = [&](const VertexSet& n_rest) {
    return n_rest.empty() ? ParityClass::Infinite : classify_parity(rest.graph, n_rest, b_rest);
  };

  for_each_independent_subset(g, a, [&](const VertexSet& w) {
    const VertexSet n_rest = rest.map_set(neighborhood(g, w));
    ParityFlipEntry entry{w, rest.unmap_set(n_rest), inner_class(n_rest)};
    if (entry.parity != expected && entry.parity != ParityClass::Infinite)
      report.violations.push_back(entry);
    report.entries.push_back(std::move(entry));
    return true;
  });

  for_each_induced_ab_path(g, a, b, [&](std::span<const int> p) {
    report.witness = p.front();
    return false;
  });
  if (report.witness)
    report.witness_flips =
        inner_class(rest.map_set(g.neighbors(*report.witness))) == expected;
  return report;
}

}  // namespace msc
