#include "msc/delta.hpp"

namespace msc {

DeltaTerms delta_terms(SigmaEngine& engine, const VertexSet& a, const VertexSet& b) {
  const Graph& g = engine.graph();
  g.require_subset(a, "set A");
  g.require_subset(b, "set B");
  DeltaTerms t;
  t.whole = engine.count();
  t.without_a = engine.count_without(a);
  t.without_b = engine.count_without(b);
  t.without_both = engine.count_without(a | b);
  t.delta = DeltaValue(Integer(t.without_a * t.without_b) - Integer(t.whole * t.without_both));
  return t;
}

DeltaTerms delta_terms(const SigmaTable& table, const VertexSet& a, const VertexSet& b) {
  const Graph& g = table.graph();
  g.require_subset(a, "set A");
  g.require_subset(b, "set B");
  const auto all = static_cast<std::uint32_t>(g.vertices().word(0));
  const auto ma = static_cast<std::uint32_t>(a.word(0));
  const auto mb = static_cast<std::uint32_t>(b.word(0));
  DeltaTerms t;
  t.whole = table.at(all);
  t.without_a = table.at(all & ~ma);
  t.without_b = table.at(all & ~mb);
  t.without_both = table.at(all & ~(ma | mb));
  t.delta = DeltaValue(Integer(t.without_a * t.without_b) - Integer(t.whole * t.without_both));
  return t;
}

DeltaValue delta_sets(SigmaEngine& engine, const VertexSet& a, const VertexSet& b) {
  return delta_terms(engine, a, b).delta;
}

DeltaValue delta_sets(const Graph& g, const VertexSet& a, const VertexSet& b) {
  SigmaEngine engine(g);
  return delta_sets(engine, a, b);
}

DeltaValue delta_vertices(const Graph& g, int u, int v) {
  g.require_vertex(u, "vertex u");
  g.require_vertex(v, "vertex v");
  VertexSet a, b;
  a.insert(u);
  b.insert(v);
  return delta_sets(g, a, b);
}

DeltaValue delta_neighborhood_expansion(const Graph& g, const VertexSet& a, const VertexSet& b) {
  g.require_subset(a, "set A");
  g.require_subset(b, "set B");
  if (a.intersects(b))
    throw InvalidArgument("neighborhood expansion needs disjoint sets, A n B = " + (a & b).to_string());

  Deletion rest = delete_vertices(g, a);
  SigmaEngine engine(rest.graph);
  const VertexSet b_rest = rest.map_set(b);
  Integer sum = 0;
  for_each_independent_subset(g, a, [&](const VertexSet& w) {
    sum += delta_sets(engine, rest.map_set(neighborhood(g, w)), b_rest).value();
    return true;
  });
  return DeltaValue(-sum);
}

OverlapBound delta_nondisjoint_bound(const Graph& g, const VertexSet& a, const VertexSet& b) {
  g.require_subset(a, "set A");
  g.require_subset(b, "set B");
  const VertexSet common = a & b;
  if (common.empty()) throw InvalidArgument("overlap bound needs A n B to be non-empty");

  Deletion rest = delete_vertices(g, common);
  return {delta_sets(g, a, b),
          delta_sets(rest.graph, rest.map_set(a - common), rest.map_set(b - common))};
}

}  // namespace msc
