#include "doctest.h"

#include "msc/generators.hpp"
#include "msc/io.hpp"
#include "msc/verify.hpp"
#include "oracles.hpp"

using namespace msc;

TEST_CASE("predicted signs") {
  CHECK(predicted_pair_sign(Distance::finite(1)) == 1);
  CHECK(predicted_pair_sign(Distance::finite(2)) == -1);
  CHECK(predicted_pair_sign(Distance::infinite()) == 0);
  CHECK(predicted_set_sign(ParityClass::Even) == -1);
  CHECK(predicted_set_sign(ParityClass::Odd) == 1);
  CHECK(predicted_set_sign(ParityClass::Infinite) == 0);
  CHECK_FALSE(predicted_set_sign(ParityClass::Mixed).has_value());
}

TEST_CASE("pair verdicts") {
  auto k2 = verify_msc_pairs(complete_graph(2), "k2");
  REQUIRE(k2.size() == 1);
  CHECK(k2[0].graph_id == "k2");
  CHECK(k2[0].distance == Distance::finite(1));
  CHECK(k2[0].delta.value() == 1);
  CHECK(k2[0].conforms);

  auto iso = verify_msc_pairs(Graph(2));
  CHECK(iso[0].delta.value() == 0);
  CHECK(iso[0].conforms);

  Rng rng(61);
  for (int t = 0; t < 100; ++t) {
    Graph tree = random_tree(rng.between(2, 10), rng);
    auto verdicts = verify_msc_pairs(tree);
    CHECK(verdicts.size() == static_cast<std::size_t>(tree.order() * (tree.order() - 1) / 2));
    for (const auto& v : verdicts) CHECK(v.conforms);
  }
}

TEST_CASE("pair verdicts are recomputable from the oracle") {
  Rng rng(67);
  for (int t = 0; t < 50; ++t) {
    Graph g = erdos_renyi(rng.between(2, 20), 0.3, rng);
    auto d = oracle::distances(g);
    for (const auto& v : verify_msc_pairs(g)) {
      CHECK(v.delta.value() == oracle::delta(g, {v.u}, {v.v}));
      int expected = d[v.u][v.v] < 0 ? 0 : (d[v.u][v.v] % 2 ? 1 : -1);
      CHECK(v.conforms == (v.delta.sign() == expected));
    }
  }
}

TEST_CASE("set verdicts") {
  auto k1 = verify_gmsc_sets(complete_graph(1), SetMode::all());
  REQUIRE(k1.size() == 1);
  CHECK(k1[0].parity == ParityClass::Even);
  CHECK(k1[0].delta.value() == -1);
  CHECK(k1[0].conforms == true);

  auto split = verify_gmsc_sets(Graph(2), SetMode::all());
  CHECK(split.size() == 9);
  for (const auto& v : split)
    if (v.a == VertexSet{0} && v.b == VertexSet{1}) {
      CHECK(v.parity == ParityClass::Infinite);
      CHECK(v.delta.value() == 0);
      CHECK(v.conforms == true);
    }

  auto mixed = verify_gmsc_sets(cycle_graph(5), SetMode::all());
  CHECK(mixed.size() == 31 * 31);
  bool saw_mixed = false;
  for (const auto& v : mixed)
    if (v.parity == ParityClass::Mixed) {
      saw_mixed = true;
      CHECK_FALSE(v.conforms.has_value());
    }
  CHECK(saw_mixed);

  CHECK_THROWS_AS(verify_gmsc_sets(Graph(9), SetMode::all()), ResourceLimit);
  CHECK(verify_gmsc_sets(Graph(9), SetMode::sample(50, 3)).size() == 50);
}

TEST_CASE("trichotomy on small parity graphs") {
  for (int n = 1; n <= 4; ++n)
    enumerate_labeled_graphs(n, [&](std::uint64_t, const Graph& g) {
      if (!is_parity_graph(g)) return true;
      for (const auto& v : verify_gmsc_sets(g, SetMode::all()))
        if (v.conforms.has_value()) CHECK(*v.conforms);
      return true;
    });
}

TEST_CASE("sampled set verdicts are reproducible") {
  Graph g = grid_graph(3, 3);
  auto a = verify_gmsc_sets(g, SetMode::sample(200, 9));
  auto b = verify_gmsc_sets(g, SetMode::sample(200, 9));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].a == b[i].a);
    CHECK(a[i].b == b[i].b);
    CHECK(!a[i].a.empty());
    CHECK(!a[i].b.empty());
  }
}

TEST_CASE("identity suite") {
  auto k1 = verify_identities(complete_graph(1), 5, 1);
  CHECK(k1.ok());
  CHECK(k1.tally(Identity::Overlap).checked == 5);

  auto u = verify_identities(disjoint_union(path_graph(4), cycle_graph(5)), 50, 2);
  CHECK(u.ok());
  CHECK(u.tally(Identity::Separation).checked > 0);
  CHECK(u.tally(Identity::NeighborhoodExpansion).checked > 0);
  CHECK(to_string(Identity::ParityFlip) == "parity-flip");
}

TEST_CASE("search") {
  CHECK(search_labeled_counterexamples(3).empty());
  auto records = search_labeled_counterexamples(6, {.max_records = std::numeric_limits<std::size_t>::max(),
                                                    .minimal_order_only = true});
  REQUIRE(!records.empty());
  for (const auto& r : records) {
    CHECK(r.graph.order() == 5);
    CHECK(r.is_parity == false);
    CHECK(r.delta.value() == r.sigma_without_u * r.sigma_without_v - r.sigma_whole * r.sigma_without_both);
  }
  const auto& first = records.front();
  CHECK(first.sigma_whole == 9);
  CHECK(first.sigma_without_u == 6);
  CHECK(first.sigma_without_v == 6);
  CHECK(first.sigma_without_both == 4);
  CHECK(first.delta.value() == 0);
  auto pairs = verify_msc_pairs(first.graph);
  CHECK(std::any_of(pairs.begin(), pairs.end(), [](const PairVerdict& v) { return !v.conforms; }));
}

TEST_CASE("serial and parallel execution agree") {
  std::vector<GraphEntry> corpus;
  Rng rng(71);
  for (int i = 0; i < 300; ++i) corpus.push_back({std::to_string(i), erdos_renyi(rng.between(1, 8), 0.5, rng)});

  auto s = search_counterexamples(corpus, {}, Execution::Serial);
  auto p = search_counterexamples(corpus, {}, Execution::Parallel);
  REQUIRE(s.size() == p.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(s[i].graph_id == p[i].graph_id);
    CHECK(s[i].u == p[i].u);
    CHECK(s[i].v == p[i].v);
  }
  for (std::size_t i = 1; i < s.size(); ++i) {
    auto key = [](const CounterexampleRecord& r) {
      return std::tuple(r.graph.order(), r.graph.edge_count(), r.stream_index, r.u, r.v);
    };
    CHECK(key(s[i - 1]) < key(s[i]));
  }

  CorpusOptions options;
  options.sets = true;
  options.set_samples = 20;
  options.identity_trials = 2;
  options.seed = 5;
  auto vs = verify_corpus(corpus, options, Execution::Serial);
  auto vp = verify_corpus(corpus, options, Execution::Parallel);
  REQUIRE(vs.size() == vp.size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    CHECK(vs[i].id == vp[i].id);
    CHECK(vs[i].pair_violations() == vp[i].pair_violations());
    CHECK(vs[i].set_violations() == vp[i].set_violations());
    CHECK(vs[i].sets.size() == vp[i].sets.size());
    CHECK(vs[i].identities.ok());
  }
}

TEST_CASE("parity filter") {
  std::vector<GraphEntry> corpus{{"c5", cycle_graph(5)}, {"c6", cycle_graph(6)}};
  CorpusOptions options;
  options.only_parity = true;
  auto out = verify_corpus(corpus, options);
  CHECK(out[0].filtered_out);
  CHECK(out[0].pairs.empty());
  CHECK_FALSE(out[1].filtered_out);
  CHECK(out[1].pairs.size() == 15);
}
