#include "msc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <limits>
#include <optional>
#include <vector>

#include "CLI11.hpp"

#include "msc/generators.hpp"
#include "msc/report.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace msc {

namespace {

struct Globals {
  std::string format = "table";
  std::uint64_t seed = 1;
  int cap_parity = kParityGraphCap;
  int cap_exhaustive = kExhaustiveSetCap;
  int cap_labeled = kLabeledEnumerationCap;
};

VertexSet parse_set_list(const std::string& text) {
  VertexSet s;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t comma = text.find(',', i);
    std::string word = text.substr(i, comma == std::string::npos ? std::string::npos : comma - i);
    i = comma == std::string::npos ? text.size() : comma + 1;
    if (word.empty()) continue;
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(word, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != word.size() || v < 0) throw InvalidArgument("bad vertex '" + word + "' in set list '" + text + "'");
    s.insert(v);
  }
  return s;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <class Fn>
double best_time(int repeat, Fn&& fn) {
  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < std::max(1, repeat); ++r) {
    auto start = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, seconds_since(start));
  }
  return best;
}

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<GraphEntry> to_entries(std::vector<GraphDocument> docs) {
  std::vector<GraphEntry> out;
  out.reserve(docs.size());
  for (auto& d : docs) out.push_back({std::move(d.source_id), std::move(d.graph)});
  return out;
}

int cmd_sigma(const std::string& input, const std::string& method, ReportWriter& report) {
  for (const GraphDocument& doc : load_graphs(input)) {
    Count value;
    if (method == "engine")
      value = sigma(doc.graph);
    else if (method == "naive")
      value = sigma_naive(doc.graph);
    else if (method == "naive-parallel")
      value = sigma_naive_parallel(doc.graph);
    else if (method == "table")
      value = SigmaTable(doc.graph).count();
    else
      throw InvalidArgument("unknown sigma method '" + method + "'");
    report.emit(Json{{"record", "sigma"},
                     {"graph", doc.source_id},
                     {"n", doc.graph.order()},
                     {"m", doc.graph.edge_count()},
                     {"sigma", value.str()}});
  }
  return kExitOk;
}

int cmd_delta(const std::string& input, std::optional<int> u, std::optional<int> v,
              const std::optional<std::string>& set_a, const std::optional<std::string>& set_b,
              ReportWriter& report) {
  const bool vertex_mode = u || v;
  const bool set_mode = set_a || set_b;
  if (vertex_mode == set_mode || (vertex_mode && !(u && v)) || (set_mode && !(set_a && set_b)))
    throw InvalidArgument("delta needs either --u and --v, or --set-a and --set-b");

  for (const GraphDocument& doc : load_graphs(input)) {
    const Graph& g = doc.graph;
    VertexSet a, b;
    if (vertex_mode) {
      g.require_vertex(*u, "vertex u");
      g.require_vertex(*v, "vertex v");
      a.insert(*u);
      b.insert(*v);
    } else {
      a = parse_set_list(*set_a);
      b = parse_set_list(*set_b);
    }
    SigmaEngine engine(g);
    DeltaTerms t = delta_terms(engine, a, b);
    const ParityClass parity = (a.empty() || b.empty()) ? ParityClass::Infinite : classify_parity(g, a, b);
    Json rec{{"record", "delta"},
             {"graph", doc.source_id},
             {"a", set_json(a)},
             {"b", set_json(b)},
             {"sigma", t.whole.str()},
             {"sigma_without_a", t.without_a.str()},
             {"sigma_without_b", t.without_b.str()},
             {"sigma_without_ab", t.without_both.str()},
             {"delta", t.delta.to_string()},
             {"sign", t.delta.sign()}};
    if (vertex_mode) rec["distance"] = distance_json(distance(g, *u, *v));
    rec["parity"] = std::string(to_string(parity));
    report.emit(rec);
  }
  return kExitOk;
}

int cmd_paths(const std::string& input, const std::string& set_a, const std::string& set_b, ReportWriter& report) {
  const VertexSet a = parse_set_list(set_a), b = parse_set_list(set_b);
  for (const GraphDocument& doc : load_graphs(input)) {
    std::size_t count = 0;
    for_each_induced_ab_path(doc.graph, a, b, [&](std::span<const int> p) {
      Json vertices = Json::array();
      for (int x : p) vertices.push_back(x);
      report.emit(Json{{"record", "path"},
                       {"graph", doc.source_id},
                       {"vertices", vertices},
                       {"length", static_cast<int>(p.size()) - 1}});
      ++count;
      return true;
    });
    report.emit(Json{{"record", "parity"},
                     {"graph", doc.source_id},
                     {"a", set_json(a)},
                     {"b", set_json(b)},
                     {"paths", count},
                     {"class", std::string(to_string(classify_parity(doc.graph, a, b)))}});
  }
  return kExitOk;
}

int cmd_classify(const std::string& input, const Globals& globals, ReportWriter& report) {
  for (const GraphDocument& doc : load_graphs(input)) {
    const Graph& g = doc.graph;
    report.emit(Json{{"record", "classify"},
                     {"graph", doc.source_id},
                     {"n", g.order()},
                     {"m", g.edge_count()},
                     {"components", connected_components(g).size()},
                     {"bipartite", is_bipartite(g)},
                     {"parity_graph", is_parity_graph(g, globals.cap_parity)}});
  }
  return kExitOk;
}

struct VerifyFlags {
  std::string input;
  bool sets = false;
  std::optional<std::size_t> sample;
  int trials = 0;
  bool only_parity = false;
  bool all_verdicts = false;
  bool serial = false;
};

int cmd_verify(const VerifyFlags& flags, const Globals& globals, ReportWriter& report) {
  auto graphs = to_entries(load_graphs(flags.input));
  CorpusOptions options;
  options.sets = flags.sets;
  options.set_samples = flags.sample;
  options.identity_trials = flags.trials;
  options.seed = globals.seed;
  options.only_parity = flags.only_parity;
  options.parity_cap = globals.cap_parity;
  options.exhaustive_cap = globals.cap_exhaustive;

  report.emit(Json{{"record", "config"},
                   {"command", "verify"},
                   {"input", flags.input},
                   {"graphs", graphs.size()},
                   {"seed", globals.seed},
                   {"sets", flags.sets},
                   {"sample", flags.sample ? Json(*flags.sample) : Json(nullptr)},
                   {"trials", flags.trials},
                   {"only_parity", flags.only_parity},
                   {"cap_parity", globals.cap_parity},
                   {"cap_exhaustive", globals.cap_exhaustive}});

  auto results = verify_corpus(graphs, options, flags.serial ? Execution::Serial : Execution::Parallel);

  std::uint64_t verified = 0, parity_graphs = 0, pair_total = 0, pair_bad = 0, set_total = 0, set_bad = 0,
                set_mixed = 0;
  IdentityReport identities;
  for (const GraphVerification& r : results) {
    if (r.is_parity.value_or(false)) ++parity_graphs;
    if (r.filtered_out) continue;
    ++verified;
    for (const PairVerdict& p : r.pairs) {
      ++pair_total;
      if (!p.conforms) ++pair_bad;
      if (!p.conforms || flags.all_verdicts) report.emit(to_record(p));
    }
    for (const SetVerdict& s : r.sets) {
      ++set_total;
      if (!s.conforms) ++set_mixed;
      const bool bad = s.conforms.has_value() && !*s.conforms;
      if (bad) ++set_bad;
      if (bad || flags.all_verdicts) report.emit(to_record(s));
    }
    for (const IdentityFailure& f : r.identities.failures) report.emit(to_record(f, r.id));
    identities.merge(r.identities);
  }
  std::uint64_t identity_checks = 0;
  if (flags.trials > 0)
    for (std::size_t i = 0; i < kIdentityCount; ++i) {
      const IdentityTally& t = identities.tallies[i];
      identity_checks += t.checked;
      report.emit(Json{{"record", "identity"},
                       {"identity", std::string(to_string(static_cast<Identity>(i)))},
                       {"checked", t.checked},
                       {"failed", t.failed},
                       {"skipped", t.skipped}});
    }
  report.emit(Json{{"record", "summary"},
                   {"graphs", graphs.size()},
                   {"verified", verified},
                   {"parity_graphs", parity_graphs},
                   {"pair_verdicts", pair_total},
                   {"pair_violations", pair_bad},
                   {"set_verdicts", set_total},
                   {"set_violations", set_bad},
                   {"set_mixed", set_mixed},
                   {"identity_checks", identity_checks},
                   {"identity_failures", identities.failures.size()}});
  return pair_bad + set_bad + identities.failures.size() > 0 ? kExitViolations : kExitOk;
}

struct SearchFlags {
  int max_n = 6;
  std::optional<std::string> graph6;
  std::size_t max_records = 0;
  bool minimal = false;
  bool serial = false;
};

int cmd_search(const SearchFlags& flags, const Globals& globals, ReportWriter& report) {
  SearchLimits limits;
  if (flags.max_records > 0) limits.max_records = flags.max_records;
  limits.minimal_order_only = flags.minimal;
  limits.parity_cap = globals.cap_parity;
  const Execution exec = flags.serial ? Execution::Serial : Execution::Parallel;

  std::vector<CounterexampleRecord> records;
  std::size_t scanned = 0;
  if (flags.graph6) {
    std::vector<GraphEntry> graphs;
    for (auto& e : to_entries(load_graphs(*flags.graph6)))
      if (e.graph.order() <= flags.max_n) graphs.push_back(std::move(e));
    scanned = graphs.size();
    records = search_counterexamples(graphs, limits, exec);
  } else {
    const int hard_cap = std::min(globals.cap_labeled, kLabeledEnumerationCap);
    if (flags.max_n > hard_cap)
      throw ResourceLimit("labeled search is capped at n <= " + std::to_string(hard_cap) + " (got --max-n " +
                          std::to_string(flags.max_n) + ")");
    records = search_labeled_counterexamples(flags.max_n, limits, exec);
    for (int n = 0; n <= flags.max_n; ++n) {
      scanned += labeled_graph_count(n);
      if (flags.minimal && !records.empty() && records.front().graph.order() == n) break;
    }
  }

  report.emit(Json{{"record", "config"},
                   {"command", "search"},
                   {"source", flags.graph6 ? *flags.graph6 : std::string("labeled")},
                   {"max_n", flags.max_n},
                   {"max_records", flags.max_records},
                   {"minimal", flags.minimal},
                   {"cap_parity", globals.cap_parity}});
  for (const CounterexampleRecord& r : records) report.emit(to_record(r));
  report.emit(Json{{"record", "summary"}, {"graphs_scanned", scanned}, {"records", records.size()}});
  return records.empty() ? kExitOk : kExitViolations;
}

struct BenchFlags {
  std::string family;
  int size = 0;
  int size2 = 0;
  double p = 0.1;
  int repeat = 3;
};

int cmd_bench(const BenchFlags& flags, const Globals& globals, ReportWriter& report) {
  Graph g;
  if (flags.family == "gnp") {
    Rng rng(globals.seed);
    g = erdos_renyi(flags.size, flags.p, rng);
  } else {
    g = generate_family(parse_family(flags.family), flags.size, flags.size2);
  }
  Count value;
  const double engine = best_time(flags.repeat, [&] { value = sigma(g); });
  Json rec{{"record", "bench"}, {"family", flags.family}, {"n", g.order()}, {"m", g.edge_count()},
           {"sigma", value.str()}, {"threads", thread_count()}, {"engine_seconds", engine}};
  if (g.order() <= kNaiveSigmaCap) {
    rec["naive_seconds"] = best_time(flags.repeat, [&] { sigma_naive(g); });
    rec["naive_parallel_seconds"] = best_time(flags.repeat, [&] { sigma_naive_parallel(g); });
  } else {
    rec["naive_seconds"] = nullptr;
    rec["naive_parallel_seconds"] = nullptr;
  }
  report.emit(rec);
  return kExitOk;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Independent-set counts, Merrifield-Simmons Delta and parity-graph verification", "msc"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_option("--format", globals.format, "Output format")->check(CLI::IsMember({"table", "records"}));
  app.add_option("--seed", globals.seed, "Seed for sampled verification and random graphs");
  app.add_option("--cap-parity", globals.cap_parity, "Largest n for parity-graph recognition")
      ->check(CLI::Range(0, kMaxVertices));
  app.add_option("--cap-exhaustive", globals.cap_exhaustive, "Largest n for exhaustive subset-pair checks")
      ->check(CLI::Range(0, 16));
  app.add_option("--cap-labeled", globals.cap_labeled, "Largest n for labeled graph enumeration")
      ->check(CLI::Range(0, kLabeledEnumerationCap));

  std::string input;
  std::string method = "engine";
  auto* sigma_cmd = app.add_subcommand("sigma", "Count independent sets");
  sigma_cmd->add_option("graph", input, "Graph file, '-' or g6:<code>")->required();
  sigma_cmd->add_option("--method", method, "engine | naive | naive-parallel | table")
      ->check(CLI::IsMember({"engine", "naive", "naive-parallel", "table"}));

  std::optional<int> u, v;
  std::optional<std::string> set_a, set_b;
  auto* delta_cmd = app.add_subcommand("delta", "Evaluate Delta for a vertex pair or two vertex sets");
  delta_cmd->add_option("graph", input, "Graph file, '-' or g6:<code>")->required();
  delta_cmd->add_option("--u", u, "First vertex");
  delta_cmd->add_option("--v", v, "Second vertex");
  delta_cmd->add_option("--set-a", set_a, "Comma-separated vertex set A");
  delta_cmd->add_option("--set-b", set_b, "Comma-separated vertex set B");

  std::string paths_a, paths_b;
  auto* paths_cmd = app.add_subcommand("paths", "List induced A-B-paths and their parity class");
  paths_cmd->add_option("graph", input, "Graph file, '-' or g6:<code>")->required();
  paths_cmd->add_option("--set-a", paths_a, "Comma-separated vertex set A")->required();
  paths_cmd->add_option("--set-b", paths_b, "Comma-separated vertex set B")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Bipartite and parity-graph flags");
  classify_cmd->add_option("graph", input, "Graph file, '-' or g6:<code>")->required();

  VerifyFlags verify_flags;
  auto* verify_cmd = app.add_subcommand("verify", "Check Delta signs against distance and path parity");
  verify_cmd->add_option("graphs", verify_flags.input, "Graph file, '-' or g6:<code>")->required();
  verify_cmd->add_flag("--sets", verify_flags.sets, "Also check vertex-subset pairs");
  verify_cmd->add_option("--sample", verify_flags.sample, "Sampled subset pairs per graph (default: exhaustive)");
  verify_cmd->add_option("--trials", verify_flags.trials, "Identity-suite trials per graph")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_flag("--only-parity", verify_flags.only_parity, "Skip graphs that are not parity graphs");
  verify_cmd->add_flag("--all-verdicts", verify_flags.all_verdicts, "Emit conforming verdicts too");
  verify_cmd->add_flag("--serial", verify_flags.serial, "Run on one thread");

  SearchFlags search_flags;
  auto* search_cmd = app.add_subcommand("search", "Search for graphs violating the distance sign rule");
  search_cmd->add_option("--max-n", search_flags.max_n, "Largest vertex count scanned")->check(CLI::NonNegativeNumber);
  search_cmd->add_option("--graph6", search_flags.graph6, "Scan a graph6 file instead of labeled graphs");
  search_cmd->add_option("--max-records", search_flags.max_records, "Keep at most this many records (0: all)");
  search_cmd->add_flag("--minimal", search_flags.minimal, "Stop at the smallest vertex count with records");
  search_cmd->add_flag("--serial", search_flags.serial, "Run on one thread");

  BenchFlags bench_flags;
  auto* bench_cmd = app.add_subcommand("bench", "Time sigma on a generated graph");
  bench_cmd->add_option("--family", bench_flags.family, "path | cycle | complete | complete_bipartite | star | grid | gnp")
      ->required();
  bench_cmd->add_option("--size", bench_flags.size, "Family size (n, first part, rows)")->required();
  bench_cmd->add_option("--size2", bench_flags.size2, "Second size (complete_bipartite, grid)");
  bench_cmd->add_option("--p", bench_flags.p, "Edge probability for gnp")->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_option("--repeat", bench_flags.repeat, "Repetitions; the best time is reported");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    ReportWriter report(out, parse_output_format(globals.format));
    if (sigma_cmd->parsed()) return cmd_sigma(input, method, report);
    if (delta_cmd->parsed()) return cmd_delta(input, u, v, set_a, set_b, report);
    if (paths_cmd->parsed()) return cmd_paths(input, paths_a, paths_b, report);
    if (classify_cmd->parsed()) return cmd_classify(input, globals, report);
    if (verify_cmd->parsed()) return cmd_verify(verify_flags, globals, report);
    if (search_cmd->parsed()) return cmd_search(search_flags, globals, report);
    if (bench_cmd->parsed()) return cmd_bench(bench_flags, globals, report);
  } catch (const ResourceLimit& e) {
    err << "msc: resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const ParseError& e) {
    err << "msc: parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "msc: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace msc
