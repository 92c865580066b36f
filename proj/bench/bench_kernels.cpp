/*
Serial reference vs OpenMP kernels, plus the sigma engine on the
Erdos-Renyi performance targets. Prints one line per measurement.
*/

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "msc/generators.hpp"
#include "msc/io.hpp"
#include "msc/verify.hpp"

using namespace msc;

namespace {

template <class Fn>
double time_ms(Fn&& fn) {
  auto t_1 = std::chrono::steady_clock::now();
  fn();
  auto t_2 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t_2 - t_1).count();
}

void compare(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-34s serial %10.2f ms   parallel %10.2f ms   speedup %5.2fx\n", name, serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main() {
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("threads %d\n", threads);

  {
    Rng rng(7);
    Graph g = erdos_renyi(24, 0.2, rng);
    Count a, b;
    double s = time_ms([&] { a = sigma_naive(g); });
    double p = time_ms([&] { b = sigma_naive_parallel(g); });
    compare("sigma_naive G(24, 0.2)", s, p);
    if (a != b) std::printf("MISMATCH %s vs %s\n", a.str().c_str(), b.str().c_str());
  }

  {
    std::vector<GraphEntry> corpus;
    for (std::uint64_t mask = 0; mask < labeled_graph_count(6); ++mask)
      corpus.push_back({"labeled:6:" + std::to_string(mask), labeled_graph(6, mask)});
    CorpusOptions options;
    options.only_parity = true;
    std::size_t a = 0, b = 0;
    double s = time_ms([&] { a = verify_corpus(corpus, options, Execution::Serial).size(); });
    double p = time_ms([&] { b = verify_corpus(corpus, options, Execution::Parallel).size(); });
    compare("verify_corpus labeled n=6", s, p);
    if (a != b) std::printf("MISMATCH\n");

    std::size_t ra = 0, rb = 0;
    s = time_ms([&] { ra = search_counterexamples(corpus, {}, Execution::Serial).size(); });
    p = time_ms([&] { rb = search_counterexamples(corpus, {}, Execution::Parallel).size(); });
    compare("search_counterexamples labeled n=6", s, p);
    if (ra != rb) std::printf("MISMATCH\n");
  }

  for (auto [n, prob] : {std::pair{50, 0.1}, std::pair{30, 0.5}, std::pair{60, 0.1}, std::pair{40, 0.3}}) {
    Rng rng(2024);
    Graph g = erdos_renyi(n, prob, rng);
    SigmaEngine engine(g);
    Count value;
    double ms = time_ms([&] { value = engine.count(); });
    auto st = engine.stats();
    std::printf("sigma engine G(%d, %.1f)  m=%-4d %10.2f ms   sigma=%s calls=%llu hits=%llu\n", n, prob,
                g.edge_count(), ms, value.str().c_str(), static_cast<unsigned long long>(st.calls),
                static_cast<unsigned long long>(st.cache_hits));
  }
  return 0;
}
