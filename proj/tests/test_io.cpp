#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "msc/errors.hpp"
#include "msc/generators.hpp"
#include "msc/io.hpp"

using namespace msc;

namespace {

std::size_t parse_error_at(std::string_view line) {
  try {
    parse_graph6(line);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no parse error for " << line);
  return 0;
}

std::size_t edgelist_error_at(std::string_view text) {
  try {
    parse_edgelist(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no parse error for " << text);
  return 0;
}

}  // namespace

TEST_CASE("graph6 base cases") {
  CHECK(parse_graph6("?") == Graph(0));
  CHECK(parse_graph6("@") == Graph(1));
  CHECK(parse_graph6("A_") == complete_graph(2));
  CHECK(parse_graph6("A?") == Graph(2));
  CHECK(parse_graph6(">>graph6<<A_") == complete_graph(2));
  CHECK(emit_graph6(complete_graph(2)) == "A_");
  CHECK(emit_graph6(Graph(0)) == "?");
  // K3: bits 111 then padding -> 111000 = 56, + 63 = 119 'w'
  CHECK(emit_graph6(complete_graph(3)) == "Bw");
  // P4 0-1-2-3: pairs (0,1) (0,2) (1,2) (0,3) (1,3) (2,3) -> 1 0 1 0 0 1 = 41 -> 'h'
  CHECK(emit_graph6(path_graph(4)) == "Ch");
}

TEST_CASE("graph6 long header") {
  Graph g = path_graph(70);
  std::string code = emit_graph6(g);
  // 70 = 1 * 64 + 6
  CHECK(code.substr(0, 4) == "~?@E");
  CHECK(parse_graph6(code) == g);
  Graph big = cycle_graph(128);
  CHECK(parse_graph6(emit_graph6(big)) == big);
  // a 4-byte header for a size that fits in one byte is not minimal
  CHECK(parse_error_at("~??A") == 0);
  // n = 129 is encodable but above the graph cap
  std::string header = "~?A@";
  CHECK_THROWS_AS(parse_graph6(header + std::string(1376, '?')), ResourceLimit);
}

TEST_CASE("graph6 errors carry byte offsets") {
  CHECK(parse_error_at("") == 0);
  CHECK(parse_error_at("A") == 1);
  CHECK(parse_error_at("A_?") == 2);
  CHECK(parse_error_at("A`") == 1);
  CHECK(parse_error_at("B\x7f") == 1);
  CHECK(parse_error_at("Bw ") == 2);
  CHECK(parse_error_at(" ") == 0);
}

TEST_CASE("graph6 round trip on labeled graphs") {
  for (int n = 0; n <= 5; ++n)
    enumerate_labeled_graphs(n, [&](std::uint64_t, const Graph& g) {
      CHECK(parse_graph6(emit_graph6(g)) == g);
      return true;
    });
  Rng rng(73);
  for (int t = 0; t < 200; ++t) {
    Graph g = erdos_renyi(rng.between(0, 128), rng.unit(), rng);
    CHECK(parse_graph6(emit_graph6(g)) == g);
  }
}

TEST_CASE("edge lists") {
  CHECK(parse_edgelist("2 1\n0 1\n") == complete_graph(2));
  CHECK(parse_edgelist("3 0") == Graph(3));
  CHECK(parse_edgelist("# comment\n\n3 2\n0 1\n\n1 2\n") == path_graph(3));
  CHECK(edgelist_error_at("2 1\n0 0\n") == 2);
  CHECK(edgelist_error_at("3 2\n0 1\n1 0\n") == 3);
  CHECK(edgelist_error_at("3 1\n0 3\n") == 2);
  CHECK(edgelist_error_at("3 2\n0 1\n") == 2);
  CHECK(edgelist_error_at("3 1\n0 1\n1 2\n") == 3);
  CHECK(edgelist_error_at("x\n") == 1);
  CHECK(edgelist_error_at("") == 1);
  Graph g = grid_graph(3, 3);
  CHECK(parse_edgelist(emit_edgelist(g)) == g);
}

TEST_CASE("streams and loading") {
  std::istringstream in("A_\n\n@\nBw\n");
  auto docs = read_graph6_stream(in, "mem");
  REQUIRE(docs.size() == 3);
  CHECK(docs[0].source_id == "mem:1");
  CHECK(docs[2].source_id == "mem:4");
  CHECK(docs[2].graph == complete_graph(3));

  auto inline_doc = load_graphs("g6:Ch");
  REQUIRE(inline_doc.size() == 1);
  CHECK(inline_doc[0].graph == path_graph(4));

  auto trees = load_graphs(std::string(MSC_TEST_DATA) + "/trees_n8.g6");
  CHECK(trees.size() == 23);

  std::string path = "msc_io_test_edges.dat";
  {
    std::ofstream out(path);
    out << emit_edgelist(cycle_graph(4));
  }
  auto sniffed = load_graphs(path);
  std::remove(path.c_str());
  REQUIRE(sniffed.size() == 1);
  CHECK(sniffed[0].format == GraphFormat::EdgeList);
  CHECK(sniffed[0].graph == cycle_graph(4));

  CHECK_THROWS(load_graphs("/nonexistent/file.g6"));
}
