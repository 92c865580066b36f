#include "msc/io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace msc {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kGraph6Header = ">>graph6<<";

int decode_byte(std::string_view s, std::size_t pos) {
  auto c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126)
    throw ParseError("graph6 byte " + std::to_string(c) + " outside 63..126 at offset " + std::to_string(pos), pos);
  return c - kBias;
}

void append_size(std::string& out, long long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.append(2, static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

bool parse_int(std::string_view word, long long& value) {
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  return ec == std::errc() && ptr == word.data() + word.size();
}

bool meaningful(std::string_view line) {
  line = trim(line);
  return !line.empty() && line.front() != '#';
}

bool looks_like_edgelist(std::string_view first_line) {
  auto words = split_words(trim(first_line));
  long long x = 0;
  return words.size() == 2 && parse_int(words[0], x) && parse_int(words[1], x);
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::vector<GraphDocument> read_edgelist_document(std::istream& in, const std::string& source) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  return {{parse_edgelist(buffer.str()), source, GraphFormat::EdgeList}};
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  std::size_t base = 0;
  if (line.starts_with(kGraph6Header)) base = kGraph6Header.size();
  std::string_view s = line;
  if (s.size() <= base) throw ParseError("empty graph6 string", base);

  std::size_t pos = base;
  long long n = 0;
  if (s[pos] != '~') {
    n = decode_byte(s, pos++);
  } else if (pos + 1 < s.size() && s[pos + 1] == '~') {
    if (s.size() < pos + 8) throw ParseError("truncated 8-byte graph6 size header", pos);
    for (std::size_t i = pos + 2; i < pos + 8; ++i) n = (n << 6) | decode_byte(s, i);
    if (n <= 258047) throw ParseError("non-minimal graph6 size header for n = " + std::to_string(n), pos);
    pos += 8;
  } else {
    if (s.size() < pos + 4) throw ParseError("truncated 4-byte graph6 size header", pos);
    for (std::size_t i = pos + 1; i < pos + 4; ++i) n = (n << 6) | decode_byte(s, i);
    if (n <= 62) throw ParseError("non-minimal graph6 size header for n = " + std::to_string(n), pos);
    pos += 4;
  }
  if (n > kMaxVertices)
    throw ResourceLimit("graph6 input has " + std::to_string(n) + " vertices; at most " +
                        std::to_string(kMaxVertices) + " are supported");

  const long long bits = n * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() - pos != body)
    throw ParseError("graph6 body has " + std::to_string(s.size() - pos) + " bytes, expected " +
                         std::to_string(body) + " for n = " + std::to_string(n),
                     std::min(s.size(), pos + body));

  std::vector<Edge> edges;
  long long k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k) {
      std::size_t at = pos + static_cast<std::size_t>(k / 6);
      if ((decode_byte(s, at) >> (5 - k % 6)) & 1) edges.emplace_back(u, v);
    }
  if (bits % 6 != 0) {
    const std::size_t last = pos + body - 1;
    const int padding = 6 - static_cast<int>(bits % 6);
    if (decode_byte(s, last) & ((1 << padding) - 1))
      throw ParseError("nonzero graph6 padding bits at offset " + std::to_string(last), last);
  }
  return Graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  std::string out;
  const int n = g.order();
  append_size(out, n);
  int acc = 0, filled = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph parse_edgelist(std::string_view text) {
  std::size_t line_no = 0;
  long long n = -1, m = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::size_t last_line = 0;

  while (!text.empty()) {
    std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++line_no;
    if (!meaningful(line)) continue;
    last_line = line_no;

    auto words = split_words(trim(line));
    long long x = 0, y = 0;
    if (words.size() != 2 || !parse_int(words[0], x) || !parse_int(words[1], y))
      throw ParseError("line " + std::to_string(line_no) + ": expected two integers", line_no);

    if (n < 0) {
      if (x < 0 || y < 0) throw ParseError("line " + std::to_string(line_no) + ": negative header value", line_no);
      if (x > kMaxVertices)
        throw ResourceLimit("edge list declares " + std::to_string(x) + " vertices; at most " +
                            std::to_string(kMaxVertices) + " are supported");
      n = x;
      m = y;
      continue;
    }
    if (static_cast<long long>(edges.size()) == m)
      throw ParseError("line " + std::to_string(line_no) + ": more edges than the declared " + std::to_string(m),
                       line_no);
    if (x < 0 || y < 0 || x >= n || y >= n)
      throw ParseError("line " + std::to_string(line_no) + ": vertex outside 0.." + std::to_string(n - 1), line_no);
    if (x == y) throw ParseError("line " + std::to_string(line_no) + ": self-loop at " + std::to_string(x), line_no);
    Edge e{static_cast<int>(std::min(x, y)), static_cast<int>(std::max(x, y))};
    if (!seen.insert(e).second)
      throw ParseError("line " + std::to_string(line_no) + ": duplicate edge " + std::to_string(e.first) + " " +
                           std::to_string(e.second),
                       line_no);
    edges.push_back(e);
  }
  if (n < 0) throw ParseError("missing 'n m' header", line_no == 0 ? 1 : line_no);
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError("declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()),
                     last_line == 0 ? 1 : last_line);
  return Graph(static_cast<int>(n), edges);
}

std::string emit_edgelist(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::vector<GraphDocument> read_graph6_stream(std::istream& in, std::string_view source) {
  std::vector<GraphDocument> out;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    std::string_view code = trim(line);
    if (code.empty()) continue;
    try {
      out.push_back({parse_graph6(code), std::string(source) + ":" + std::to_string(line_no), GraphFormat::Graph6});
    } catch (const ParseError& e) {
      throw ParseError(std::string(source) + ":" + std::to_string(line_no) + ": " + e.what(), e.position());
    }
  }
  return out;
}

std::vector<GraphDocument> load_graphs(const std::string& spec) {
  if (spec.starts_with("g6:"))
    return {{parse_graph6(std::string_view(spec).substr(3)), spec, GraphFormat::Graph6}};

  std::stringstream content;
  if (spec == "-") {
    content << std::cin.rdbuf();
  } else {
    std::ifstream file(spec, std::ios::binary);
    if (!file) throw InvalidArgument("cannot open graph file '" + spec + "'");
    content << file.rdbuf();
  }

  const std::string source = spec == "-" ? "stdin" : spec;
  bool edgelist;
  if (ends_with(spec, ".g6") || ends_with(spec, ".graph6")) {
    edgelist = false;
  } else if (ends_with(spec, ".el") || ends_with(spec, ".edges") || ends_with(spec, ".txt")) {
    edgelist = true;
  } else {
    std::string line;
    edgelist = false;
    std::stringstream sniff(content.str());
    while (std::getline(sniff, line))
      if (meaningful(line)) {
        edgelist = looks_like_edgelist(line);
        break;
      }
  }
  return edgelist ? read_edgelist_document(content, source) : read_graph6_stream(content, source);
}

}  // namespace msc
