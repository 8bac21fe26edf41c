#include "ptcomp/edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "ptcomp/error.hpp"

namespace ptcomp {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view next_token(std::string_view& rest) {
  while (!rest.empty() && is_space(rest.front())) rest.remove_prefix(1);
  std::size_t len = 0;
  while (len < rest.size() && !is_space(rest[len])) ++len;
  auto tok = rest.substr(0, len);
  rest.remove_prefix(len);
  return tok;
}

std::uint64_t parse_id(std::string_view tok, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line_no, "expected an unsigned integer, got '" + std::string(tok) + "'");
  return value;
}

}  // namespace

std::vector<LabelPair> read_label_pairs(std::istream& in) {
  std::vector<LabelPair> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest(line);
    while (!rest.empty() && is_space(rest.front())) rest.remove_prefix(1);
    if (rest.empty() || rest.front() == '#') continue;
    auto a = next_token(rest);
    auto b = next_token(rest);
    if (b.empty()) throw ParseError(line_no, "expected two vertex ids");
    auto u = parse_id(a, line_no);
    auto v = parse_id(b, line_no);
    if (!next_token(rest).empty()) throw ParseError(line_no, "trailing data after vertex pair");
    pairs.emplace_back(u, v);
  }
  if (in.bad()) throw Error("read failure");
  return pairs;
}

EdgeListLoad load_edge_list(std::istream& in) {
  auto pairs = read_label_pairs(in);
  for (const auto& [a, b] : pairs)
    if (a == b) throw InvalidInput("self-loop on vertex " + std::to_string(a) + " rejected");

  std::vector<std::uint64_t> labels;
  labels.reserve(pairs.size() * 2);
  for (const auto& [a, b] : pairs) {
    labels.push_back(a);
    labels.push_back(b);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  auto id_of = [&](std::uint64_t label) {
    return static_cast<VertexId>(std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) edges.push_back(Edge::of(id_of(a), id_of(b)));
  std::sort(edges.begin(), edges.end());
  auto last = std::unique(edges.begin(), edges.end());
  EdgeListLoad result;
  result.duplicate_edges = static_cast<std::size_t>(edges.end() - last);
  edges.erase(last, edges.end());
  const std::size_t n = labels.size();
  result.graph = Graph::from_edges(n, edges, std::move(labels));
  return result;
}

EdgeListLoad parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_edge_list(in);
}

Graph subgraph_from_labels(const Graph& host, const std::vector<LabelPair>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    auto u = host.find_label(a);
    auto v = host.find_label(b);
    if (!u || !v || !host.has_edge(*u, *v))
      throw StructuralError("edge (" + std::to_string(a) + "," + std::to_string(b) + ") is not in the original graph");
    edges.push_back(Edge::of(*u, *v));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return host.with_edges(edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (const Edge& e : g.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
}

}  // namespace ptcomp
