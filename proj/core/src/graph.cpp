#include "spinnet/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "spinnet/errors.hpp"

namespace spinnet {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n), edges_(std::move(edges)) {}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) throw input_error("graph needs at least one vertex, got n=" + std::to_string(n));
  std::vector<std::pair<int, int>> normalized;
  normalized.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw input_error("edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") out of range 1.." + std::to_string(n));
    }
    if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
    normalized.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());
  return Graph(n, std::move(normalized));
}

Graph Graph::path(int n) {
  if (n < 2) throw input_error("path graph needs n >= 2, got n=" + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return from_edge_list(n, edges);
}

Graph Graph::cycle(int n) {
  if (n < 3) throw input_error("cycle graph needs n >= 3, got n=" + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(n, 1);
  return from_edge_list(n, edges);
}

Graph Graph::complete(int n) {
  if (n < 2) throw input_error("complete graph needs n >= 2, got n=" + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
  return from_edge_list(n, edges);
}

int Graph::degree(int v) const {
  if (v < 1 || v > n_) throw input_error("vertex " + std::to_string(v) + " out of range");
  int d = 0;
  for (auto [a, b] : edges_)
    if (a == v || b == v) ++d;
  return d;
}

bool Graph::adjacent(int u, int v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_) throw input_error("vertex out of range");
  auto e = std::make_pair(std::min(u, v), std::max(u, v));
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

Eigen::MatrixXd Graph::adjacency_matrix() const {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
  for (auto [u, v] : edges_) {
    a(u - 1, v - 1) = 1.0;
    a(v - 1, u - 1) = 1.0;
  }
  return a;
}

bool has_isolated_vertex(const Graph& g) {
  std::vector<bool> touched(static_cast<size_t>(g.vertex_count()) + 1, false);
  for (auto [u, v] : g.edges()) {
    touched[u] = true;
    touched[v] = true;
  }
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (!touched[v]) return true;
  return false;
}

namespace {

// Strips comments and whitespace; returns false for lines with no content.
bool data_line(const std::string& raw, std::string& out) {
  std::string line = raw;
  if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
  std::istringstream probe(line);
  std::string token;
  if (!(probe >> token)) return false;
  out = line;
  return true;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string raw, line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!data_line(raw, line)) continue;
    std::istringstream fields(line);
    if (n < 0) {
      std::string tag;
      fields >> tag;
      if (tag != "n") throw input_error("line " + std::to_string(lineno) +
                                        ": expected header \"n <count>\", got \"" + tag + "\"");
      if (!(fields >> n) || n < 1)
        throw input_error("line " + std::to_string(lineno) + ": bad vertex count");
      continue;
    }
    int u = 0, v = 0;
    if (!(fields >> u >> v))
      throw input_error("line " + std::to_string(lineno) + ": expected \"u v\"");
    std::string extra;
    if (fields >> extra)
      throw input_error("line " + std::to_string(lineno) + ": trailing token \"" + extra + "\"");
    edges.emplace_back(u, v);
  }
  if (n < 0) throw input_error("edge list has no \"n <count>\" header");
  return Graph::from_edge_list(n, edges);
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open edge list file: " + path);
  return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

}  // namespace spinnet
