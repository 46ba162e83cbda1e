#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace spinnet {

/// Simple undirected graph on vertices 1..n: no self-loops, no multi-edges.
/// Immutable once constructed; edges are stored sorted with u < v.
class Graph {
 public:
  /// Builds a graph from an arbitrary edge list. Duplicate edges and both
  /// orientations of the same edge collapse to one. Throws input_error for
  /// n < 1, endpoints outside 1..n, or self-loops.
  static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

  /// Open chain 1-2-...-n (n >= 2).
  static Graph path(int n);
  /// Closed chain on n vertices (n >= 3).
  static Graph cycle(int n);
  /// All pairs adjacent (n >= 2).
  static Graph complete(int n);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  int degree(int v) const;
  bool adjacent(int u, int v) const;

  /// Dense 0/1 adjacency matrix, n x n, symmetric, zero diagonal.
  Eigen::MatrixXd adjacency_matrix() const;

 private:
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int n_;
  std::vector<std::pair<int, int>> edges_;
};

/// True when some vertex has degree zero (it never couples to the rest).
bool has_isolated_vertex(const Graph& g);

/// Edge-list text format (UTF-8): '#' starts a comment that runs to end of
/// line; the first data line is "n <vertex_count>"; every following data
/// line is "u v" with 1-based endpoints. Blank lines are ignored.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
Graph load_edge_list(const std::string& path);

/// Serializes in the same format parse_edge_list accepts (round-trips).
std::string to_edge_list(const Graph& g);

}  // namespace spinnet
