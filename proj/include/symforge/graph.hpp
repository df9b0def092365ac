#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "symforge/core.hpp"
#include "symforge/vect.hpp"

namespace symforge {

using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph with bitset adjacency rows and optional
/// vector labels (present on non-zero component graphs).
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order);

  /// Throws std::invalid_argument on self-loops or out-of-range ids.
  /// Duplicate edges are ignored.
  static Graph from_edges(std::size_t order, const std::vector<Edge>& edges);

  void add_edge(Vertex u, Vertex v);

  std::size_t order() const { return rows_.size(); }
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  const VertexSet& neighbors(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return rows_[v].count(); }
  std::size_t edge_count() const;

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::optional<Vect>& label(Vertex v) const;
  void set_labels(std::vector<std::optional<Vect>> labels);

  bool is_connected() const;
  /// Connected components, each sorted; components ordered by least vertex.
  std::vector<std::vector<Vertex>> components() const;

  /// Structural equality (labels ignored).
  bool same_structure(const Graph& other) const { return rows_ == other.rows_; }

 private:
  std::vector<VertexSet> rows_;
  std::vector<std::optional<Vect>> labels_;
};

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
/// K_{1,leaves}; the centre is vertex 0.
Graph star_graph(std::size_t leaves);
/// Smallest asymmetric tree: a 7-vertex spider with legs of length 1, 2, 3.
Graph asymmetric_tree();

}  // namespace symforge
