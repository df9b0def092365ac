#include "symforge/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace symforge {

Graph::Graph(std::size_t order) : rows_(order, VertexSet(order)) {}

Graph Graph::from_edges(std::size_t order, const std::vector<Edge>& edges) {
  Graph g(order);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= order() || v >= order())
    throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                ") out of range for order " + std::to_string(order()));
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  rows_[u].set(v);
  rows_[v].set(u);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : rows_) twice += row.count();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u)
    for (auto v = rows_[u].find_next(u); v != VertexSet::npos; v = rows_[u].find_next(v))
      out.emplace_back(u, static_cast<Vertex>(v));
  return out;
}

const std::optional<Vect>& Graph::label(Vertex v) const {
  static const std::optional<Vect> none;
  return labels_.empty() ? none : labels_.at(v);
}

void Graph::set_labels(std::vector<std::optional<Vect>> labels) {
  if (!labels.empty() && labels.size() != order())
    throw std::invalid_argument("label count does not match graph order");
  labels_ = std::move(labels);
}

std::vector<std::vector<Vertex>> Graph::components() const {
  std::vector<std::vector<Vertex>> out;
  VertexSet seen(order());
  for (Vertex start = 0; start < order(); ++start) {
    if (seen.test(start)) continue;
    std::vector<Vertex> comp{start};
    seen.set(start);
    for (std::size_t head = 0; head < comp.size(); ++head) {
      VertexSet fresh = rows_[comp[head]] - seen;
      for (auto w = fresh.find_first(); w != VertexSet::npos; w = fresh.find_next(w)) {
        seen.set(w);
        comp.push_back(static_cast<Vertex>(w));
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::is_connected() const { return order() <= 1 || components().size() == 1; }

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return g;
}

Graph path_graph(std::size_t n) {
  if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star_graph(std::size_t leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph asymmetric_tree() {
  return Graph::from_edges(7, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}});
}

}  // namespace symforge
