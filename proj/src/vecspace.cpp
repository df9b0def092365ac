#include "symforge/vecspace.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace symforge {

std::vector<Vect> enumerate_vectors(const Space& space, const Limits& limits) {
  const std::uint64_t count = space.nonzero_count();
  if (count > limits.max_order)
    throw ResourceError("space (n=" + std::to_string(space.n) + ", q=" + std::to_string(space.q) +
                        ") has " + std::to_string(count) + " vertices, cap is " +
                        std::to_string(limits.max_order));
  std::vector<Vect> out;
  out.reserve(count);
  // Base-q counter with coordinate 0 most significant gives lexicographic order.
  std::vector<int> digits(space.n, 0);
  for (std::uint64_t k = 0; k < count; ++k) {
    for (int i = space.n - 1; i >= 0; --i) {
      if (++digits[i] < space.q) break;
      digits[i] = 0;
    }
    out.push_back(Vect::from_coeffs(space, digits));
  }
  return out;
}

Vertex vertex_of(const Space& space, const Vect& v) {
  if (v.dim() != space.n || v.field() != space.q)
    throw std::invalid_argument("vector does not belong to this space");
  std::uint64_t rank = 0;
  for (int i = 0; i < space.n; ++i) rank = rank * space.q + v.coeff(i);
  return static_cast<Vertex>(rank - 1);
}

std::int64_t tier_class_size(const Space& space, int i) {
  if (i < 1 || i > space.n)
    throw std::out_of_range("tier " + std::to_string(i) + " outside 1.." + std::to_string(space.n));
  std::int64_t scale = 1;
  for (int k = 0; k < i; ++k) scale *= space.q - 1;
  return binomial(space.n, i) * scale;
}

Graph build_nzc_graph(const Space& space, const Limits& limits) {
  auto vectors = enumerate_vectors(space, limits);
  Graph g(vectors.size());
  for (Vertex u = 0; u < vectors.size(); ++u)
    for (Vertex v = u + 1; v < vectors.size(); ++v)
      if (vectors[u].skeleton() & vectors[v].skeleton()) g.add_edge(u, v);
  std::vector<std::optional<Vect>> labels(vectors.begin(), vectors.end());
  g.set_labels(std::move(labels));
  return g;
}

std::int64_t degree_formula(int n, int s) {
  if (n < 1 || n > 62) throw std::out_of_range("dimension out of range");
  if (s < 1 || s > n)
    throw std::out_of_range("tier " + std::to_string(s) + " outside 1.." + std::to_string(n));
  return ((std::int64_t{1} << s) - 1) * (std::int64_t{1} << (n - s)) - 1;
}

bool are_twins(const Graph& g, Vertex u, Vertex v) {
  VertexSet nu = g.neighbors(u);
  VertexSet nv = g.neighbors(v);
  nu.reset(v);
  nv.reset(u);
  return nu == nv;
}

std::vector<std::vector<Vertex>> twin_classes(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (find(u) != find(v) && are_twins(g, u, v)) parent[find(v)] = find(u);

  std::vector<std::vector<Vertex>> classes;
  std::vector<int> slot(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    Vertex root = find(v);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[slot[root]].push_back(v);
  }
  return classes;
}

}  // namespace symforge
