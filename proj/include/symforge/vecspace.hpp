#pragma once

#include <vector>

#include "symforge/core.hpp"
#include "symforge/graph.hpp"
#include "symforge/vect.hpp"

namespace symforge {

/// All q^n - 1 non-zero vectors, lexicographic on coefficient strings.
/// Vertex ids of the non-zero component graph follow this order.
/// Throws ResourceError when q^n - 1 exceeds the vertex cap.
std::vector<Vect> enumerate_vectors(const Space& space, const Limits& limits = default_limits());

/// Position of v in enumerate_vectors(space).
Vertex vertex_of(const Space& space, const Vect& v);

inline int tier(const Vect& v) { return v.tier(); }

/// |T_i| = C(n, i) (q - 1)^i. Throws std::out_of_range unless 1 <= i <= n.
std::int64_t tier_class_size(const Space& space, int i);

/// Non-zero component graph: u ~ v iff their skeletons intersect.
/// Vertices carry their vector as label.
Graph build_nzc_graph(const Space& space, const Limits& limits = default_limits());

/// Degree of a tier-s vertex when q = 2: (2^s - 1) 2^(n-s) - 1.
std::int64_t degree_formula(int n, int s);

/// Twin partition: u, v share a class iff N(u) \ {v} = N(v) \ {u}.
/// Classes are sorted internally and ordered by least member.
std::vector<std::vector<Vertex>> twin_classes(const Graph& g);

/// True iff N(u) \ {v} = N(v) \ {u}.
bool are_twins(const Graph& g, Vertex u, Vertex v);

}  // namespace symforge
