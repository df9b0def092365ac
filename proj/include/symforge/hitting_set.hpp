#pragma once

#include <optional>
#include <vector>

#include "symforge/core.hpp"

namespace symforge {

/// Deduplicated, inclusion-minimal subfamily; a set meets every input
/// constraint iff it meets every returned one. Sorted by size, then bits.
std::vector<VertexSet> minimal_constraints(std::vector<VertexSet> constraints);

/// Exact minimum hitting set by branch and bound.
///
/// Branches on the open constraint with the fewest admissible vertices,
/// trying its vertices in `priority` order; later branches exclude the
/// vertices tried before them. The lower bound is a greedy packing of
/// pairwise-disjoint open constraints, the initial incumbent a greedy cover.
/// The incumbent is replaced only by strictly smaller sets, so the witness
/// is deterministic. Returns nullopt when some constraint is empty.
std::optional<VertexSet> min_hitting_set(std::size_t universe, std::vector<VertexSet> constraints,
                                         const std::vector<Vertex>& priority);

}  // namespace symforge
