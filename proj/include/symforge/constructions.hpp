#pragma once

#include <cstdint>

#include "symforge/graph.hpp"

namespace symforge {

/// Parameters of the star family with fxd(G) - fix(G) = 2k - 3.
struct FamilyParams {
  int k;
  int gap() const { return 2 * k - 3; }

  /// Smallest k >= max(3, (N + 3) / 2) for a requested gap N >= 1.
  static FamilyParams for_gap(int gap);
};

/// Bipartite graph on U = {u_1..u_{2^k-2}} (ids 0..2^k-3, u_j at id j-1)
/// and W = {w_1..w_{k-1}} (ids 2^k-2..), with u_j ~ w_i iff the binary
/// weight of j is i. A disjoint union of k-1 stars; order 2^k + k - 3.
Graph build_family_graph(int k);

inline Vertex family_u(int /*k*/, std::uint32_t j) { return j - 1; }
inline Vertex family_w(int k, int i) { return static_cast<Vertex>((1U << k) - 2 + (i - 1)); }

/// 2^k - (k + 1)
std::int64_t predicted_fix(int k);
/// 2^k + k - 4
std::int64_t predicted_fxd(int k);

}  // namespace symforge
