#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "symforge/autgroup.hpp"
#include "symforge/core.hpp"
#include "symforge/graph.hpp"
#include "symforge/vect.hpp"

namespace symforge {

/// S(G): vertices whose orbit has at least two members.
VertexSet moved_vertices(const AutGroup& group);

/// V_s(G) as unordered pairs (u < v) of distinct vertices sharing an orbit,
/// sorted lexicographically.
struct PairSet {
  std::vector<Edge> pairs;

  std::size_t size() const { return pairs.size(); }
  bool empty() const { return pairs.empty(); }
};

PairSet same_orbit_pairs(const AutGroup& group);

/// Orbit ids of every vertex under every vertex stabilizer, the table
/// behind all fixing-neighbourhood queries on one group.
class StabilizerOrbits {
 public:
  explicit StabilizerOrbits(const AutGroup& group);

  std::size_t order() const { return n_; }
  const VertexSet& moved() const { return moved_; }
  /// True iff the orbits of u and v under the stabilizer of x differ.
  bool separates(Vertex x, Vertex u, Vertex v) const { return ids_[x * n_ + u] != ids_[x * n_ + v]; }
  /// fix(u, v) = { x in S(G) : O_x(u) != O_x(v) }; empty when O(u) != O(v).
  VertexSet fixing_neighbourhood(Vertex u, Vertex v) const;

 private:
  std::size_t n_;
  VertexSet moved_;
  std::vector<std::uint32_t> orbit_;
  std::vector<std::uint32_t> ids_;
};

/// fix(u, v) evaluated from the definition. Requires u != v.
VertexSet fix_pair_definitional(const AutGroup& group, Vertex u, Vertex v);

/// fix(u, v) on the non-zero component graph over GF(2) from skeletons
/// alone: { w in S(G) : |S_w ∩ S_u| != |S_w ∩ S_v| }, where S(G) is every
/// tier below n. Requires q = 2, n >= 3, u != v in a common tier 1..n-1.
/// The result is indexed by vertex_of(space, .).
VertexSet fix_pair_skeleton(const Space& space, const Vect& u, const Vect& v);

/// fix(b_l, b_m): moved vertices containing exactly one of b_l, b_m.
/// Indices are 0-based. Requires q = 2, n >= 3, l != m.
VertexSet fix_pair_basis(const Space& space, int l, int m);

/// |fix(u, v) ∩ T_i| for disjoint skeletons u, v in T_{i_prime}, q = 2:
///   C(n,i) - sum_{j>=1, i=2j+k} C(i',j)^2 C(n-2i',k) - C(n-2i',i).
std::int64_t fix_count_in_tier(int n, int i_prime, int i);

/// Same count for overlapping skeletons with |S_u ∩ S_v| = overlap,
/// reduced to the disjoint case with i' - overlap.
std::int64_t fix_count_overlapping(int n, int i_prime, int overlap, int i);

namespace detail {
/// The counting sum with an explicit lower end for j. Only j_min = 1 is
/// correct; other values exist so tests can check that the verifier notices.
std::int64_t disjoint_fix_count(int n, int i_prime, int i, int j_min);
}  // namespace detail

/// Removes the common skeleton from both vectors (GF(2) only).
/// Throws std::invalid_argument if the skeletons coincide or tiers differ.
std::pair<Vect, Vect> translate_pair(const Vect& u, const Vect& v);

/// True iff only the identity fixes every vertex of d.
bool is_fixing_set(const AutGroup& group, const VertexSet& d);

/// Bipartite graph F(G) between S(G) and V_s(G); x ~ {u,v} iff x ∈ fix(u,v).
struct FixingGraph {
  VertexSet left;
  PairSet right;
  /// pair_neighbours[p] = vertices of S(G) adjacent to right.pairs[p].
  std::vector<VertexSet> pair_neighbours;
  /// Degree in F(G) of each vertex (0 outside S(G)).
  std::vector<std::size_t> left_degree;
  std::size_t edge_count = 0;

  /// N_F(d) = V_s(G).
  bool covers_all(const VertexSet& d) const;
};

FixingGraph build_fixing_graph(const AutGroup& group);
FixingGraph build_fixing_graph(const AutGroup& group, const StabilizerOrbits& table);

struct MinimumSet {
  std::size_t value = 0;
  VertexSet witness;
};

/// fix(G) as a minimum hitting set of the supports of the non-identity
/// elements. Branch order: descending degree in F(G), then vertex id.
MinimumSet fixing_number(const AutGroup& group);
MinimumSet fixing_number(const AutGroup& group, const FixingGraph& fg);

/// Minimum D with N_F(D) = V_s(G). Every such D is a fixing set, so this
/// is never below fixing_number.
MinimumSet cover_number(const FixingGraph& fg);

/// fxd(G) = 1 + the largest fixed-point set of a non-identity element;
/// 0 for the trivial group. The witness is that largest non-fixing set,
/// lexicographically least among ties.
MinimumSet fixed_number(const AutGroup& group);

struct FixReport {
  std::size_t fixing_number = 0;
  std::size_t fixed_number = 0;
  VertexSet witness_min_fixing_set;
  VertexSet witness_max_nonfixing_set;
};

FixReport fix_report(const AutGroup& group);
FixReport fix_report(const AutGroup& group, const FixingGraph& fg);

struct TwinCriterion {
  bool has_twins = false;
  /// The characterisation of fxd = order - 1 is stated for connected graphs.
  bool connected = true;
  std::optional<Edge> witness;
};

TwinCriterion check_twin_criterion(const Graph& g);

}  // namespace symforge
