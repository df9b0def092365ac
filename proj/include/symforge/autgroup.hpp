#pragma once

#include <cstddef>
#include <ranges>
#include <span>
#include <vector>

#include "symforge/core.hpp"
#include "symforge/graph.hpp"
#include "symforge/vect.hpp"

namespace symforge {

/// A permutation of 0..degree-1 stored as its image array.
/// Composition convention: compose(g, h)(v) == g(h(v)).
class Perm {
 public:
  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Perm(std::vector<Vertex> images);
  static Perm identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Vertex operator()(Vertex v) const { return images_[v]; }
  std::span<const Vertex> images() const { return images_; }
  bool is_identity() const;
  Perm inverse() const;

  friend Perm compose(const Perm& g, const Perm& h);
  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<Vertex> images_;
};

struct Orbit {
  Vertex representative;
  VertexSet members;
};

/// Fully enumerated permutation group. Elements are held in one contiguous
/// buffer, sorted lexicographically by image array, so the identity is
/// element 0. Immutable after construction.
class AutGroup {
 public:
  /// `images` holds `count` permutations of `degree` points back to back.
  /// Sorts and deduplicates; does not check closure.
  AutGroup(std::size_t degree, std::vector<Vertex> images);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return degree_ == 0 ? 1 : images_.size() / degree_; }
  bool is_trivial() const { return order() == 1; }

  std::span<const Vertex> element(std::size_t i) const {
    return std::span<const Vertex>(images_).subspan(i * degree_, degree_);
  }
  Perm perm(std::size_t i) const;
  auto elements() const {
    return std::views::iota(std::size_t{0}, order()) |
           std::views::transform([this](std::size_t i) { return element(i); });
  }
  bool contains(std::span<const Vertex> images) const;

  /// Subgroup of elements satisfying `keep`, in canonical order.
  template <class Pred>
  AutGroup filter(Pred keep) const {
    std::vector<Vertex> kept;
    for (auto g : elements())
      if (keep(g)) kept.insert(kept.end(), g.begin(), g.end());
    return AutGroup(degree_, std::move(kept), sorted_tag{});
  }

 private:
  struct sorted_tag {};
  AutGroup(std::size_t degree, std::vector<Vertex> images, sorted_tag);

  std::size_t degree_;
  std::vector<Vertex> images_;
};

bool is_automorphism(const Graph& g, const Perm& p);
bool is_automorphism(const Graph& g, std::span<const Vertex> images);

/// Complete automorphism group by individualization and refinement:
/// equitable colour refinement on both sides of a partial map, branching
/// on the smallest non-singleton cell (lowest colour first). Deterministic.
/// Graphs with twins are searched on their twin quotient and the
/// within-class permutations are generated directly.
/// Throws ResourceError when the order exceeds limits.max_order or the
/// group exceeds limits.max_group_order.
AutGroup automorphism_group(const Graph& g, const Limits& limits = default_limits());

/// Coarsest equitable colouring of g refining `initial`. Colours are
/// canonical ranks, so isomorphic inputs give corresponding outputs.
std::vector<std::uint32_t> equitable_refinement(const Graph& g, std::vector<std::uint32_t> initial);

Orbit orbit(const AutGroup& group, Vertex v);
/// Orbit partition, classes ordered by least member.
std::vector<std::vector<Vertex>> orbits(const AutGroup& group);
/// orbit id per vertex, numbered by least member.
std::vector<std::uint32_t> orbit_ids(const AutGroup& group);

AutGroup stabilizer(const AutGroup& group, Vertex v);
/// Pointwise stabilizer of a vertex set.
AutGroup stabilizer(const AutGroup& group, const VertexSet& d);

/// Orbit of u under the stabilizer of w.
VertexSet orbit_under_stabilizer(const AutGroup& group, Vertex w, Vertex u);

VertexSet fixed_points(std::span<const Vertex> images);
inline VertexSet fixed_points(const Perm& p) { return fixed_points(p.images()); }
VertexSet moved_points(std::span<const Vertex> images);

/// Vertex permutation of the non-zero component graph induced by
/// b_i -> scalars[i] * b_{basis_perm[i]}, extended linearly to coefficients.
Perm lift_basis_map(const Space& space, const std::vector<int>& basis_perm,
                    const std::vector<int>& scalars);
inline Perm lift_basis_perm(const Space& space, const std::vector<int>& basis_perm) {
  return lift_basis_map(space, basis_perm, std::vector<int>(basis_perm.size(), 1));
}

}  // namespace symforge
