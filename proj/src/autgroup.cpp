#include "symforge/autgroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "symforge/vecspace.hpp"

namespace symforge {

// ---------------------------------------------------------------- Perm

Perm::Perm(std::vector<Vertex> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Vertex v : images_) {
    if (v >= images_.size() || seen[v]) throw std::invalid_argument("image array is not a bijection");
    seen[v] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<Vertex> images(degree);
  std::iota(images.begin(), images.end(), Vertex{0});
  return Perm(std::move(images));
}

bool Perm::is_identity() const {
  for (Vertex v = 0; v < images_.size(); ++v)
    if (images_[v] != v) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<Vertex> inv(images_.size());
  for (Vertex v = 0; v < images_.size(); ++v) inv[images_[v]] = v;
  return Perm(std::move(inv));
}

Perm compose(const Perm& g, const Perm& h) {
  if (g.degree() != h.degree()) throw std::invalid_argument("degree mismatch in composition");
  std::vector<Vertex> out(g.degree());
  for (Vertex v = 0; v < out.size(); ++v) out[v] = g(h(v));
  return Perm(std::move(out));
}

// ---------------------------------------------------------------- AutGroup

namespace {

bool span_less(std::span<const Vertex> a, std::span<const Vertex> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

AutGroup::AutGroup(std::size_t degree, std::vector<Vertex> images) : degree_(degree) {
  if (degree == 0) {
    images_.clear();
    return;
  }
  if (images.size() % degree != 0) throw std::invalid_argument("image buffer is not a multiple of degree");
  const std::size_t count = images.size() / degree;
  auto at = [&](std::size_t i) { return std::span<const Vertex>(images).subspan(i * degree, degree); };
  std::vector<std::size_t> idx(count);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return span_less(at(a), at(b)); });
  images_.reserve(images.size());
  for (std::size_t k = 0; k < count; ++k) {
    auto g = at(idx[k]);
    if (k > 0 && std::equal(g.begin(), g.end(), at(idx[k - 1]).begin())) continue;
    images_.insert(images_.end(), g.begin(), g.end());
  }
}

AutGroup::AutGroup(std::size_t degree, std::vector<Vertex> images, sorted_tag)
    : degree_(degree), images_(std::move(images)) {}

Perm AutGroup::perm(std::size_t i) const {
  auto g = element(i);
  return Perm(std::vector<Vertex>(g.begin(), g.end()));
}

bool AutGroup::contains(std::span<const Vertex> images) const {
  if (images.size() != degree_) return false;
  std::size_t lo = 0, hi = order();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (span_less(element(mid), images)) lo = mid + 1;
    else hi = mid;
  }
  return lo < order() && std::equal(images.begin(), images.end(), element(lo).begin());
}

// ---------------------------------------------------------------- search

bool is_automorphism(const Graph& g, std::span<const Vertex> images) {
  if (images.size() != g.order())
    throw std::invalid_argument("permutation length " + std::to_string(images.size()) +
                                " does not match graph order " + std::to_string(g.order()));
  std::vector<bool> seen(images.size(), false);
  for (Vertex v : images) {
    if (v >= images.size() || seen[v]) return false;
    seen[v] = true;
  }
  // A bijection mapping every edge to an edge preserves non-edges too.
  for (auto [u, v] : g.edges())
    if (!g.adjacent(images[u], images[v])) return false;
  return true;
}

bool is_automorphism(const Graph& g, const Perm& p) { return is_automorphism(g, p.images()); }

namespace {

using Colouring = std::vector<std::uint32_t>;

std::size_t colour_count(const Colouring& col) {
  if (col.empty()) return 0;
  std::vector<bool> used(*std::max_element(col.begin(), col.end()) + 1, false);
  std::size_t k = 0;
  for (auto c : col)
    if (!used[c]) used[c] = true, ++k;
  return k;
}

// One refinement pass; the trace records every distinct signature and its
// multiplicity so two colourings can be compared for compatibility.
Colouring refine(const Graph& g, Colouring col, std::vector<std::uint32_t>* trace) {
  const std::size_t n = g.order();
  std::size_t before = colour_count(col);
  std::vector<std::vector<std::uint32_t>> sig(n);
  std::vector<Vertex> order(n);
  while (true) {
    for (Vertex v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.clear();
      s.push_back(col[v]);
      const auto& row = g.neighbors(v);
      for (auto w = row.find_first(); w != VertexSet::npos; w = row.find_next(w)) s.push_back(col[w]);
      std::sort(s.begin() + 1, s.end());
    }
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return sig[a] < sig[b]; });
    Colouring next(n);
    std::uint32_t rank = 0;
    for (std::size_t k = 0; k < n; ++k) {
      bool fresh = k == 0 || sig[order[k]] != sig[order[k - 1]];
      if (fresh && k > 0) ++rank;
      next[order[k]] = rank;
      if (trace != nullptr && fresh) {
        std::size_t run = 1;
        while (k + run < n && sig[order[k + run]] == sig[order[k]]) ++run;
        trace->push_back(static_cast<std::uint32_t>(run));
        trace->insert(trace->end(), sig[order[k]].begin(), sig[order[k]].end());
        trace->push_back(UINT32_MAX);
      }
    }
    std::size_t after = n == 0 ? 0 : rank + 1;
    col = std::move(next);
    if (after == before) return col;
    before = after;
  }
}

Colouring individualize(const Colouring& col, Vertex v) {
  Colouring out(col.size());
  for (Vertex x = 0; x < col.size(); ++x) out[x] = 2 * col[x] + (x == v ? 0U : 1U);
  return out;
}

// Saturating product of twin-class factorials: every permutation inside a
// twin class is an automorphism, so this is a lower bound on |Aut|.
std::size_t twin_lower_bound(const Graph& g, std::size_t cap) {
  std::size_t bound = 1;
  for (const auto& cls : twin_classes(g))
    for (std::size_t k = 2; k <= cls.size(); ++k) {
      if (bound > cap / k) return cap + 1;
      bound *= k;
    }
  return bound;
}

class Searcher {
 public:
  Searcher(const Graph& g, const Limits& limits) : g_(g), limits_(limits) {}

  void run(const Colouring& left, const Colouring& right) {
    const std::size_t n = g_.order();
    std::vector<std::size_t> size(n, 0);
    for (auto c : left) ++size[c];
    std::uint32_t target = UINT32_MAX;
    for (std::uint32_t c = 0; c < n; ++c)
      if (size[c] > 1 && (target == UINT32_MAX || size[c] < size[target])) target = c;

    if (target == UINT32_MAX) {
      std::vector<Vertex> by_colour(n);
      for (Vertex w = 0; w < n; ++w) by_colour[right[w]] = w;
      std::vector<Vertex> images(n);
      for (Vertex v = 0; v < n; ++v) images[v] = by_colour[left[v]];
      if (is_automorphism(g_, images)) {
        if (++found_ > limits_.max_group_order)
          throw ResourceError("automorphism group exceeds cap of " + std::to_string(limits_.max_group_order));
        buffer_.insert(buffer_.end(), images.begin(), images.end());
      }
      return;
    }

    Vertex v = 0;
    while (left[v] != target) ++v;
    std::vector<std::uint32_t> left_trace;
    Colouring next_left = refine(g_, individualize(left, v), &left_trace);
    std::vector<std::uint32_t> right_trace;
    for (Vertex w = 0; w < n; ++w) {
      if (right[w] != target) continue;
      right_trace.clear();
      Colouring next_right = refine(g_, individualize(right, w), &right_trace);
      if (right_trace == left_trace) run(next_left, next_right);
    }
  }

  std::vector<Vertex> take() { return std::move(buffer_); }

 private:
  const Graph& g_;
  const Limits& limits_;
  std::size_t found_ = 0;
  std::vector<Vertex> buffer_;
};

}  // namespace

std::vector<std::uint32_t> equitable_refinement(const Graph& g, std::vector<std::uint32_t> initial) {
  if (initial.size() != g.order()) throw std::invalid_argument("colouring size mismatch");
  return refine(g, std::move(initial), nullptr);
}

namespace {

// Twin classes are blocks of imprimitivity: every automorphism permutes
// them, and any bijection between corresponding classes lifts a
// class-level automorphism. So the search runs on the quotient, coloured
// by class size and by whether the class is a clique, and the elements are
// generated by combining each quotient automorphism with every choice of
// within-class bijections.
std::vector<Vertex> expand_twin_quotient(const Graph& g, const std::vector<std::vector<Vertex>>& classes,
                                         const Limits& limits) {
  const std::size_t k = classes.size();
  Graph quotient(k);
  Colouring initial(k);
  std::vector<std::pair<std::size_t, bool>> kinds(k);
  for (std::size_t a = 0; a < k; ++a) {
    const bool clique = classes[a].size() > 1 && g.adjacent(classes[a][0], classes[a][1]);
    kinds[a] = {classes[a].size(), clique};
    for (std::size_t b = a + 1; b < k; ++b)
      if (g.adjacent(classes[a][0], classes[b][0])) quotient.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  auto sorted_kinds = kinds;
  std::sort(sorted_kinds.begin(), sorted_kinds.end());
  sorted_kinds.erase(std::unique(sorted_kinds.begin(), sorted_kinds.end()), sorted_kinds.end());
  for (std::size_t a = 0; a < k; ++a)
    initial[a] = static_cast<std::uint32_t>(std::lower_bound(sorted_kinds.begin(), sorted_kinds.end(), kinds[a]) -
                                            sorted_kinds.begin());

  Colouring start = refine(quotient, initial, nullptr);
  Searcher search(quotient, limits);
  search.run(start, start);
  const std::vector<Vertex> sigmas = search.take();
  const std::size_t sigma_count = sigmas.size() / k;

  std::size_t per_sigma = 1;
  for (const auto& cls : classes)
    for (std::size_t f = 2; f <= cls.size(); ++f) per_sigma *= f;  // bounded by the twin check already made
  if (sigma_count > limits.max_group_order / per_sigma)
    throw ResourceError("automorphism group exceeds cap of " + std::to_string(limits.max_group_order));

  std::vector<Vertex> out;
  out.reserve(sigma_count * per_sigma * g.order());
  std::vector<std::vector<std::uint32_t>> within(k);
  std::vector<Vertex> images(g.order());
  for (std::size_t s = 0; s < sigma_count; ++s) {
    const Vertex* sigma = sigmas.data() + s * k;
    for (std::size_t a = 0; a < k; ++a) {
      within[a].resize(classes[a].size());
      std::iota(within[a].begin(), within[a].end(), 0U);
    }
    while (true) {
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t i = 0; i < classes[a].size(); ++i) images[classes[a][i]] = classes[sigma[a]][within[a][i]];
      out.insert(out.end(), images.begin(), images.end());
      // Odometer over the per-class permutations.
      std::size_t a = 0;
      while (a < k && !std::next_permutation(within[a].begin(), within[a].end())) ++a;
      if (a == k) break;
    }
  }
  return out;
}

}  // namespace

AutGroup automorphism_group(const Graph& g, const Limits& limits) {
  const std::size_t n = g.order();
  if (n > limits.max_order)
    throw ResourceError("graph order " + std::to_string(n) + " exceeds cap of " +
                        std::to_string(limits.max_order));
  if (n == 0) return AutGroup(0, {});
  if (twin_lower_bound(g, limits.max_group_order) > limits.max_group_order)
    throw ResourceError("automorphism group exceeds cap of " + std::to_string(limits.max_group_order) +
                        " (twin classes alone generate more)");
  auto classes = twin_classes(g);
  if (classes.size() < n) return AutGroup(n, expand_twin_quotient(g, classes, limits));
  Colouring start = refine(g, Colouring(n, 0), nullptr);
  Searcher search(g, limits);
  search.run(start, start);
  return AutGroup(n, search.take());
}

// ---------------------------------------------------------------- orbits

Orbit orbit(const AutGroup& group, Vertex v) {
  if (v >= group.degree()) throw std::out_of_range("vertex out of range");
  VertexSet members(group.degree());
  for (auto g : group.elements()) members.set(g[v]);
  return Orbit{v, std::move(members)};
}

std::vector<std::uint32_t> orbit_ids(const AutGroup& group) {
  const std::size_t n = group.degree();
  std::vector<std::uint32_t> id(n, UINT32_MAX);
  std::uint32_t next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (id[v] != UINT32_MAX) continue;
    for (auto g : group.elements()) id[g[v]] = next;
    ++next;
  }
  return id;
}

std::vector<std::vector<Vertex>> orbits(const AutGroup& group) {
  auto id = orbit_ids(group);
  std::vector<std::vector<Vertex>> out;
  for (Vertex v = 0; v < id.size(); ++v) {
    if (id[v] >= out.size()) out.resize(id[v] + 1);
    out[id[v]].push_back(v);
  }
  return out;
}

AutGroup stabilizer(const AutGroup& group, Vertex v) {
  if (v >= group.degree()) throw std::out_of_range("vertex out of range");
  return group.filter([v](std::span<const Vertex> g) { return g[v] == v; });
}

AutGroup stabilizer(const AutGroup& group, const VertexSet& d) {
  auto members = to_vector(d);
  return group.filter([&](std::span<const Vertex> g) {
    return std::all_of(members.begin(), members.end(), [&](Vertex v) { return g[v] == v; });
  });
}

VertexSet orbit_under_stabilizer(const AutGroup& group, Vertex w, Vertex u) {
  if (w >= group.degree() || u >= group.degree()) throw std::out_of_range("vertex out of range");
  VertexSet out(group.degree());
  for (auto g : group.elements())
    if (g[w] == w) out.set(g[u]);
  return out;
}

VertexSet fixed_points(std::span<const Vertex> images) {
  VertexSet out(images.size());
  for (Vertex v = 0; v < images.size(); ++v)
    if (images[v] == v) out.set(v);
  return out;
}

VertexSet moved_points(std::span<const Vertex> images) {
  VertexSet out(images.size());
  for (Vertex v = 0; v < images.size(); ++v)
    if (images[v] != v) out.set(v);
  return out;
}

Perm lift_basis_map(const Space& space, const std::vector<int>& basis_perm, const std::vector<int>& scalars) {
  if (static_cast<int>(basis_perm.size()) != space.n || static_cast<int>(scalars.size()) != space.n)
    throw std::invalid_argument("basis map needs exactly n entries");
  std::vector<bool> hit(space.n, false);
  for (int target : basis_perm) {
    if (target < 0 || target >= space.n || hit[target]) throw std::invalid_argument("basis map is not a permutation");
    hit[target] = true;
  }
  for (int s : scalars)
    if (s % space.q == 0) throw std::invalid_argument("basis scalars must be non-zero mod q");

  auto vectors = enumerate_vectors(space);
  std::vector<Vertex> images(vectors.size());
  std::vector<int> mapped(space.n);
  for (Vertex v = 0; v < vectors.size(); ++v) {
    for (int i = 0; i < space.n; ++i) mapped[basis_perm[i]] = vectors[v].coeff(i) * scalars[i];
    images[v] = vertex_of(space, Vect::from_coeffs(space, mapped));
  }
  return Perm(std::move(images));
}

}  // namespace symforge
