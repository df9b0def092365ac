#include "symforge/fixing.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "symforge/hitting_set.hpp"
#include "symforge/vecspace.hpp"

namespace symforge {

VertexSet moved_vertices(const AutGroup& group) {
  VertexSet moved(group.degree());
  for (auto g : group.elements()) moved |= moved_points(g);
  return moved;
}

PairSet same_orbit_pairs(const AutGroup& group) {
  PairSet out;
  for (const auto& orb : orbits(group))
    for (std::size_t a = 0; a < orb.size(); ++a)
      for (std::size_t b = a + 1; b < orb.size(); ++b) out.pairs.emplace_back(orb[a], orb[b]);
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

// ---------------------------------------------------------------- fix(u, v)

StabilizerOrbits::StabilizerOrbits(const AutGroup& group)
    : n_(group.degree()), moved_(moved_vertices(group)), orbit_(orbit_ids(group)), ids_(n_ * n_) {
  std::vector<std::size_t> stab;
  for (Vertex x = 0; x < n_; ++x) {
    stab.clear();
    for (std::size_t i = 0; i < group.order(); ++i)
      if (group.element(i)[x] == x) stab.push_back(i);
    std::uint32_t* ids = &ids_[x * n_];
    std::fill(ids, ids + n_, UINT32_MAX);
    std::uint32_t next = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (ids[v] != UINT32_MAX) continue;
      for (auto i : stab) ids[group.element(i)[v]] = next;
      ++next;
    }
  }
}

VertexSet StabilizerOrbits::fixing_neighbourhood(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) throw std::out_of_range("vertex out of range");
  if (u == v) throw std::invalid_argument("fix(u, v) needs u != v");
  VertexSet out(n_);
  if (orbit_[u] != orbit_[v]) return out;
  for (auto x = moved_.find_first(); x != VertexSet::npos; x = moved_.find_next(x))
    if (separates(static_cast<Vertex>(x), u, v)) out.set(x);
  return out;
}

VertexSet fix_pair_definitional(const AutGroup& group, Vertex u, Vertex v) {
  if (u >= group.degree() || v >= group.degree()) throw std::out_of_range("vertex out of range");
  if (u == v) throw std::invalid_argument("fix(u, v) needs u != v");
  VertexSet out(group.degree());
  if (!orbit(group, u).members.test(v)) return out;
  VertexSet moved = moved_vertices(group);
  for (auto x = moved.find_first(); x != VertexSet::npos; x = moved.find_next(x)) {
    VertexSet from_u = orbit_under_stabilizer(group, static_cast<Vertex>(x), u);
    if (!from_u.test(v)) out.set(x);
  }
  return out;
}

namespace {

void require_binary(const Space& space) {
  if (space.q != 2) throw std::invalid_argument("skeleton criteria apply to q = 2 only");
  if (space.n < 3) throw std::invalid_argument("skeleton criteria need n >= 3");
}

}  // namespace

VertexSet fix_pair_skeleton(const Space& space, const Vect& u, const Vect& v) {
  require_binary(space);
  if (u == v) throw std::invalid_argument("fix(u, v) needs u != v");
  if (u.tier() != v.tier()) throw std::invalid_argument("u and v lie in different tiers");
  if (u.tier() >= space.n) throw std::invalid_argument("tier n holds a single fixed vertex");
  auto vectors = enumerate_vectors(space);
  VertexSet out(vectors.size());
  const Skeleton su = u.skeleton(), sv = v.skeleton();
  for (Vertex w = 0; w < vectors.size(); ++w) {
    const Skeleton sw = vectors[w].skeleton();
    if (vectors[w].tier() >= space.n) continue;
    if (std::popcount(sw & su) != std::popcount(sw & sv)) out.set(w);
  }
  return out;
}

VertexSet fix_pair_basis(const Space& space, int l, int m) {
  require_binary(space);
  if (l < 0 || m < 0 || l >= space.n || m >= space.n) throw std::out_of_range("basis index out of range");
  if (l == m) throw std::invalid_argument("basis pair needs l != m");
  auto vectors = enumerate_vectors(space);
  VertexSet out(vectors.size());
  for (Vertex w = 0; w < vectors.size(); ++w) {
    if (vectors[w].tier() >= space.n) continue;
    if (vectors[w].in_skeleton(l) != vectors[w].in_skeleton(m)) out.set(w);
  }
  return out;
}

// ---------------------------------------------------------------- counting

std::int64_t detail::disjoint_fix_count(int n, int i_prime, int i, int j_min) {
  const int rest = n - 2 * i_prime;
  std::int64_t same = 0;
  for (int j = j_min; j <= i_prime; ++j) {
    int k = i - 2 * j;
    if (k < 0 || k > rest) continue;
    std::int64_t c = binomial(i_prime, j);
    same += c * c * binomial(rest, k);
  }
  return binomial(n, i) - same - binomial(rest, i);
}

std::int64_t fix_count_in_tier(int n, int i_prime, int i) {
  if (n < 3) throw std::out_of_range("counting formula needs n >= 3");
  if (i_prime < 1 || 2 * i_prime > n)
    throw std::out_of_range("disjoint pair in tier " + std::to_string(i_prime) + " impossible for n = " +
                            std::to_string(n));
  if (i < 1 || i > n - 1) throw std::out_of_range("tier " + std::to_string(i) + " outside 1..n-1");
  return detail::disjoint_fix_count(n, i_prime, i, 1);
}

std::int64_t fix_count_overlapping(int n, int i_prime, int overlap, int i) {
  if (i_prime < 2 || i_prime > n - 1) throw std::out_of_range("overlapping pair needs 2 <= i' <= n-1");
  if (overlap <= 0 || overlap >= i_prime) throw std::out_of_range("overlap must lie strictly between 0 and i'");
  if (2 * i_prime - overlap > n) throw std::out_of_range("skeleton union larger than n");
  return fix_count_in_tier(n, i_prime - overlap, i);
}

std::pair<Vect, Vect> translate_pair(const Vect& u, const Vect& v) {
  if (u.field() != 2 || v.field() != 2) throw std::invalid_argument("translation is defined over GF(2)");
  if (u.dim() != v.dim()) throw std::invalid_argument("vectors belong to different spaces");
  if (u.tier() != v.tier()) throw std::invalid_argument("u and v lie in different tiers");
  if (u.skeleton() == v.skeleton()) throw std::invalid_argument("equal skeletons translate to the zero vector");
  const Skeleton common = u.skeleton() & v.skeleton();
  if (common == 0) return {u, v};
  Space space(u.dim(), 2);
  Vect shared = Vect::from_skeleton(space, common);
  return {u - shared, v - shared};
}

// ---------------------------------------------------------------- fixing sets

bool is_fixing_set(const AutGroup& group, const VertexSet& d) {
  if (d.size() != group.degree()) throw std::invalid_argument("vertex set size mismatch");
  auto members = to_vector(d);
  for (std::size_t i = 1; i < group.order(); ++i) {
    auto g = group.element(i);
    if (std::all_of(members.begin(), members.end(), [&](Vertex v) { return g[v] == v; })) return false;
  }
  return true;
}

bool FixingGraph::covers_all(const VertexSet& d) const {
  return std::all_of(pair_neighbours.begin(), pair_neighbours.end(),
                     [&](const VertexSet& nb) { return nb.intersects(d); });
}

FixingGraph build_fixing_graph(const AutGroup& group, const StabilizerOrbits& table) {
  FixingGraph fg;
  fg.left = table.moved();
  fg.right = same_orbit_pairs(group);
  fg.left_degree.assign(group.degree(), 0);
  for (auto [u, v] : fg.right.pairs) {
    VertexSet nb = table.fixing_neighbourhood(u, v);
    for (auto x = nb.find_first(); x != VertexSet::npos; x = nb.find_next(x)) ++fg.left_degree[x];
    fg.edge_count += nb.count();
    fg.pair_neighbours.push_back(std::move(nb));
  }
  return fg;
}

FixingGraph build_fixing_graph(const AutGroup& group) { return build_fixing_graph(group, StabilizerOrbits(group)); }

namespace {

std::vector<Vertex> cover_degree_order(const FixingGraph& fg, std::size_t order) {
  std::vector<Vertex> out(order);
  for (Vertex v = 0; v < order; ++v) out[v] = v;
  std::stable_sort(out.begin(), out.end(),
                   [&](Vertex a, Vertex b) { return fg.left_degree[a] > fg.left_degree[b]; });
  return out;
}

}  // namespace

MinimumSet fixing_number(const AutGroup& group, const FixingGraph& fg) {
  const std::size_t n = group.degree();
  std::vector<VertexSet> supports;
  supports.reserve(group.order());
  for (std::size_t i = 1; i < group.order(); ++i) supports.push_back(moved_points(group.element(i)));
  auto best = min_hitting_set(n, std::move(supports), cover_degree_order(fg, n));
  // Every non-identity element moves something, so the problem is feasible.
  return MinimumSet{best->count(), *best};
}

MinimumSet fixing_number(const AutGroup& group) { return fixing_number(group, build_fixing_graph(group)); }

MinimumSet cover_number(const FixingGraph& fg) {
  const std::size_t n = fg.left_degree.size();
  auto best = min_hitting_set(n, fg.pair_neighbours, cover_degree_order(fg, n));
  if (!best) throw std::logic_error("a same-orbit pair has an empty fixing neighbourhood");
  return MinimumSet{best->count(), *best};
}

MinimumSet fixed_number(const AutGroup& group) {
  MinimumSet out{0, VertexSet(group.degree())};
  if (group.is_trivial()) return out;
  std::vector<Vertex> best_list;
  bool have = false;
  for (std::size_t i = 1; i < group.order(); ++i) {
    VertexSet fixed = fixed_points(group.element(i));
    const std::size_t c = fixed.count();
    if (have && c < best_list.size()) continue;
    auto list = to_vector(fixed);
    if (!have || c > best_list.size() || list < best_list) {
      best_list = std::move(list);
      out.witness = std::move(fixed);
      have = true;
    }
  }
  out.value = best_list.size() + 1;
  return out;
}

FixReport fix_report(const AutGroup& group, const FixingGraph& fg) {
  auto fix = fixing_number(group, fg);
  auto fxd = fixed_number(group);
  return FixReport{fix.value, fxd.value, std::move(fix.witness), std::move(fxd.witness)};
}

FixReport fix_report(const AutGroup& group) { return fix_report(group, build_fixing_graph(group)); }

TwinCriterion check_twin_criterion(const Graph& g) {
  TwinCriterion out;
  out.connected = g.is_connected();
  for (Vertex u = 0; u < g.order() && !out.has_twins; ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (are_twins(g, u, v)) {
        out.has_twins = true;
        out.witness = Edge{u, v};
        break;
      }
  return out;
}

}  // namespace symforge
