#include "symforge/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <memory>
#include <stdexcept>

#include "symforge/autgroup.hpp"
#include "symforge/constructions.hpp"
#include "symforge/fixing.hpp"
#include "symforge/vecspace.hpp"

namespace symforge::verify {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::resource_cap: return "resource_cap";
  }
  return "?";
}

namespace {

constexpr std::size_t kMaxCounterexamples = 5;

// Collects counterexamples; keeps the first few and counts the rest.
class Recorder {
 public:
  void fail(Json witness) {
    ++failures_;
    if (examples_.size() < kMaxCounterexamples) examples_.push_back(std::move(witness));
  }
  void note(const std::string& key, Json value) { notes_[key] = std::move(value); }
  void checked(std::size_t k = 1) { checked_ += k; }

  bool failed() const { return failures_ > 0; }
  Json witnesses() const {
    Json out = Json::array();
    for (const auto& e : examples_) out.push_back(e);
    Json summary = notes_;
    summary["checked"] = checked_;
    if (failures_) summary["failures"] = failures_;
    out.push_back(std::move(summary));
    return out;
  }

 private:
  std::size_t failures_ = 0;
  std::size_t checked_ = 0;
  std::vector<Json> examples_;
  Json notes_ = Json::object();
};

int int_param(const Json& params, const char* key) {
  if (!params.contains(key) || !params[key].is_number_integer())
    throw std::invalid_argument(std::string("missing integer parameter '") + key + "'");
  return params[key].get<int>();
}

std::string string_param(const Json& params, const char* key) {
  if (!params.contains(key) || !params[key].is_string())
    throw std::invalid_argument(std::string("missing string parameter '") + key + "'");
  return params[key].get<std::string>();
}

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Facts about one graph shared by several claims within a suite run.
struct GraphFacts {
  Graph graph;
  AutGroup group;
  FixingGraph fixing_graph;
  MinimumSet fix;
  MinimumSet fxd;
};

class Cache {
 public:
  explicit Cache(const Limits& limits) : limits_(limits) {}

  const GraphFacts& facts(const std::string& spec) {
    auto it = facts_.find(spec);
    if (it != facts_.end()) return *it->second;
    Graph g = graph_from_spec(spec);
    AutGroup group = automorphism_group(g, limits_);
    FixingGraph fg = build_fixing_graph(group);
    MinimumSet fix = fixing_number(group, fg);
    MinimumSet fxd = fixed_number(group);
    auto facts = std::make_unique<GraphFacts>(
        GraphFacts{std::move(g), std::move(group), std::move(fg), std::move(fix), std::move(fxd)});
    return *facts_.emplace(spec, std::move(facts)).first->second;
  }

  const Limits& limits() const { return limits_; }

 private:
  const Limits& limits_;
  std::map<std::string, std::unique_ptr<GraphFacts>> facts_;
};

// Non-zero component graph with its group and basis lookups.
struct Nzc {
  Space space;
  std::vector<Vect> vectors;
  Graph graph;
  AutGroup group;
  std::vector<Vertex> basis;

  Nzc(int n, int q, const Limits& limits)
      : space(n, q),
        vectors(enumerate_vectors(space, limits)),
        graph(build_nzc_graph(space, limits)),
        group(automorphism_group(graph, limits)) {
    for (int i = 0; i < n; ++i) basis.push_back(vertex_of(space, Vect::basis(space, i)));
  }

  int n() const { return space.n; }
  Skeleton skel(Vertex v) const { return vectors[v].skeleton(); }
  int tier(Vertex v) const { return vectors[v].tier(); }
  /// q = 2 only: vertex with the given skeleton.
  Vertex with_skeleton(Skeleton s) const { return vertex_of(space, Vect::from_skeleton(space, s)); }
  /// Index of the basis vector a tier-1 vertex is a multiple of, or -1.
  int basis_index(Vertex v) const { return tier(v) == 1 ? std::countr_zero(skel(v)) : -1; }
  std::string label(Vertex v) const { return vectors[v].to_string(); }
};

Json vertex_json(const Nzc& ctx, Vertex v) { return Json{{"id", v}, {"label", ctx.label(v)}}; }

Json skeleton_set_json(const Nzc& ctx, const VertexSet& s) {
  Json out = Json::array();
  for (Vertex v : to_vector(s)) out.push_back(ctx.label(v));
  return out;
}

Nzc binary_space(const Json& params, const Limits& limits, int min_n) {
  const int n = int_param(params, "n");
  const int q = int_param(params, "q");
  if (q != 2) throw std::invalid_argument("this claim is stated for q = 2");
  if (n < min_n) throw std::invalid_argument("this claim needs n >= " + std::to_string(min_n));
  return Nzc(n, q, limits);
}

// Same-tier pairs u < v strictly below the top tier.
template <class F>
void for_each_same_tier_pair(const Nzc& ctx, F&& f) {
  const auto order = static_cast<Vertex>(ctx.vectors.size());
  for (Vertex u = 0; u < order; ++u)
    for (Vertex v = u + 1; v < order; ++v)
      if (ctx.tier(u) == ctx.tier(v) && ctx.tier(u) < ctx.n()) f(u, v);
}

// g(b_l) = b_m and g(b_m) = b_l: the two are mapped on each other.
template <class F>
void for_each_basis_swap(const Nzc& ctx, F&& f) {
  for (auto g : ctx.group.elements())
    for (int l = 0; l < ctx.n(); ++l)
      for (int m = 0; m < ctx.n(); ++m)
        if (l != m && g[ctx.basis[l]] == ctx.basis[m] && g[ctx.basis[m]] == ctx.basis[l]) f(g, l, m);
}

// ---------------------------------------------------------------- automorphism structure

void check_deg_formula(const Json& params, Cache& cache, Recorder& rec) {
  Nzc ctx = binary_space(params, cache.limits(), 3);
  for (Vertex v = 0; v < ctx.graph.order(); ++v) {
    auto expected = degree_formula(ctx.n(), ctx.tier(v));
    auto actual = static_cast<std::int64_t>(ctx.graph.degree(v));
    rec.checked();
    if (actual != expected) rec.fail({{"vertex", vertex_json(ctx, v)}, {"degree", actual}, {"formula", expected}});
  }
}

void check_aut_order(const Json& params, Cache& cache, Recorder& rec) {
  Nzc ctx = binary_space(params, cache.limits(), 3);
  rec.checked();
  rec.note("order", ctx.group.order());
  if (static_cast<std::int64_t>(ctx.group.order()) != factorial(ctx.n()))
    rec.fail({{"order", ctx.group.order()}, {"expected", factorial(ctx.n())}});
}

void check_basis_image(const Json& params, Cache& cache, Recorder& rec) {
  Nzc ctx(int_param(params, "n"), int_param(params, "q"), cache.limits());
  for (auto g : ctx.group.elements()) {
    std::vector<bool> hit(ctx.n(), false);
    for (int i = 0; i < ctx.n(); ++i) {
      rec.checked();
      int j = ctx.basis_index(g[ctx.basis[i]]);
      if (j < 0 || hit[j]) {
        rec.fail({{"element", perm_to_json(g)}, {"basis", i}, {"image", vertex_json(ctx, g[ctx.basis[i]])}});
        break;
      }
      hit[j] = true;
    }
  }
}

void check_tier_preservation(const Json& params, Cache& cache, Recorder& rec) {
  Nzc ctx = binary_space(params, cache.limits(), 3);
  for (auto g : ctx.group.elements())
    for (Vertex v = 0; v < g.size(); ++v) {
      rec.checked();
      if (ctx.tier(g[v]) != ctx.tier(v))
        rec.fail({{"element", perm_to_json(g)}, {"vertex", vertex_json(ctx, v)}, {"image", vertex_json(ctx, g[v])}});
    }
}

void check_top_vertex_fixed(const Json& params, Cache& cache, Recorder& rec) {
  Nzc ctx = binary_space(params, cache.limits(), 3);
  const Vertex top = ctx.with_skeleton(ctx.space.full_skeleton());
  for (auto g : ctx.group.elements()) {
    rec.checked();
    if (g[top] != top) rec.fail({{"element", perm_to_json(g)}, {"image", vertex_json(ctx, g[top])}});
  }
}

void check_tier_orbit(const Json& params, Cache& cache, Recorder& rec) {
  Nzc ctx = binary_space(params, cache.limits(), 3);
  auto id = orbit_ids(ctx.group);
  VertexSet moved = moved_vertices(ctx.group);
  for (Vertex u = 0; u < id.size(); ++u) {
    rec.checked();
    if (moved.test(u) != (ctx.tier(u) < ctx.n())) rec.fail({{"vertex", vertex_json(ctx, u)}, {"moved", moved.test(u)}});
    for (Vertex v = u + 1; v < id.size(); ++v) {
      bool same_orbit = id[u] == id[v];
      bool same_low_tier = ctx.tier(u) == ctx.tier(v) && ctx.tier(u) < ctx.n();
      rec.checked();
      if (same_orbit != same_low_tier)
        rec.fail({{"u", vertex_json(ctx, u)}, {"v", vertex_json(ctx, v)}, {"same_orbit", same_orbit}});
    }
  }
}

void check_basis_membership(const Json& params, Cache& cache, Recorder& rec) {
  Nzc ctx = binary_space(params, cache.limits(), 3);
  for (int l = 0; l < ctx.n(); ++l)
    for (auto g : ctx.group.elements()) {
      if (g[ctx.basis[l]] != ctx.basis[l]) continue;
      for (Vertex u = 0; u < g.size(); ++u) {
        rec.checked();
        if (ctx.vectors[u].in_skeleton(l) != ctx.vectors[g[u]].in_skeleton(l))
          rec.fail({{"element", perm_to_json(g)}, {"l", l}, {"u", vertex_json(ctx, u)}});
      }
    }
}

void check_transposition_i(const Json& params, Cache& cache, Recorder& rec) {
  Nzc ctx = binary_space(params, cache.limits(), 3);
  for_each_basis_swap(ctx, [&](std::span<const Vertex> g, int l, int m) {
    for (Vertex u = 0; u < g.size(); ++u) {
      const Vect& x = ctx.vectors[u];
      if (!(x.in_skeleton(l) && !x.in_skeleton(m))) continue;
      const Vect& y = ctx.vectors[g[u]];
      rec.checked();
      if (y.in_skeleton(l) || !y.in_skeleton(m))
        rec.fail({{"element", perm_to_json(g)}, {"l", l}, {"m", m}, {"u", vertex_json(ctx, u)}});
    }
  });
}

void check_transposition_ii(const Json& params, Cache& cache, Recorder& rec) {
  Nzc ctx = binary_space(params, cache.limits(), 3);
  for_each_basis_swap(ctx, [&](std::span<const Vertex> g, int l, int m) {
    for (Vertex u = 0; u < g.size(); ++u) {
      const Vect& x = ctx.vectors[u];
      const Vect& y = ctx.vectors[g[u]];
      rec.checked();
      if ((x.in_skeleton(l) && x.in_skeleton(m)) != (y.in_skeleton(l) && y.in_skeleton(m)))
        rec.fail({{"element", perm_to_json(g)}, {"l", l}, {"m", m}, {"u", vertex_json(ctx, u)}});
    }
  });
}

void check_skeleton_difference(const Json& params, Cache& cache, Recorder& rec) {
  Nzc ctx = binary_space(params, cache.limits(), 3);
  for (auto g : ctx.group.elements())
    for (Vertex u = 0; u < g.size(); ++u) {
      const Vertex v = g[u];
      if (v == u || g[v] != u || ctx.tier(u) >= ctx.n()) continue;
      const Skeleton su = ctx.skel(u), sv = ctx.skel(v);
      for (int b = 0; b < ctx.n(); ++b) {
        if (!((su >> b) & 1U)) continue;
        const int gb = ctx.basis_index(g[ctx.basis[b]]);
        const Skeleton img = gb < 0 ? 0 : Skeleton{1} << gb;
        const Skeleton target = ((sv >> b) & 1U) ? (su & sv) : (sv & ~su);
        rec.checked();
        if ((img & target) == 0)
          rec.fail({{"element", perm_to_json(g)}, {"u", vertex_json(ctx, u)}, {"b", b}, {"image", gb}});
      }
    }
}

void check_stabilizer_skeleton(const Json& params, Cache& cache, Recorder& rec) {
  Nzc ctx = binary_space(params, cache.limits(), 3);
  for (auto g : ctx.group.elements())
    for (Vertex u = 0; u < g.size(); ++u) {
      if (g[u] != u) continue;
      for (int b = 0; b < ctx.n(); ++b) {
        const int gb = ctx.basis_index(g[ctx.basis[b]]);
        rec.checked();
        if (gb < 0 || ctx.vectors[u].in_skeleton(b) != ctx.vectors[u].in_skeleton(gb))
          rec.fail({{"element", perm_to_json(g)}, {"u", vertex_json(ctx, u)}, {"b", b}, {"image", gb}});
      }
    }
}

void check_three_part_lemma(const Json& params, Cache& cache, Recorder& rec) {
  Nzc ctx = binary_space(params, cache.limits(), 4);
  const Skeleton full = ctx.space.full_skeleton();
  for_each_basis_swap(ctx, [&](std::span<const Vertex> g, int l, int m) {
    const Skeleton bl = Skeleton{1} << l, bm = Skeleton{1} << m;
    const Vertex pair = ctx.with_skeleton(bl | bm);
    const Vertex rest = ctx.with_skeleton(full & ~(bl | bm));
    const Vertex u = ctx.with_skeleton(full & ~bl), v = ctx.with_skeleton(full & ~bm);
    rec.checked(3);
    auto base = [&](const char* part) { return Json{{"part", part}, {"element", perm_to_json(g)}, {"l", l}, {"m", m}}; };
    if (g[pair] != pair) rec.fail(base("i"));
    if (g[rest] != rest) rec.fail(base("ii"));
    if (g[u] != v || g[v] != u) rec.fail(base("iii"));
  });
}

// ---------------------------------------------------------------- fixing neighbourhoods

void check_fixngh_theorem(const Json& params, Cache& cache, Recorder& rec) {
  Nzc ctx = binary_space(params, cache.limits(), 3);
  StabilizerOrbits table(ctx.group);
  for_each_same_tier_pair(ctx, [&](Vertex u, Vertex v) {
    VertexSet by_definition = table.fixing_neighbourhood(u, v);
    VertexSet by_skeleton = fix_pair_skeleton(ctx.space, ctx.vectors[u], ctx.vectors[v]);
    rec.checked();
    if (by_definition != by_skeleton)
      rec.fail({{"u", vertex_json(ctx, u)},
                {"v", vertex_json(ctx, v)},
                {"definitional", skeleton_set_json(ctx, by_definition)},
                {"skeleton", skeleton_set_json(ctx, by_skeleton)}});
  });
}

void check_basis_pair(const Json& params, Cache& cache, Recorder& rec) {
  Nzc ctx = binary_space(params, cache.limits(), 3);
  StabilizerOrbits table(ctx.group);
  for (int l = 0; l < ctx.n(); ++l)
    for (int m = l + 1; m < ctx.n(); ++m) {
      VertexSet expected = table.fixing_neighbourhood(ctx.basis[l], ctx.basis[m]);
      VertexSet actual = fix_pair_basis(ctx.space, l, m);
      rec.checked();
      if (expected != actual)
        rec.fail({{"l", l}, {"m", m}, {"definitional", skeleton_set_json(ctx, expected)},
                  {"basis_rule", skeleton_set_json(ctx, actual)}});
    }
}

VertexSet basis_vertices(const Nzc& ctx, Skeleton s) {
  VertexSet out(ctx.vectors.size());
  for (int i = 0; i < ctx.n(); ++i)
    if ((s >> i) & 1U) out.set(ctx.basis[i]);
  return out;
}

void check_fnp_i(const Json& params, Cache& cache, Recorder& rec) {
  Nzc ctx = binary_space(params, cache.limits(), 3);
  StabilizerOrbits table(ctx.group);
  for_each_same_tier_pair(ctx, [&](Vertex u, Vertex v) {
    VertexSet bad = table.fixing_neighbourhood(u, v) & basis_vertices(ctx, ctx.skel(u) & ctx.skel(v));
    rec.checked();
    if (bad.any()) rec.fail({{"u", vertex_json(ctx, u)}, {"v", vertex_json(ctx, v)}, {"common", skeleton_set_json(ctx, bad)}});
  });
}

void check_fnp_ii(const Json& params, Cache& cache, Recorder& rec) {
  Nzc ctx = binary_space(params, cache.limits(), 3);
  StabilizerOrbits table(ctx.group);
  for_each_same_tier_pair(ctx, [&](Vertex u, Vertex v) {
    VertexSet slice = table.fixing_neighbourhood(u, v) & basis_vertices(ctx, ctx.space.full_skeleton());
    VertexSet expected = basis_vertices(ctx, ctx.skel(u) ^ ctx.skel(v));
    rec.checked();
    if (slice != expected)
      rec.fail({{"u", vertex_json(ctx, u)}, {"v", vertex_json(ctx, v)}, {"tier1_slice", skeleton_set_json(ctx, slice)},
                {"symmetric_difference", skeleton_set_json(ctx, expected)}});
  });
}

void check_translation(const Json& params, Cache& cache, Recorder& rec) {
  Nzc ctx = binary_space(params, cache.limits(), 3);
  StabilizerOrbits table(ctx.group);
  for_each_same_tier_pair(ctx, [&](Vertex u, Vertex v) {
    auto [tu, tv] = translate_pair(ctx.vectors[u], ctx.vectors[v]);
    VertexSet before = table.fixing_neighbourhood(u, v);
    VertexSet after = table.fixing_neighbourhood(vertex_of(ctx.space, tu), vertex_of(ctx.space, tv));
    rec.checked();
    if (before != after)
      rec.fail({{"u", vertex_json(ctx, u)}, {"v", vertex_json(ctx, v)}, {"translated", Json{tu.to_string(), tv.to_string()}}});
  });
}



void run_counting(const Nzc& ctx, bool overlapping, const CountFormula& formula, Recorder& rec) {
  StabilizerOrbits table(ctx.group);
  const int n = ctx.n();
  for_each_same_tier_pair(ctx, [&](Vertex u, Vertex v) {
    const int i_prime = ctx.tier(u);
    const int overlap = std::popcount(ctx.skel(u) & ctx.skel(v));
    if ((overlap > 0) != overlapping) return;
    VertexSet fix = table.fixing_neighbourhood(u, v);
    std::vector<std::int64_t> per_tier(n + 1, 0);
    for (Vertex x : to_vector(fix)) ++per_tier[ctx.tier(x)];
    for (int i = 1; i <= n - 1; ++i) {
      std::int64_t predicted;
      if (formula) predicted = formula(n, i_prime - overlap, i);
      else if (overlapping) predicted = fix_count_overlapping(n, i_prime, overlap, i);
      else predicted = fix_count_in_tier(n, i_prime, i);
      rec.checked();
      if (predicted != per_tier[i])
        rec.fail({{"u", vertex_json(ctx, u)}, {"v", vertex_json(ctx, v)}, {"i_prime", i_prime}, {"overlap", overlap},
                  {"i", i}, {"formula", predicted}, {"oracle", per_tier[i]}});
    }
  });
}

void check_counting_theorem(const Json& params, Cache& cache, Recorder& rec) {
  run_counting(binary_space(params, cache.limits(), 3), false, {}, rec);
}

void check_counting_corollary(const Json& params, Cache& cache, Recorder& rec) {
  run_counting(binary_space(params, cache.limits(), 3), true, {}, rec);
}

// ---------------------------------------------------------------- fixed numbers

void check_fxd_q2(const Json& params, Cache& cache, Recorder& rec) {
  Nzc ctx = binary_space(params, cache.limits(), 3);
  MinimumSet fxd = fixed_number(ctx.group);
  const std::size_t expected = std::size_t{1} << (ctx.n() - 1);
  rec.checked();
  rec.note("fixed_number", fxd.value);
  rec.note("max_nonfixing_size", fxd.witness.count());
  if (fxd.value != expected || fxd.witness.count() != expected - 1)
    rec.fail({{"fixed_number", fxd.value}, {"expected", expected}, {"max_nonfixing", skeleton_set_json(ctx, fxd.witness)}});
}

// A transposition (u v) is an automorphism iff it fixes order - 2 points,
// the most a non-identity permutation can fix.
std::optional<Edge> transposition_automorphism(const Graph& g) {
  std::vector<Vertex> images(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) {
      for (Vertex x = 0; x < g.order(); ++x) images[x] = x;
      std::swap(images[u], images[v]);
      if (is_automorphism(g, images)) return Edge{u, v};
    }
  return std::nullopt;
}

void check_fxd_qge3(const Json& params, Cache& cache, Recorder& rec) {
  const int n = int_param(params, "n");
  const int q = int_param(params, "q");
  if (q < 3) throw std::invalid_argument("this claim is stated for q >= 3");
  Space space(n, q);
  Graph g = build_nzc_graph(space, cache.limits());
  auto vectors = enumerate_vectors(space, cache.limits());
  const std::size_t order = g.order();

  // Twin classes are exactly the equal-skeleton classes, of size (q-1)^i.
  auto classes = twin_classes(g);
  std::map<Skeleton, std::vector<Vertex>> by_skeleton;
  for (Vertex v = 0; v < order; ++v) by_skeleton[vectors[v].skeleton()].push_back(v);
  std::vector<std::vector<Vertex>> expected;
  for (auto& [s, members] : by_skeleton) expected.push_back(members);
  std::sort(expected.begin(), expected.end());
  rec.checked();
  if (classes != expected) rec.fail({{"part", "twin-classes"}, {"twin_classes", classes.size()}, {"skeleton_classes", expected.size()}});
  for (const auto& cls : expected) {
    rec.checked();
    const int i = vectors[cls.front()].tier();
    std::size_t size = 1;
    for (int k = 0; k < i; ++k) size *= static_cast<std::size_t>(q - 1);
    if (cls.size() != size) rec.fail({{"part", "class-size"}, {"skeleton", vectors[cls.front()].to_string()}, {"size", cls.size()}});
  }

  auto twins = check_twin_criterion(g);
  rec.checked();
  if (!twins.has_twins) rec.fail({{"part", "twin-criterion"}});

  auto swap = transposition_automorphism(g);
  const std::size_t fxd_from_swap = swap ? order - 1 : 0;
  rec.checked();
  rec.note("fixed_number", fxd_from_swap);
  if (fxd_from_swap != order - 1) rec.fail({{"part", "transposition"}, {"order", order}});

  try {
    AutGroup group = automorphism_group(g, cache.limits());
    MinimumSet fxd = fixed_number(group);
    rec.checked();
    rec.note("solver_fixed_number", fxd.value);
    if (fxd.value != order - 1) rec.fail({{"part", "solver"}, {"fixed_number", fxd.value}, {"expected", order - 1}});
  } catch (const ResourceError& e) {
    rec.note("solver_skipped", e.what());
  }
}

void check_twin_criterion_claim(const Json& params, Cache& cache, Recorder& rec) {
  const auto& facts = cache.facts(string_param(params, "graph"));
  auto twins = check_twin_criterion(facts.graph);
  const bool extremal = facts.graph.order() >= 2 && facts.fxd.value == facts.graph.order() - 1;
  rec.checked();
  rec.note("connected", twins.connected);
  rec.note("has_twins", twins.has_twins);
  rec.note("fixed_number", facts.fxd.value);
  if (extremal != twins.has_twins) rec.fail({{"fixed_number", facts.fxd.value}, {"order", facts.graph.order()}, {"has_twins", twins.has_twins}});
}

void check_realizability(const Json& params, Cache& cache, Recorder& rec) {
  const int k = int_param(params, "k");
  const auto& facts = cache.facts("family:" + std::to_string(k));
  const Graph& g = facts.graph;
  rec.checked();
  if (g.order() != (std::size_t{1} << k) + k - 3) rec.fail({{"part", "order"}, {"order", g.order()}});
  VertexSet seen(g.order());
  for (int i = 1; i <= k - 1; ++i) {
    const VertexSet& nb = g.neighbors(family_w(k, i));
    rec.checked(2);
    if (static_cast<std::int64_t>(nb.count()) != binomial(k, i)) rec.fail({{"part", "star-size"}, {"i", i}, {"size", nb.count()}});
    if (nb.intersects(seen)) rec.fail({{"part", "disjoint"}, {"i", i}});
    seen |= nb;
  }
  const auto fix = static_cast<std::int64_t>(facts.fix.value);
  const auto fxd = static_cast<std::int64_t>(facts.fxd.value);
  rec.checked(3);
  rec.note("fixing_number", fix);
  rec.note("fixed_number", fxd);
  rec.note("gap", fxd - fix);
  if (fix != predicted_fix(k)) rec.fail({{"part", "fix"}, {"solver", fix}, {"predicted", predicted_fix(k)}});
  if (fxd != predicted_fxd(k)) rec.fail({{"part", "fxd"}, {"solver", fxd}, {"predicted", predicted_fxd(k)}});
  if (fxd - fix != FamilyParams{k}.gap()) rec.fail({{"part", "gap"}, {"gap", fxd - fix}, {"expected", FamilyParams{k}.gap()}});
}

void check_edge_bound(const Json& params, Cache& cache, Recorder& rec) {
  const auto& facts = cache.facts(string_param(params, "graph"));
  const auto n = static_cast<std::int64_t>(facts.graph.order());
  const auto k = static_cast<std::int64_t>(facts.fix.value);
  const bool applicable = facts.fix.value == facts.fxd.value && n >= 2;
  rec.note("applicable", applicable);
  rec.note("edges", facts.fixing_graph.edge_count);
  if (!applicable) return;
  const std::int64_t bound = n * (binomial(n, 2) - k + 1);
  rec.note("bound", bound);
  rec.checked();
  if (static_cast<std::int64_t>(facts.fixing_graph.edge_count) > bound)
    rec.fail({{"edges", facts.fixing_graph.edge_count}, {"bound", bound}, {"k", k}});
}

void check_chain(const Json& params, Cache& cache, Recorder& rec) {
  const auto& facts = cache.facts(string_param(params, "graph"));
  const std::size_t order = facts.graph.order();
  rec.checked();
  rec.note("fixing_number", facts.fix.value);
  rec.note("fixed_number", facts.fxd.value);
  const bool ok = facts.fix.value <= facts.fxd.value && (order == 0 || facts.fxd.value <= order - 1) &&
                  is_fixing_set(facts.group, facts.fix.witness);
  if (!ok) rec.fail({{"fixing_number", facts.fix.value}, {"fixed_number", facts.fxd.value}, {"order", order}});
}

// ---------------------------------------------------------------- registry

using Instances = std::vector<Json> (*)(int n_max, const std::vector<int>& qs);
using Runner = void (*)(const Json&, Cache&, Recorder&);

struct ClaimDef {
  ClaimInfo info;
  Instances instances;
  Runner run;
};

bool has_q(const std::vector<int>& qs, int q) { return std::find(qs.begin(), qs.end(), q) != qs.end(); }

template <int MinN>
std::vector<Json> binary_instances(int n_max, const std::vector<int>& qs) {
  std::vector<Json> out;
  if (has_q(qs, 2))
    for (int n = MinN; n <= n_max; ++n) out.push_back(Json{{"n", n}, {"q", 2}});
  return out;
}

std::vector<Json> odd_q_instances(int n_max, const std::vector<int>& qs) {
  std::vector<Json> out;
  for (int q : qs)
    if (q >= 3)
      for (int n = 2; n <= n_max; ++n) out.push_back(Json{{"n", n}, {"q", q}});
  return out;
}

std::vector<Json> all_q_instances(int n_max, const std::vector<int>& qs) {
  auto out = binary_instances<3>(n_max, qs);
  for (auto& j : odd_q_instances(n_max, qs)) out.push_back(std::move(j));
  return out;
}

std::vector<Json> family_instances(int n_max, const std::vector<int>&) {
  std::vector<Json> out;
  for (int k = 3; k <= std::max(3, std::min(n_max, 4)); ++k) out.push_back(Json{{"k", k}});
  return out;
}

std::vector<Json> corpus_instances(int n_max, const std::vector<int>& qs) {
  std::vector<std::string> specs{"complete:3", "rigid-tree"};
  for (int n = 3; n <= 8; ++n) specs.push_back("cycle:" + std::to_string(n));
  for (int n = 2; n <= 8; ++n) specs.push_back("path:" + std::to_string(n));
  for (int n = 2; n <= 4; ++n) specs.push_back("star:" + std::to_string(n));
  if (has_q(qs, 2))
    for (int n = 3; n <= n_max; ++n) specs.push_back("nzc:" + std::to_string(n) + ":2");
  for (int q : qs)
    if (q >= 3 && n_max >= 2) specs.push_back("nzc:2:" + std::to_string(q));
  for (auto& k : family_instances(n_max, qs)) specs.push_back("family:" + std::to_string(k["k"].get<int>()));
  std::vector<Json> out;
  for (auto& s : specs) out.push_back(Json{{"graph", s}});
  return out;
}

const std::vector<ClaimDef>& registry() {
  static const std::vector<ClaimDef> defs{
      {{"deg-formula", "deg(v) = (2^s - 1) 2^(n-s) - 1 for every tier-s vertex (q = 2)"}, binary_instances<3>, check_deg_formula},
      {{"aut-order", "|Aut G(V)| = n! (observation, q = 2)"}, binary_instances<3>, check_aut_order},
      {{"basis-image", "automorphisms send basis vectors to multiples of distinct basis vectors"}, all_q_instances, check_basis_image},
      {{"tier-preservation", "vertices of different tiers are never mapped to each other"}, binary_instances<3>, check_tier_preservation},
      {{"top-vertex-fixed", "the all-ones vector is fixed by every automorphism"}, binary_instances<3>, check_top_vertex_fixed},
      {{"tier-orbit", "u, v share an orbit iff they share a tier below n"}, binary_instances<3>, check_tier_orbit},
      {{"basis-membership", "g in Stab(b_l): b_l in S_u iff b_l in S_g(u)"}, binary_instances<3>, check_basis_membership},
      {{"transposition-i", "g swapping b_l, b_m: b_l in S_u, b_m not => b_m in S_g(u), b_l not"}, binary_instances<3>, check_transposition_i},
      {{"transposition-ii", "g swapping b_l, b_m: b_l, b_m in S_u iff b_l, b_m in S_g(u)"}, binary_instances<3>, check_transposition_ii},
      {{"skeleton-difference", "g swapping u, v: common basis stays common, private basis changes side"}, binary_instances<3>, check_skeleton_difference},
      {{"stabilizer-skeleton", "g in Stab(u) maps S_u onto S_u"}, binary_instances<3>, check_stabilizer_skeleton},
      {{"three-part-lemma", "g swapping b_l, b_m fixes b_l+b_m and its complement, swaps the co-singletons"}, binary_instances<4>, check_three_part_lemma},
      {{"fixngh-theorem", "fix(u,v) = { w in S(G) : |S_w ∩ S_u| != |S_w ∩ S_v| }"}, binary_instances<3>, check_fixngh_theorem},
      {{"basis-pair", "fix(b_l,b_m) = moved vertices containing exactly one of b_l, b_m"}, binary_instances<3>, check_basis_pair},
      {{"fnp-i", "fix(u,v) misses the common skeleton"}, binary_instances<3>, check_fnp_i},
      {{"fnp-ii", "fix(u,v) ∩ T_1 is the symmetric difference of skeletons"}, binary_instances<3>, check_fnp_ii},
      {{"translation", "fix(u,v) is unchanged by removing the common skeleton"}, binary_instances<3>, check_translation},
      {{"counting-theorem", "|fix(u,v) ∩ T_i| formula for disjoint skeletons"}, binary_instances<3>, check_counting_theorem},
      {{"counting-corollary", "|fix(u,v) ∩ T_i| formula for overlapping skeletons"}, binary_instances<3>, check_counting_corollary},
      {{"fxd-q2", "fxd G(V) = 2^(n-1) for q = 2"}, binary_instances<3>, check_fxd_q2},
      {{"fxd-qge3", "fxd G(V) = |G(V)| - 1 for q >= 3"}, odd_q_instances, check_fxd_qge3},
      {{"twin-criterion", "fxd(G) = |G| - 1 iff G has twins"}, corpus_instances, check_twin_criterion_claim},
      {{"realizability", "star family: fix = 2^k-(k+1), fxd = 2^k+k-4, gap 2k-3"}, family_instances, check_realizability},
      {{"edge-bound", "fix = fxd = k => |E(F(G))| <= n(C(n,2) - k + 1)"}, corpus_instances, check_edge_bound},
      {{"fix-fxd-chain", "0 <= fix <= fxd <= |G| - 1"}, corpus_instances, check_chain},
  };
  return defs;
}

const ClaimDef& find_claim(std::string_view id) {
  for (const auto& d : registry())
    if (d.info.id == id) return d;
  throw std::invalid_argument("unknown claim '" + std::string(id) + "'");
}

CheckReport execute(const ClaimDef& def, const Json& params, Cache& cache) {
  CheckReport report;
  report.claim_id = std::string(def.info.id);
  report.params = params;
  Recorder rec;
  const auto start = std::chrono::steady_clock::now();
  try {
    def.run(params, cache, rec);
    report.status = rec.failed() ? Status::fail : Status::pass;
    report.witnesses = rec.witnesses();
  } catch (const ResourceError& e) {
    report.status = Status::resource_cap;
    report.witnesses = Json::array({Json{{"error", e.what()}}});
  }
  report.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

const std::vector<ClaimInfo>& claims() {
  static const std::vector<ClaimInfo> infos = [] {
    std::vector<ClaimInfo> out;
    for (const auto& d : registry()) out.push_back(d.info);
    return out;
  }();
  return infos;
}

bool is_known_claim(std::string_view id) {
  return std::any_of(registry().begin(), registry().end(), [&](const ClaimDef& d) { return d.info.id == id; });
}

std::vector<CheckReport> run_suite(int n_max, const std::vector<int>& q_list, const std::vector<std::string>& filter,
                                   const Limits& limits) {
  for (const auto& id : filter)
    if (!is_known_claim(id)) throw std::invalid_argument("unknown claim '" + id + "'");
  for (int q : q_list)
    if (!is_prime(q)) throw std::invalid_argument("field order " + std::to_string(q) + " is not prime");
  Cache cache(limits);
  std::vector<CheckReport> out;
  for (const auto& def : registry()) {
    if (!filter.empty() && std::find(filter.begin(), filter.end(), def.info.id) == filter.end()) continue;
    for (const auto& params : def.instances(n_max, q_list)) out.push_back(execute(def, params, cache));
  }
  return out;
}

CheckReport run_check(std::string_view claim_id, const Json& params, const Limits& limits) {
  Cache cache(limits);
  return execute(find_claim(claim_id), params, cache);
}

CheckReport check_counting(int n, bool overlapping, const CountFormula& formula, const Limits& limits) {
  CheckReport report;
  report.claim_id = overlapping ? "counting-corollary" : "counting-theorem";
  report.params = Json{{"n", n}, {"q", 2}};
  Recorder rec;
  try {
    run_counting(Nzc(n, 2, limits), overlapping, formula, rec);
    report.status = rec.failed() ? Status::fail : Status::pass;
    report.witnesses = rec.witnesses();
  } catch (const ResourceError& e) {
    report.status = Status::resource_cap;
    report.witnesses = Json::array({Json{{"error", e.what()}}});
  }
  return report;
}

Graph graph_from_spec(std::string_view spec) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : spec) {
    if (c == ':') parts.push_back(std::exchange(cur, {}));
    else cur += c;
  }
  parts.push_back(cur);
  auto num = [&](std::size_t i) {
    if (i >= parts.size()) throw std::invalid_argument("graph spec '" + std::string(spec) + "' is missing a parameter");
    try {
      std::size_t used = 0;
      int v = std::stoi(parts[i], &used);
      if (used != parts[i].size()) throw std::invalid_argument("trailing characters");
      return v;
    } catch (const std::exception&) {
      throw std::invalid_argument("bad number in graph spec '" + std::string(spec) + "'");
    }
  };
  const std::string& kind = parts[0];
  auto arity = [&](std::size_t k) {
    if (parts.size() != k + 1) throw std::invalid_argument("graph spec '" + std::string(spec) + "' has wrong arity");
  };
  if (kind == "cycle") return arity(1), cycle_graph(num(1));
  if (kind == "path") return arity(1), path_graph(num(1));
  if (kind == "star") return arity(1), star_graph(num(1));
  if (kind == "complete") return arity(1), complete_graph(num(1));
  if (kind == "rigid-tree") return arity(0), asymmetric_tree();
  if (kind == "family") return arity(1), build_family_graph(num(1));
  if (kind == "nzc") return arity(2), build_nzc_graph(Space(num(1), num(2)));
  throw std::invalid_argument("unknown graph kind '" + kind + "'");
}

Json to_json(const CheckReport& report, bool with_runtime) {
  Json out;
  out["claim_id"] = report.claim_id;
  out["params"] = report.params;
  out["status"] = status_name(report.status);
  out["witnesses"] = report.witnesses;
  if (with_runtime) out["runtime_ms"] = report.runtime_ms;
  return out;
}

}  // namespace symforge::verify
