#include "symforge/hitting_set.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace symforge {

std::vector<VertexSet> minimal_constraints(std::vector<VertexSet> constraints) {
  std::sort(constraints.begin(), constraints.end(), [](const VertexSet& a, const VertexSet& b) {
    auto ca = a.count(), cb = b.count();
    return ca != cb ? ca < cb : a < b;
  });
  constraints.erase(std::unique(constraints.begin(), constraints.end()), constraints.end());
  std::vector<VertexSet> kept;
  for (auto& c : constraints) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [&](const VertexSet& k) { return k.is_subset_of(c); });
    if (!dominated) kept.push_back(std::move(c));
  }
  return kept;
}

namespace {

class BranchAndBound {
 public:
  BranchAndBound(std::size_t universe, std::vector<VertexSet> constraints, const std::vector<Vertex>& priority)
      : universe_(universe), constraints_(std::move(constraints)), rank_(universe, universe) {
    for (std::size_t k = 0; k < priority.size(); ++k) {
      if (priority[k] >= universe) throw std::out_of_range("priority vertex out of range");
      if (rank_[priority[k]] == universe) rank_[priority[k]] = k;
    }
    // Vertices missing from `priority` go last, by id.
    std::size_t next = priority.size();
    for (Vertex v = 0; v < universe; ++v)
      if (rank_[v] == universe) rank_[v] = next++;
  }

  VertexSet solve() {
    best_ = greedy();
    std::vector<std::size_t> open(constraints_.size());
    std::iota(open.begin(), open.end(), std::size_t{0});
    VertexSet chosen(universe_);
    VertexSet excluded(universe_);
    search(chosen, excluded, open);
    return best_;
  }

 private:
  std::vector<Vertex> by_rank(const VertexSet& s) const {
    auto out = to_vector(s);
    std::sort(out.begin(), out.end(), [&](Vertex a, Vertex b) { return rank_[a] < rank_[b]; });
    return out;
  }

  VertexSet greedy() const {
    VertexSet chosen(universe_);
    std::vector<std::size_t> open(constraints_.size());
    std::iota(open.begin(), open.end(), std::size_t{0});
    while (!open.empty()) {
      std::vector<std::size_t> hits(universe_, 0);
      for (auto c : open)
        for (auto v = constraints_[c].find_first(); v != VertexSet::npos; v = constraints_[c].find_next(v)) ++hits[v];
      Vertex pick = 0;
      for (Vertex v = 1; v < universe_; ++v)
        if (hits[v] > hits[pick] || (hits[v] == hits[pick] && rank_[v] < rank_[pick])) pick = v;
      chosen.set(pick);
      std::erase_if(open, [&](std::size_t c) { return constraints_[c].test(pick); });
    }
    return chosen;
  }

  std::size_t lower_bound(const std::vector<std::size_t>& open, const VertexSet& excluded) const {
    std::vector<std::pair<std::size_t, std::size_t>> sized;
    sized.reserve(open.size());
    for (auto c : open) sized.emplace_back((constraints_[c] - excluded).count(), c);
    std::sort(sized.begin(), sized.end());
    VertexSet used(universe_);
    std::size_t packed = 0;
    for (auto [size, c] : sized) {
      VertexSet allowed = constraints_[c] - excluded;
      if (!allowed.intersects(used)) {
        used |= allowed;
        ++packed;
      }
    }
    return packed;
  }

  void search(VertexSet& chosen, VertexSet& excluded, const std::vector<std::size_t>& open) {
    const std::size_t depth = chosen.count();
    if (open.empty()) {
      if (depth < best_.count()) best_ = chosen;
      return;
    }
    if (depth + 1 >= best_.count()) return;
    if (depth + lower_bound(open, excluded) >= best_.count()) return;

    std::size_t branch = open.front();
    std::size_t fewest = SIZE_MAX;
    for (auto c : open) {
      std::size_t k = (constraints_[c] - excluded).count();
      if (k < fewest) fewest = k, branch = c;
    }
    if (fewest == 0) return;

    VertexSet saved_excluded = excluded;
    for (Vertex v : by_rank(constraints_[branch] - excluded)) {
      std::vector<std::size_t> rest;
      rest.reserve(open.size());
      for (auto c : open)
        if (!constraints_[c].test(v)) rest.push_back(c);
      chosen.set(v);
      search(chosen, excluded, rest);
      chosen.reset(v);
      excluded.set(v);
      if (depth + 1 >= best_.count()) break;
    }
    excluded = saved_excluded;
  }

  std::size_t universe_;
  std::vector<VertexSet> constraints_;
  std::vector<std::size_t> rank_;
  VertexSet best_;
};

}  // namespace

std::optional<VertexSet> min_hitting_set(std::size_t universe, std::vector<VertexSet> constraints,
                                         const std::vector<Vertex>& priority) {
  for (const auto& c : constraints) {
    if (c.size() != universe) throw std::invalid_argument("constraint size does not match universe");
    if (c.none()) return std::nullopt;
  }
  if (constraints.empty()) return VertexSet(universe);
  BranchAndBound solver(universe, minimal_constraints(std::move(constraints)), priority);
  return solver.solve();
}

}  // namespace symforge
