// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "symforge/constructions.hpp"
#include "symforge/fixing.hpp"
#include "symforge/vecspace.hpp"
#include "symforge/verify.hpp"

using namespace symforge;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// Runs one criterion, enforcing its time budget (0 = none).
bool criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double elapsed = seconds_since(start);
  if (budget_s > 0 && elapsed >= budget_s) {
    out.ok = false;
    out.detail += (out.detail.empty() ? "" : "; ") + std::string("over time budget");
  }
  std::printf("criterion %2d %s  %s (%.2fs%s)%s%s\n", id, out.ok ? "PASS" : "FAIL", title, elapsed,
              budget_s > 0 ? (" of " + std::to_string(static_cast<int>(budget_s)) + "s").c_str() : "",
              out.detail.empty() ? "" : ": ", out.detail.c_str());
  std::fflush(stdout);
  return out.ok;
}

struct Facts {
  Graph graph;
  AutGroup group;
  FixingGraph fg;
  MinimumSet fix;
  MinimumSet cover;
  MinimumSet fxd;
};

const Facts& facts(const std::string& spec) {
  static std::map<std::string, Facts> cache;
  auto it = cache.find(spec);
  if (it != cache.end()) return it->second;
  Graph g = verify::graph_from_spec(spec);
  AutGroup group = automorphism_group(g);
  FixingGraph fg = build_fixing_graph(group);
  MinimumSet fix = fixing_number(group, fg);
  MinimumSet cover = cover_number(fg);
  MinimumSet fxd = fixed_number(group);
  return cache.emplace(spec, Facts{std::move(g), std::move(group), std::move(fg), std::move(fix), std::move(cover),
                                   std::move(fxd)})
      .first->second;
}

std::vector<std::string> corpus() {
  std::vector<std::string> specs{"nzc:3:2", "nzc:4:2", "nzc:5:2", "nzc:2:3", "family:3", "family:4",
                                 "rigid-tree", "complete:3"};
  for (int n = 3; n <= 8; ++n) specs.push_back("cycle:" + std::to_string(n));
  for (int n = 2; n <= 8; ++n) specs.push_back("path:" + std::to_string(n));
  for (int k = 2; k <= 5; ++k) specs.push_back("star:" + std::to_string(k));
  return specs;
}

bool suite_passes(const std::vector<verify::CheckReport>& reports, std::string& detail) {
  for (const auto& r : reports)
    if (r.status != verify::Status::pass) {
      detail = verify::to_json(r, false).dump();
      return false;
    }
  return true;
}

}  // namespace

int main() {
  bool ok = true;

  ok &= criterion(1, "degree lemma, q=2, n=3..6", 1.0, [] {
    Outcome out;
    std::size_t checked = 0;
    for (int n = 3; n <= 6; ++n) {
      Space s(n, 2);
      Graph g = build_nzc_graph(s);
      auto vs = enumerate_vectors(s);
      for (Vertex v = 0; v < g.order(); ++v, ++checked)
        if (static_cast<std::int64_t>(g.degree(v)) != degree_formula(n, vs[v].tier())) {
          out = {false, "n=" + std::to_string(n) + " vertex " + vs[v].to_string()};
          return out;
        }
    }
    out.detail = std::to_string(checked) + " vertices";
    return out;
  });

  ok &= criterion(2, "|Aut G(V,2,n)| = n! for n=3..5, n=3 against all 7! bijections", 60.0, [] {
    std::ostringstream msg;
    std::size_t factorial = 2;
    for (int n = 3; n <= 5; ++n) {
      factorial *= static_cast<std::size_t>(n);
      auto order = automorphism_group(build_nzc_graph(Space(n, 2))).order();
      msg << "n=" << n << ":" << order << " ";
      if (order != factorial) return Outcome{false, msg.str()};
    }
    Graph g3 = build_nzc_graph(Space(3, 2));
    auto brute = oracle::automorphisms(g3);
    AutGroup group = automorphism_group(g3);
    std::vector<std::vector<Vertex>> searched;
    for (auto e : group.elements()) searched.emplace_back(e.begin(), e.end());
    if (brute != searched) return Outcome{false, "search and brute force disagree at n=3"};
    msg << "brute force n=3:" << brute.size();
    return Outcome{true, msg.str()};
  });

  ok &= criterion(3, "fix_pair_skeleton = fix_pair_definitional, n=3..5", 120.0, [] {
    std::size_t pairs = 0;
    for (int n = 3; n <= 5; ++n) {
      Space s(n, 2);
      auto vs = enumerate_vectors(s);
      AutGroup group = automorphism_group(build_nzc_graph(s));
      for (Vertex u = 0; u < vs.size(); ++u)
        for (Vertex v = u + 1; v < vs.size(); ++v) {
          if (vs[u].tier() != vs[v].tier() || vs[u].tier() == n) continue;
          ++pairs;
          if (fix_pair_skeleton(s, vs[u], vs[v]) != fix_pair_definitional(group, u, v))
            return Outcome{false, "n=" + std::to_string(n) + " " + vs[u].to_string() + "," + vs[v].to_string()};
        }
    }
    return Outcome{true, std::to_string(pairs) + " pairs"};
  });

  ok &= criterion(4, "counting theorem and corollary, n=4,5; j>=0 mutant caught", 0, [] {
    std::string detail;
    for (int n : {4, 5})
      for (bool overlapping : {false, true}) {
        auto r = verify::check_counting(n, overlapping);
        if (r.status != verify::Status::pass) return Outcome{false, verify::to_json(r, false).dump()};
      }
    auto mutant = verify::check_counting(4, false, [](int n, int ip, int i) { return detail::disjoint_fix_count(n, ip, i, 0); });
    if (mutant.status != verify::Status::fail) return Outcome{false, "mutant not detected"};
    const Json& w = mutant.witnesses[0];
    if (w["i_prime"] != 1 || w["i"] != 1 || w["formula"] != 0 || w["oracle"] != 2)
      return Outcome{false, "unexpected mutant witness " + w.dump()};
    return Outcome{true, "mutant at (4,1,1): formula 0, oracle 2"};
  });

  ok &= criterion(5, "fxd G(V,2,n) = 2^(n-1), n=3,4", 5.0, [] {
    std::ostringstream msg;
    for (int n : {3, 4}) {
      auto fxd = fixed_number(automorphism_group(build_nzc_graph(Space(n, 2)))).value;
      msg << "n=" << n << ":" << fxd << " ";
      if (fxd != (std::size_t{1} << (n - 1))) return Outcome{false, msg.str()};
    }
    return Outcome{true, msg.str()};
  });

  ok &= criterion(6, "fxd G(V,3,2) = 7 = order-1 and twins present", 0, [] {
    Graph g = build_nzc_graph(Space(2, 3));
    auto fxd = fixed_number(automorphism_group(g)).value;
    bool twins = check_twin_criterion(g).has_twins;
    return Outcome{fxd == 7 && g.order() == 8 && twins,
                   "fxd=" + std::to_string(fxd) + " twins=" + (twins ? "true" : "false")};
  });

  ok &= criterion(7, "star family k=3,4: fix 4,11; fxd 7,16; gap 3,5", 30.0, [] {
    std::ostringstream msg;
    bool good = true;
    for (int k : {3, 4}) {
      const Facts& f = facts("family:" + std::to_string(k));
      auto fix = static_cast<std::int64_t>(f.fix.value), fxd = static_cast<std::int64_t>(f.fxd.value);
      msg << "k=" << k << ": fix=" << fix << " fxd=" << fxd << " gap=" << fxd - fix << " ";
      good &= fix == predicted_fix(k) && fxd == predicted_fxd(k) && fxd - fix == 2 * k - 3;
    }
    return Outcome{good, msg.str()};
  });

  ok &= criterion(8, "edge bound |E(F)| <= n(C(n,2)-k+1) where fix = fxd = k", 0, [] {
    std::ostringstream msg;
    std::size_t applicable = 0;
    bool saw_c5 = false, saw_p4 = false;
    for (const auto& spec : corpus()) {
      const Facts& f = facts(spec);
      if (f.fix.value != f.fxd.value || f.graph.order() < 2) continue;
      ++applicable;
      const auto n = static_cast<std::int64_t>(f.graph.order());
      const auto bound = n * (binomial(n, 2) - static_cast<std::int64_t>(f.fix.value) + 1);
      if (static_cast<std::int64_t>(f.fg.edge_count) > bound)
        return Outcome{false, spec + ": " + std::to_string(f.fg.edge_count) + " > " + std::to_string(bound)};
      if (spec == "cycle:5") saw_c5 = true, msg << "C5 " << f.fg.edge_count << "<=" << bound << " ";
      if (spec == "path:4") saw_p4 = true, msg << "P4 " << f.fg.edge_count << "<=" << bound << " ";
    }
    msg << "(" << applicable << " graphs)";
    return Outcome{saw_c5 && saw_p4, msg.str()};
  });

  ok &= criterion(9, "structural lemma suite over every automorphism, n=3..5", 60.0, [] {
    std::string detail;
    auto reports = verify::run_suite(5, {2},
                                     {"tier-preservation", "top-vertex-fixed", "basis-membership", "transposition-i",
                                      "transposition-ii", "skeleton-difference", "stabilizer-skeleton",
                                      "three-part-lemma"});
    if (!suite_passes(reports, detail)) return Outcome{false, detail};
    return Outcome{true, std::to_string(reports.size()) + " reports"};
  });

  ok &= criterion(10, "0 <= fix <= fxd <= order-1 and fixing/cover formulations agree on the corpus", 0, [] {
    std::ostringstream bad;
    bool good = true;
    for (const auto& spec : corpus()) {
      const Facts& f = facts(spec);
      const std::size_t order = f.graph.order();
      if (!(f.fix.value <= f.fxd.value && f.fxd.value + 1 <= std::max<std::size_t>(order, 1))) {
        good = false;
        bad << spec << " chain broken; ";
      }
      if (f.fix.value != f.cover.value) {
        good = false;
        bad << spec << " fix=" << f.fix.value << " cover=" << f.cover.value;
        // Name a pair the minimum fixing set leaves uncovered.
        for (std::size_t p = 0; p < f.fg.right.size(); ++p)
          if (!f.fg.pair_neighbours[p].intersects(f.fix.witness)) {
            bad << " (fixing set " << vertex_set_to_json(f.fix.witness).dump() << " misses pair ["
                << f.fg.right.pairs[p].first << "," << f.fg.right.pairs[p].second << "])";
            break;
          }
        bad << "; ";
      }
    }
    return Outcome{good, good ? std::to_string(corpus().size()) + " graphs" : bad.str()};
  });

  return ok ? 0 : 1;
}
