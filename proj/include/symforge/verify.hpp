#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "symforge/core.hpp"
#include "symforge/graph.hpp"
#include "symforge/io.hpp"

namespace symforge::verify {

enum class Status { pass, fail, resource_cap };

std::string_view status_name(Status s);

/// Outcome of one claim on one parameter instance. A failing report
/// carries concrete counterexamples (vertex ids, permutation images)
/// that can be replayed through the public operations.
struct CheckReport {
  std::string claim_id;
  Json params;
  Status status = Status::pass;
  Json witnesses = Json::array();
  double runtime_ms = 0.0;
};

struct ClaimInfo {
  std::string_view id;
  std::string_view summary;
};

/// Registered claims in suite order.
const std::vector<ClaimInfo>& claims();
bool is_known_claim(std::string_view id);

/// Every claim (or those in `filter`) on every instance the limits allow:
/// q = 2 spaces for 3 <= n <= n_max (4 <= n for the three-part lemma),
/// q >= 3 spaces for 2 <= n <= n_max, family graphs for 3 <= k <= min(n_max, 4),
/// and a fixed corpus of small graphs. Resource-cap hits become
/// per-report statuses. Throws std::invalid_argument for unknown claim ids.
std::vector<CheckReport> run_suite(int n_max, const std::vector<int>& q_list,
                                   const std::vector<std::string>& filter = {},
                                   const Limits& limits = default_limits());

/// Replays one claim on one instance, e.g. ("fixngh-theorem", {"n":4,"q":2}).
CheckReport run_check(std::string_view claim_id, const Json& params, const Limits& limits = default_limits());

/// Disjoint-pair count kernel (n, i', i) used by the counting checks.
using CountFormula = std::function<std::int64_t(int, int, int)>;

/// Counting theorem (overlapping = false) or corollary (true) at dimension
/// n, with the formula swapped for `formula` when given. Used to confirm
/// that a corrupted formula is caught.
CheckReport check_counting(int n, bool overlapping, const CountFormula& formula = {},
                           const Limits& limits = default_limits());

/// Corpus graph from a spec string: "cycle:5", "path:4", "star:3",
/// "complete:3", "rigid-tree", "nzc:<n>:<q>", "family:<k>".
Graph graph_from_spec(std::string_view spec);

Json to_json(const CheckReport& report, bool with_runtime = true);

}  // namespace symforge::verify
