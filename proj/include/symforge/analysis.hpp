#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symforge/fixing.hpp"
#include "symforge/io.hpp"

namespace symforge {

struct FixingGraphStats {
  std::size_t left = 0;
  std::size_t pairs = 0;
  std::size_t edges = 0;
  std::size_t cover_number = 0;
};

/// Everything the `analyze` command prints for one graph.
struct Analysis {
  std::size_t order = 0;
  std::size_t edge_count = 0;
  std::size_t aut_order = 0;
  std::vector<std::vector<Vertex>> orbits;
  VertexSet moved;
  FixReport fix;
  std::optional<FixingGraphStats> fixing_graph;
};

Analysis analyze_graph(const Graph& g, bool with_fixing_graph, const Limits& limits = default_limits());

Json analysis_to_json(const Analysis& a);
std::string analysis_to_table(const Analysis& a);

}  // namespace symforge
