#include "symforge/analysis.hpp"

#include <sstream>

namespace symforge {

Analysis analyze_graph(const Graph& g, bool with_fixing_graph, const Limits& limits) {
  Analysis a;
  a.order = g.order();
  a.edge_count = g.edge_count();
  AutGroup group = automorphism_group(g, limits);
  a.aut_order = group.order();
  a.orbits = orbits(group);
  a.moved = moved_vertices(group);
  FixingGraph fg = build_fixing_graph(group);
  a.fix = fix_report(group, fg);
  if (with_fixing_graph)
    a.fixing_graph = FixingGraphStats{fg.left.count(), fg.right.size(), fg.edge_count, cover_number(fg).value};
  return a;
}

Json analysis_to_json(const Analysis& a) {
  Json out;
  out["order"] = a.order;
  out["edges"] = a.edge_count;
  out["aut_order"] = a.aut_order;
  Json orbs = Json::array();
  for (const auto& o : a.orbits) orbs.push_back(o);
  out["orbits"] = std::move(orbs);
  out["moved_vertices"] = vertex_set_to_json(a.moved);
  const Json fix = fix_report_to_json(a.fix);
  for (auto& [key, value] : fix.items()) out[key] = value;
  if (a.fixing_graph) {
    Json fg;
    fg["left"] = a.fixing_graph->left;
    fg["pairs"] = a.fixing_graph->pairs;
    fg["edges"] = a.fixing_graph->edges;
    fg["cover_number"] = a.fixing_graph->cover_number;
    out["fixing_graph"] = std::move(fg);
  }
  return out;
}

namespace {

std::string braces(const std::vector<Vertex>& vs) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i];
  out << '}';
  return out.str();
}

}  // namespace

std::string analysis_to_table(const Analysis& a) {
  std::ostringstream out;
  auto row = [&](const std::string& key, const std::string& value) {
    out << key << std::string(key.size() < 26 ? 26 - key.size() : 1, ' ') << value << '\n';
  };
  row("order", std::to_string(a.order));
  row("edges", std::to_string(a.edge_count));
  row("|Aut|", std::to_string(a.aut_order));
  std::string orbs;
  for (const auto& o : a.orbits) orbs += braces(o) + ' ';
  if (!orbs.empty()) orbs.pop_back();
  row("orbits", orbs);
  row("S(G)", braces(to_vector(a.moved)));
  row("fixing number", std::to_string(a.fix.fixing_number));
  row("fixed number", std::to_string(a.fix.fixed_number));
  row("min fixing set", braces(to_vector(a.fix.witness_min_fixing_set)));
  row("max non-fixing set", braces(to_vector(a.fix.witness_max_nonfixing_set)));
  if (a.fixing_graph) {
    row("F(G) left / pairs", std::to_string(a.fixing_graph->left) + " / " + std::to_string(a.fixing_graph->pairs));
    row("F(G) edges", std::to_string(a.fixing_graph->edges));
    row("F(G) cover number", std::to_string(a.fixing_graph->cover_number));
  }
  return out.str();
}

}  // namespace symforge
