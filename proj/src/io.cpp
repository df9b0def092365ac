#include "symforge/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>

#include "symforge/vecspace.hpp"

namespace symforge {

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "json") return GraphFormat::json;
  if (name == "edgelist") return GraphFormat::edgelist;
  if (name == "dot") return GraphFormat::dot;
  throw std::invalid_argument("unknown graph format '" + std::string(name) + "'");
}

std::string_view format_name(GraphFormat f) {
  switch (f) {
    case GraphFormat::json: return "json";
    case GraphFormat::edgelist: return "edgelist";
    case GraphFormat::dot: return "dot";
  }
  return "?";
}

std::optional<GraphFormat> format_from_extension(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".json") return GraphFormat::json;
  if (ext == ".txt" || ext == ".el" || ext == ".edges" || ext == ".edgelist") return GraphFormat::edgelist;
  if (ext == ".dot" || ext == ".gv") return GraphFormat::dot;
  return std::nullopt;
}

// ---------------------------------------------------------------- writers

Json graph_to_json(const Graph& g) {
  Json out;
  out["order"] = g.order();
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  out["edges"] = std::move(edges);
  if (g.has_labels() && g.order() > 0 && g.label(0)) {
    out["q"] = g.label(0)->field();
    Json labels = Json::array();
    for (Vertex v = 0; v < g.order(); ++v) labels.push_back(g.label(v) ? g.label(v)->to_string() : "");
    out["labels"] = std::move(labels);
  }
  return out;
}

std::string graph_to_edgelist(const Graph& g) {
  std::ostringstream out;
  out << "# order " << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string graph_to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  if (g.has_labels() && g.order() > 0 && g.label(0)) out << "  graph [q=" << g.label(0)->field() << "];\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (g.label(v)) out << " [label=\"" << g.label(v)->to_string() << "\"]";
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string write_graph(const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::json: return graph_to_json(g).dump(2) + "\n";
    case GraphFormat::edgelist: return graph_to_edgelist(g);
    case GraphFormat::dot: return graph_to_dot(g);
  }
  return {};
}

// ---------------------------------------------------------------- readers

namespace {

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

std::optional<std::uint64_t> to_uint(std::string_view s) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

struct RawGraph {
  std::optional<std::size_t> order;
  std::vector<Vertex> nodes;
  std::vector<std::pair<Edge, std::size_t>> edges;  // edge, source line
};

// Labels are digit strings, dot-separated when q > 10; "" means unlabelled.
std::vector<std::optional<Vect>> parse_labels(const std::vector<std::string>& labels, int q) {
  std::vector<std::optional<Vect>> parsed;
  try {
    for (const auto& s : labels) {
      if (s.empty()) {
        parsed.emplace_back();
        continue;
      }
      const auto n = q > 10 ? std::count(s.begin(), s.end(), '.') + 1 : static_cast<std::ptrdiff_t>(s.size());
      parsed.emplace_back(Vect::parse(Space(static_cast<int>(n), q), s));
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad label: ") + e.what());
  } catch (const std::domain_error& e) {
    throw ParseError(std::string("bad label: ") + e.what());
  }
  return parsed;
}

Graph assemble(const RawGraph& raw, const Limits& limits) {
  std::size_t order = 0;
  if (raw.order) {
    order = *raw.order;
  } else {
    std::vector<bool> seen;
    auto mark = [&](Vertex v) {
      if (v >= seen.size()) seen.resize(v + 1, false);
      seen[v] = true;
    };
    for (Vertex v : raw.nodes) mark(v);
    for (auto& [e, line] : raw.edges) mark(e.first), mark(e.second);
    if (seen.empty()) throw ParseError("graph has no vertices");
    for (std::size_t v = 0; v < seen.size(); ++v)
      if (!seen[v]) throw ParseError("vertex ids are not contiguous: " + std::to_string(v) + " is missing");
    order = seen.size();
  }
  if (order > limits.max_order)
    throw ResourceError("graph order " + std::to_string(order) + " exceeds cap of " + std::to_string(limits.max_order));
  Graph g(order);
  for (Vertex v : raw.nodes)
    if (v >= order) throw ParseError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(order));
  for (auto& [e, line] : raw.edges) {
    if (e.first >= order || e.second >= order)
      throw ParseError("edge endpoint out of range for order " + std::to_string(order), line);
    if (e.first == e.second) throw ParseError("self-loop at vertex " + std::to_string(e.first), line);
    g.add_edge(e.first, e.second);
  }
  return g;
}

Graph read_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0));
  }
  if (!doc.is_object()) throw ParseError("graph JSON must be an object");
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (it.key() != "order" && it.key() != "edges" && it.key() != "q" && it.key() != "labels")
      throw ParseError("unexpected key '" + it.key() + "' in graph JSON");
  if (!doc.contains("order") || !doc["order"].is_number_unsigned()) throw ParseError("'order' must be a non-negative integer");
  if (!doc.contains("edges") || !doc["edges"].is_array()) throw ParseError("'edges' must be an array");
  RawGraph raw;
  raw.order = doc["order"].get<std::size_t>();
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned())
      throw ParseError("each edge must be a pair of non-negative integers");
    raw.edges.push_back({{e[0].get<Vertex>(), e[1].get<Vertex>()}, 0});
  }
  Graph g = assemble(raw, default_limits());
  if (doc.contains("labels")) {
    if (!doc.contains("q") || !doc["q"].is_number_integer()) throw ParseError("'labels' requires an integer 'q'");
    const auto& labels = doc["labels"];
    if (!labels.is_array() || labels.size() != g.order()) throw ParseError("'labels' must have one entry per vertex");
    std::vector<std::string> strings;
    for (const auto& l : labels) {
      if (!l.is_string()) throw ParseError("labels must be strings");
      strings.push_back(l.get<std::string>());
    }
    auto parsed = parse_labels(strings, doc["q"].get<int>());
    g.set_labels(std::move(parsed));
  }
  return g;
}

Graph read_edgelist(std::string_view text) {
  RawGraph raw;
  static const std::regex order_header(R"(^\s*#\s*order\s+(\d+)\s*$)");
  static const std::regex edge_line(R"(^\s*(\S+)\s+(\S+)\s*$)");
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::smatch m;
    if (std::regex_match(line, m, order_header)) {
      if (raw.order) throw ParseError("duplicate order header", lineno);
      auto n = to_uint(m[1].str());
      if (!n) throw ParseError("bad order header", lineno);
      raw.order = *n;
      continue;
    }
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (!std::regex_match(line, m, edge_line)) throw ParseError("expected 'u v'", lineno);
    auto u = to_uint(m[1].str());
    auto v = to_uint(m[2].str());
    if (!u || !v) throw ParseError("vertex ids must be non-negative integers", lineno);
    if (*u > UINT32_MAX || *v > UINT32_MAX) throw ParseError("vertex id too large", lineno);
    raw.edges.push_back({{static_cast<Vertex>(*u), static_cast<Vertex>(*v)}, lineno});
  }
  return assemble(raw, default_limits());
}

Graph read_dot(std::string_view text) {
  RawGraph raw;
  static const std::regex header(R"(^\s*(strict\s+)?graph\s*(\w+)?\s*\{\s*$)");
  static const std::regex edge_stmt(R"(^\s*(\d+)\s*--\s*(\d+)\s*(\[.*\])?\s*;?\s*$)");
  static const std::regex node_stmt(R"(^\s*(\d+)\s*(\[.*\])?\s*;?\s*$)");
  static const std::regex attr_stmt(R"(^\s*(node|edge|graph)\s*\[.*\]\s*;?\s*$)");
  static const std::regex field_attr(R"re(^\s*graph\s*\[\s*q\s*=\s*"?(\d+)"?\s*\]\s*;?\s*$)re");
  static const std::regex label_attr(R"re(label\s*=\s*"([^"]*)")re");
  std::optional<int> q;
  std::map<Vertex, std::string> labels;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool opened = false, closed = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line.compare(first, 2, "//") == 0 || line[first] == '#') continue;
    std::smatch m;
    if (!opened) {
      if (!std::regex_match(line, header)) throw ParseError("expected 'graph {' header", lineno);
      opened = true;
      continue;
    }
    if (closed) throw ParseError("content after closing brace", lineno);
    if (line.substr(first) == "}") {
      closed = true;
      continue;
    }
    if (std::regex_match(line, m, edge_stmt)) {
      auto u = to_uint(m[1].str()), v = to_uint(m[2].str());
      if (!u || !v || *u > UINT32_MAX || *v > UINT32_MAX) throw ParseError("bad vertex id", lineno);
      raw.edges.push_back({{static_cast<Vertex>(*u), static_cast<Vertex>(*v)}, lineno});
    } else if (std::regex_match(line, m, node_stmt)) {
      auto v = to_uint(m[1].str());
      if (!v || *v > UINT32_MAX) throw ParseError("bad vertex id", lineno);
      raw.nodes.push_back(static_cast<Vertex>(*v));
      std::smatch lm;
      const std::string attrs = m[2].str();
      if (std::regex_search(attrs, lm, label_attr)) labels[static_cast<Vertex>(*v)] = lm[1].str();
    } else if (std::regex_match(line, m, field_attr)) {
      auto value = to_uint(m[1].str());
      if (!value || *value > 1000) throw ParseError("bad field order", lineno);
      q = static_cast<int>(*value);
    } else if (!std::regex_match(line, attr_stmt)) {
      throw ParseError("unsupported DOT statement", lineno);
    }
  }
  if (!opened) throw ParseError("missing 'graph {' header");
  if (!closed) throw ParseError("missing closing brace", lineno);
  Graph g = assemble(raw, default_limits());
  if (q && !labels.empty()) {
    std::vector<std::string> strings(g.order());
    for (auto& [v, l] : labels) strings[v] = l;
    g.set_labels(parse_labels(strings, *q));
  }
  return g;
}

}  // namespace

Graph read_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::json: return read_json(text);
    case GraphFormat::edgelist: return read_edgelist(text);
    case GraphFormat::dot: return read_dot(text);
  }
  throw std::invalid_argument("unknown format");
}

Graph read_graph_file(const std::filesystem::path& path, std::optional<GraphFormat> format) {
  if (!format) format = format_from_extension(path);
  if (!format) throw ParseError("cannot infer graph format from '" + path.string() + "'; pass --format");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_graph(buf.str(), *format);
}

// ---------------------------------------------------------------- groups, reports

Json perm_to_json(std::span<const Vertex> images) {
  Json out = Json::array();
  for (Vertex v : images) out.push_back(v);
  return out;
}

Json group_to_json(const AutGroup& group) {
  Json out;
  out["order"] = group.order();
  Json elements = Json::array();
  for (auto g : group.elements()) elements.push_back(perm_to_json(g));
  out["elements"] = std::move(elements);
  return out;
}

Json vertex_set_to_json(const VertexSet& s) {
  Json out = Json::array();
  for (Vertex v : to_vector(s)) out.push_back(v);
  return out;
}

Json fix_report_to_json(const FixReport& report) {
  Json out;
  out["fixing_number"] = report.fixing_number;
  out["fixed_number"] = report.fixed_number;
  out["witness_min_fixing_set"] = vertex_set_to_json(report.witness_min_fixing_set);
  out["witness_max_nonfixing_set"] = vertex_set_to_json(report.witness_max_nonfixing_set);
  return out;
}

Json fixing_graph_to_json(const FixingGraph& fg) {
  Json out;
  out["left"] = vertex_set_to_json(fg.left);
  Json pairs = Json::array();
  for (auto [u, v] : fg.right.pairs) pairs.push_back({u, v});
  out["pairs"] = std::move(pairs);
  Json edges = Json::array();
  for (std::size_t p = 0; p < fg.pair_neighbours.size(); ++p)
    for (Vertex x : to_vector(fg.pair_neighbours[p])) edges.push_back({x, p});
  out["edges"] = std::move(edges);
  out["edge_count"] = fg.edge_count;
  return out;
}

std::string fixing_graph_to_dot(const FixingGraph& fg) {
  std::ostringstream out;
  out << "graph F {\n";
  for (Vertex x : to_vector(fg.left)) out << "  x" << x << " [shape=box, label=\"" << x << "\"];\n";
  for (auto [u, v] : fg.right.pairs)
    out << "  p" << u << '_' << v << " [shape=ellipse, label=\"{" << u << "," << v << "}\"];\n";
  for (std::size_t p = 0; p < fg.pair_neighbours.size(); ++p) {
    auto [u, v] = fg.right.pairs[p];
    for (Vertex x : to_vector(fg.pair_neighbours[p])) out << "  x" << x << " -- p" << u << '_' << v << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace symforge
