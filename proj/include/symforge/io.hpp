#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "symforge/autgroup.hpp"
#include "symforge/fixing.hpp"
#include "symforge/graph.hpp"

namespace symforge {

using Json = nlohmann::ordered_json;

enum class GraphFormat { json, edgelist, dot };

/// "json", "edgelist", "dot"; throws std::invalid_argument otherwise.
GraphFormat parse_graph_format(std::string_view name);
std::string_view format_name(GraphFormat f);
/// .json; .txt/.el/.edges/.edgelist; .dot/.gv
std::optional<GraphFormat> format_from_extension(const std::filesystem::path& path);

/// {"order", "edges", and when labelled "q" and "labels"}.
Json graph_to_json(const Graph& g);
/// Edge list: an "# order N" header, then "u v" per line, sorted.
std::string graph_to_edgelist(const Graph& g);
std::string graph_to_dot(const Graph& g);
std::string write_graph(const Graph& g, GraphFormat format);

/// Parsers throw ParseError (with a line number where one applies).
/// Edge lists accept '#' comments and blank lines; an "# order N" comment
/// fixes the order, otherwise ids must cover 0..max contiguously.
Graph read_graph(std::string_view text, GraphFormat format);
Graph read_graph_file(const std::filesystem::path& path, std::optional<GraphFormat> format = std::nullopt);

Json perm_to_json(std::span<const Vertex> images);
Json group_to_json(const AutGroup& group);
Json vertex_set_to_json(const VertexSet& s);
Json fix_report_to_json(const FixReport& report);
Json fixing_graph_to_json(const FixingGraph& fg);
/// Left side as boxes, pair side as ellipses named "u_v".
std::string fixing_graph_to_dot(const FixingGraph& fg);

}  // namespace symforge
