#include <gtest/gtest.h>

#include <random>

#include "symforge/constructions.hpp"
#include "symforge/io.hpp"
#include "symforge/vecspace.hpp"

namespace symforge {
namespace {

TEST(GraphTest, NamedGraphs) {
  EXPECT_EQ(complete_graph(4).edge_count(), 6U);
  EXPECT_EQ(cycle_graph(5).edge_count(), 5U);
  EXPECT_EQ(path_graph(4).edge_count(), 3U);
  EXPECT_EQ(star_graph(3).degree(0), 3U);
  Graph t = asymmetric_tree();
  EXPECT_EQ(t.order(), 7U);
  EXPECT_EQ(t.edge_count(), 6U);
  EXPECT_TRUE(t.is_connected());
}

TEST(GraphTest, RejectsSelfLoopsAndRange) {
  EXPECT_THROW(Graph::from_edges(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
}

TEST(GraphTest, EdgesSortedAndDeduplicated) {
  Graph g = Graph::from_edges(4, {{3, 2}, {1, 0}, {0, 1}, {2, 0}});
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {2, 3}}));
}

TEST(GraphTest, Components) {
  Graph g = build_family_graph(3);
  EXPECT_FALSE(g.is_connected());
  EXPECT_EQ(g.components().size(), 2U);
}

TEST(IoTest, EdgeListWithCommentsAndBlanks) {
  Graph g = read_graph("# a 4-cycle\n\n0 1\n1 2  # trailing\n2 3\n3 0\n", GraphFormat::edgelist);
  EXPECT_TRUE(g.same_structure(cycle_graph(4)));
}

TEST(IoTest, EdgeListErrorsCarryLineNumbers) {
  try {
    read_graph("0 1\n1 2\n2 -3\n", GraphFormat::edgelist);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3U);
  }
  EXPECT_THROW(read_graph("0 1\n2 3 4\n", GraphFormat::edgelist), ParseError);
  EXPECT_THROW(read_graph("0 1\n1 1\n", GraphFormat::edgelist), ParseError);
  // ids 0 and 2 without 1: not contiguous
  EXPECT_THROW(read_graph("0 2\n", GraphFormat::edgelist), ParseError);
}

TEST(IoTest, OrderHeaderKeepsIsolatedVertices) {
  Graph g = Graph::from_edges(5, {{0, 1}});
  Graph back = read_graph(graph_to_edgelist(g), GraphFormat::edgelist);
  EXPECT_EQ(back.order(), 5U);
  EXPECT_TRUE(back.same_structure(g));
}

TEST(IoTest, JsonRejectsUnknownKeysAndBadEdges) {
  EXPECT_THROW(read_graph(R"({"order": 3, "edges": [[0, 1]], "colour": 1})", GraphFormat::json), ParseError);
  EXPECT_THROW(read_graph(R"({"order": 3, "edges": [[0, 5]]})", GraphFormat::json), ParseError);
  EXPECT_THROW(read_graph(R"({"order": 3, "edges": [[0, 1]])", GraphFormat::json), ParseError);
  EXPECT_THROW(read_graph(R"({"order": 2, "edges": [], "labels": ["01", "10"]})", GraphFormat::json), ParseError);
}

TEST(IoTest, VertexCapOnInput) {
  EXPECT_THROW(read_graph(R"({"order": 1000, "edges": []})", GraphFormat::json), ResourceError);
}

TEST(IoTest, DotIsStableSorted) {
  Graph g = Graph::from_edges(3, {{2, 1}, {1, 0}});
  std::string dot = graph_to_dot(g);
  EXPECT_LT(dot.find("0 -- 1;"), dot.find("1 -- 2;"));
  EXPECT_EQ(dot, graph_to_dot(read_graph(dot, GraphFormat::dot)));
}

TEST(IoTest, FormatDetection) {
  EXPECT_EQ(format_from_extension("a.json"), GraphFormat::json);
  EXPECT_EQ(format_from_extension("a.txt"), GraphFormat::edgelist);
  EXPECT_EQ(format_from_extension("a.gv"), GraphFormat::dot);
  EXPECT_FALSE(format_from_extension("a.bin").has_value());
  EXPECT_THROW(parse_graph_format("xml"), std::invalid_argument);
}

Graph random_graph(std::mt19937& rng, std::size_t n, double p) {
  std::bernoulli_distribution edge(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

// parse(serialize(G)) == G for every format, and serialization is a fixed point.
TEST(IoTest, RoundTripProperty) {
  std::mt19937 rng(7);
  std::vector<Graph> graphs{build_nzc_graph(Space(3, 2)), build_nzc_graph(Space(2, 3)), build_family_graph(3),
                            asymmetric_tree(), Graph(1)};
  for (int i = 0; i < 40; ++i) graphs.push_back(random_graph(rng, 1 + i % 12, 0.3));
  for (const Graph& g : graphs)
    for (GraphFormat f : {GraphFormat::json, GraphFormat::edgelist, GraphFormat::dot}) {
      std::string text = write_graph(g, f);
      Graph back = read_graph(text, f);
      EXPECT_TRUE(back.same_structure(g)) << format_name(f) << "\n" << text;
      EXPECT_EQ(write_graph(back, f), text);
    }
}

TEST(IoTest, JsonKeepsLabels) {
  Graph g = build_nzc_graph(Space(2, 3));
  Graph back = read_graph(write_graph(g, GraphFormat::json), GraphFormat::json);
  ASSERT_TRUE(back.has_labels());
  for (Vertex v = 0; v < g.order(); ++v) EXPECT_EQ(back.label(v)->to_string(), g.label(v)->to_string());
}

TEST(IoTest, WideFieldLabelsAreDotSeparated) {
  Space s(2, 11);
  Graph g = Graph::from_edges(2, {{0, 1}});
  g.set_labels({Vect::parse(s, "1.10"), Vect::parse(s, "3.0")});
  EXPECT_EQ(g.label(0)->to_string(), "1.10");
  for (GraphFormat f : {GraphFormat::json, GraphFormat::dot}) {
    Graph back = read_graph(write_graph(g, f), f);
    ASSERT_TRUE(back.has_labels());
    EXPECT_EQ(back.label(0)->coeffs(), (std::vector<int>{1, 10}));
    EXPECT_EQ(back.label(1)->to_string(), "3.0");
  }
}

}  // namespace
}  // namespace symforge
