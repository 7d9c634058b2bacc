#include <gtest/gtest.h>

#include <random>

#include "ecclab/catalog.hpp"
#include "ecclab/eccentric.hpp"
#include "ecclab/io.hpp"
#include "oracles.hpp"

using namespace ecclab;

TEST(GraphDocument, RoundTripsCorpusGraphs) {
  std::mt19937_64 rng(51);
  std::vector<Graph> corpus{path_graph(8), cycle_graph(6), h_graph(2), grid_graph(3, 5),
                            hypercube_graph(4), Graph(3)};
  for (int i = 0; i < 40; ++i) corpus.push_back(oracle::random_connected_graph(rng, 2 + i % 12, 0.2));
  for (const auto& g : corpus) {
    const auto doc = GraphDocument::from_graph(g, "g");
    const auto back = parse_graph_document(dump_graph_document(doc));
    ASSERT_EQ(back.to_graph(), g);
    ASSERT_EQ(back.name, doc.name);
  }
}

TEST(GraphDocument, KeepsLabelsAndMetadata) {
  GraphDocument doc = GraphDocument::from_graph(path_graph(3), "P_3");
  doc.labels = std::vector<std::string>{"a", "b", "c"};
  doc.metadata = {{"seed", 7}};
  const auto back = parse_graph_document(dump_graph_document(doc));
  EXPECT_EQ(back.labels, doc.labels);
  EXPECT_EQ(back.metadata, doc.metadata);
}

TEST(GraphDocument, RejectsMalformedInput) {
  EXPECT_THROW(parse_graph_document("not json"), input_error);
  EXPECT_THROW(parse_graph_document("[1, 2]"), input_error);
  EXPECT_THROW(parse_graph_document(R"({"edges": []})"), input_error);
  EXPECT_THROW(parse_graph_document(R"({"num_vertices": 2, "edges": [[0, 2]]})"), input_error);
  EXPECT_THROW(parse_graph_document(R"({"num_vertices": 2, "edges": [[1, 1]]})"), input_error);
  EXPECT_THROW(parse_graph_document(R"({"num_vertices": 2, "edges": [[0]]})"), input_error);
  EXPECT_THROW(parse_graph_document(R"({"num_vertices": 2, "edges": [], "labels": ["a"]})"),
               input_error);
  EXPECT_THROW(load_graph_document("/nonexistent/graph.json"), input_error);
}

TEST(Dot, BalancedWithOneLinePerEdge) {
  GraphDocument doc = GraphDocument::from_graph(eccentric_graph(path_graph(8)), "E(P_8)");
  const std::string dot = to_dot(doc);
  EXPECT_EQ(dot.rfind("graph \"E(P_8)\" {\n", 0), 0u);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '{'), 1);
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '}'), 1);
  std::size_t edges = 0;
  for (std::size_t pos = dot.find(" -- "); pos != std::string::npos; pos = dot.find(" -- ", pos + 1)) {
    ++edges;
  }
  EXPECT_EQ(edges, doc.edges.size());
  doc.labels = std::vector<std::string>(8, "x\"y");
  EXPECT_NE(to_dot(doc).find("[label=\"x\\\"y\"]"), std::string::npos);
}

TEST(MatrixJson, DecimalStringsRoundTrip) {
  IntMatrix m = eccentricity_matrix(star_graph(3));
  m(0, 1) = BigInt(1) << 100;
  const json j = matrix_to_json(m);
  EXPECT_TRUE(j[0][1].is_string());
  EXPECT_EQ(matrix_from_json(j), m);
  EXPECT_THROW(matrix_from_json(json::parse(R"([["1", "2"], ["3"]])")), input_error);
  EXPECT_THROW(matrix_from_json(json::parse(R"([[1]])")), input_error);
}
