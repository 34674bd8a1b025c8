#include <gtest/gtest.h>

#include <regex>
#include <set>

#include "latiso/io.hpp"
#include "latiso/wangwang.hpp"

using namespace latiso;

TEST(Io, SetJsonRoundTrip) {
  EXPECT_EQ(set_to_json(ww(1)), R"({"vertices":[[0,0]]})");
  const VertexSet a = parse_set_json(R"({"vertices":[[2,1],[0,0],[-1,1]]})");
  EXPECT_EQ(a, (VertexSet{{0, 0}, {-1, 1}, {2, 1}}));
  EXPECT_EQ(set_to_json(a), R"({"vertices":[[0,0],[-1,1],[2,1]]})");
  EXPECT_EQ(parse_set_json(set_to_json(ww(40))), ww(40));
}

TEST(Io, SetJsonErrors) {
  for (const char* bad : {"{", "[]", R"({"vertices":[[0,0],[0,0]]})", R"({"vertices":[[0]]})",
                          R"({"vertices":[[0.5,1]]})", R"({"points":[]})"}) {
    try {
      parse_set_json(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ParseError) << bad;
    }
  }
}

TEST(Io, BoxSpecs) {
  EXPECT_EQ(parse_box_spec("B:4,4"), standard_box(4, 4));
  EXPECT_EQ(parse_box_spec("Bhat:2,2"), standard_box_hat(2, 2));
  EXPECT_EQ(parse_box_spec("0,4,0,9"), standard_box(4, 9));
  EXPECT_THROW(parse_box_spec("0,0,1,1"), Error);
  EXPECT_THROW(parse_box_spec("C:1,2"), Error);
  EXPECT_THROW(parse_box_spec("Bhat:1,2"), Error);
}

TEST(Io, DotAndJsonDescribeTheSameGraph) {
  const MinGraph g = build_graph(12);
  const std::string dot = graph_to_dot(g);
  const Json j = Json::parse(graph_to_json(g));
  EXPECT_EQ(j["n_max"], 12);

  std::set<std::string> json_nodes, dot_nodes;
  std::multiset<std::pair<std::string, std::string>> json_edges, dot_edges;
  for (const auto& n : j["nodes"]) json_nodes.insert(n["id"].get<std::string>());
  for (const auto& e : j["edges"]) json_edges.insert({e[0].get<std::string>(), e[1].get<std::string>()});

  const std::regex node_re(R"re("([0-9a-f]{16})" \[label="g(\d+):([0-9a-f]{16})")re");
  const std::regex edge_re(R"re("([0-9a-f]{16})" -- "([0-9a-f]{16})")re");
  for (auto it = std::sregex_iterator(dot.begin(), dot.end(), node_re); it != std::sregex_iterator(); ++it) {
    EXPECT_EQ((*it)[1], (*it)[3]);
    dot_nodes.insert((*it)[1]);
  }
  for (auto it = std::sregex_iterator(dot.begin(), dot.end(), edge_re); it != std::sregex_iterator(); ++it) {
    dot_edges.insert({(*it)[1], (*it)[2]});
  }
  EXPECT_EQ(json_nodes.size(), g.nodes.size());
  EXPECT_EQ(json_nodes, dot_nodes);
  EXPECT_EQ(json_edges, dot_edges);
  EXPECT_EQ(graph_to_json(g), graph_to_json(build_graph(12)));
}

TEST(Io, AsciiRender) {
  EXPECT_EQ(render_ascii(ww(5)), ".#.\n###\n.#.\n");
  EXPECT_EQ(render_ascii(ww(4), true), ".#.\n###\n.o.\n");
  EXPECT_THROW(render_ascii(VertexSet{}), Error);
}

TEST(Io, SvgRender) {
  const std::string svg = render_svg(ww(4), true);
  auto count = [&](const std::string& needle) {
    std::size_t k = 0;
    for (auto pos = svg.find(needle); pos != std::string::npos; pos = svg.find(needle, pos + 1)) ++k;
    return k;
  };
  EXPECT_EQ(count("<rect"), 5u);
  EXPECT_EQ(count("fill=\"black\""), 4u);
  EXPECT_EQ(count("fill=\"white\""), 1u);
  // The hole (0,-1) is the lowest cell, so it is drawn at the bottom row.
  EXPECT_NE(svg.find("<rect x=\"20\" y=\"40\" width=\"20\" height=\"20\" fill=\"white\""), std::string::npos);
}
