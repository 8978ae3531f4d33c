#include <gtest/gtest.h>

#include <algorithm>

#include "support/generators.hpp"
#include "transit/errors.hpp"
#include "transit/graph.hpp"

using transit::ErrorKind;
using transit::TransitGraph;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const transit::Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvariantViolation;
}

}  // namespace

TEST(Graph, ParallelEdgesMergeLineLabels) {
  TransitGraph g;
  g.add_node("a");
  g.add_node("b");
  g.add_edge("a", "b", "red");
  g.add_edge("b", "a", "blue");
  g.add_edge("a", "b", "red");
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.edge_lines("b", "a"), (std::set<std::string>{"blue", "red"}));
  EXPECT_EQ(g.degree("a"), 1u);
}

TEST(Graph, RejectsSelfLoopsAndUnknownNodes) {
  TransitGraph g;
  g.add_node("a");
  EXPECT_EQ(kind_of([&] { g.add_edge("a", "a", "x"); }), ErrorKind::SelfLoop);
  EXPECT_EQ(kind_of([&] { g.add_edge("a", "zz", "x"); }), ErrorKind::UnknownNode);
  EXPECT_EQ(kind_of([&] { g.edge_lines("a", "zz"); }), ErrorKind::UnknownEdge);
  g.add_node("b");
  EXPECT_EQ(kind_of([&] { g.edge_lines("a", "b"); }), ErrorKind::UnknownEdge);
}

TEST(Graph, EdgesAreSortedWithSmallerEndpointFirst) {
  TransitGraph g;
  for (auto id : {"c", "a", "b"}) g.add_node(id);
  g.add_edge("c", "a", "x");
  g.add_edge("b", "a", "x");
  const auto edges = g.edges();
  ASSERT_EQ(edges.size(), 2u);
  EXPECT_EQ(edges[0].u, "a");
  EXPECT_EQ(edges[0].v, "b");
  EXPECT_EQ(edges[1].u, "a");
  EXPECT_EQ(edges[1].v, "c");
}

TEST(Graph, StationRecordIsKept) {
  TransitGraph g;
  g.add_node(transit::Station{"x", "Ex", "B", 2, {"l"}});
  g.add_node("y");
  ASSERT_NE(g.station("x"), nullptr);
  EXPECT_EQ(g.station("x")->name, "Ex");
  EXPECT_EQ(g.station("y"), nullptr);
}

TEST(Graph, DegreeSumIsTwiceEdgeCount) {
  gen::Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = gen::erdos_renyi(20, 0.2, rng);
    std::size_t sum = 0;
    for (const auto& id : g.node_ids()) sum += g.degree(id);
    EXPECT_EQ(sum, 2 * g.edge_count());
  }
}

TEST(Graph, IndexedViewIsIndependentOfInsertionOrder) {
  TransitGraph a, b;
  for (auto id : {"a", "b", "c", "d"}) a.add_node(id);
  for (auto id : {"d", "c", "b", "a"}) b.add_node(id);
  a.add_edge("a", "b", "x");
  a.add_edge("c", "d", "x");
  a.add_edge("a", "d", "x");
  b.add_edge("d", "a", "x");
  b.add_edge("d", "c", "x");
  b.add_edge("b", "a", "x");
  EXPECT_EQ(a, b);
  const auto ia = a.indexed(), ib = b.indexed();
  ASSERT_EQ(ia.size(), ib.size());
  for (std::size_t i = 0; i < ia.size(); ++i) {
    EXPECT_EQ(ia.id(i), ib.id(i));
    EXPECT_TRUE(std::ranges::equal(ia.neighbors(i), ib.neighbors(i)));
  }
}

TEST(Bfs, DistancesOnPathAndUnreachable) {
  auto g = gen::path(4);
  g.add_node("zz");
  const auto d = transit::bfs_distances(g, gen::node_id(0));
  EXPECT_EQ(d.at(gen::node_id(3)), 3u);
  EXPECT_FALSE(d.at("zz").has_value());
  EXPECT_EQ(kind_of([&] { transit::bfs_distances(g, "nope"); }), ErrorKind::UnknownNode);
}

TEST(Bfs, TriangleInequalityOnRandomGraphs) {
  gen::Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = gen::erdos_renyi(15, 0.25, rng);
    std::map<std::string, std::map<std::string, transit::HopCount>> d;
    for (const auto& id : g.node_ids()) d[id] = transit::bfs_distances(g, id);
    for (const auto& [a, da] : d)
      for (const auto& [b, dab] : da)
        for (const auto& [c, dbc] : d[b])
          if (dab && dbc) {
            ASSERT_TRUE(da.at(c).has_value());
            EXPECT_LE(*da.at(c), *dab + *dbc);
          }
  }
}

TEST(Components, OrderedLargestFirst) {
  TransitGraph g;
  for (auto id : {"a", "b", "c", "d", "e", "f"}) g.add_node(id);
  g.add_edge("e", "f", "x");
  g.add_edge("a", "b", "x");
  g.add_edge("b", "c", "x");
  const auto comps = transit::connected_components(g);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0], (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(comps[1], (std::vector<std::string>{"e", "f"}));
  EXPECT_EQ(comps[2], (std::vector<std::string>{"d"}));
}

TEST(Diameter, CycleAndPath) {
  EXPECT_EQ(transit::diameter(gen::cycle(10)).diameter, 5u);
  EXPECT_EQ(transit::diameter(gen::path(7)).diameter, 6u);
  EXPECT_TRUE(transit::diameter(gen::path(7)).connected);
  EXPECT_EQ(transit::diameter(gen::empty_graph(1)).diameter, 0u);
}

TEST(Diameter, DisconnectedUsesLargestComponentAndListsTheRest) {
  auto g = gen::path(5);
  g.add_node("x1");
  g.add_node("x2");
  g.add_edge("x1", "x2", "l");
  const auto r = transit::diameter(g);
  EXPECT_EQ(r.diameter, 4u);
  EXPECT_FALSE(r.connected);
  EXPECT_EQ(r.component_count, 2u);
  EXPECT_EQ(r.largest_component_size, 5u);
  ASSERT_EQ(r.stranded.size(), 1u);
  EXPECT_EQ(r.stranded[0], (std::vector<std::string>{"x1", "x2"}));
}

TEST(Diameter, EmptyGraphThrows) {
  EXPECT_EQ(kind_of([] { transit::diameter(TransitGraph{}); }), ErrorKind::EmptyGraph);
}
