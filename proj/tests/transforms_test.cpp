#include <gtest/gtest.h>

#include <map>
#include <random>
#include <tuple>

#include "graphgen/errors.hpp"
#include "graphgen/transforms.hpp"
#include "support/random_graphs.hpp"

namespace graphgen {
namespace {

using Edges = std::vector<std::pair<Vertex, Vertex>>;
using testing::random_graph;
using testing::RandomGraphSpec;

Graph make(int n, const Edges& edges) { return Graph::from_edges(n, edges); }

GraphSum labeled(const Graph& g, const Rational& c = 1) { return GraphSum::of(g, c, KeyMode::labeled); }

Graph with_legs(Graph g, const std::vector<std::pair<Vertex, std::string>>& legs) {
  for (const auto& [v, name] : legs) g.add_leg(v, LegLabel(name));
  return g;
}

const Graph kVertex(1);
const Graph kLoop = make(1, {{0, 0}});
const Graph kK2 = make(2, {{0, 1}});
const Graph kDouble = make(2, {{0, 1}, {0, 1}});
const Graph kPath = make(3, {{0, 1}, {1, 2}});
const Graph kTriangle = make(3, {{0, 1}, {1, 2}, {0, 2}});

TEST(AddLoopTest, Examples) {
  EXPECT_EQ(add_loop(GraphSum::of(kVertex), 0), GraphSum::of(kLoop));
  EXPECT_EQ(add_loop(GraphSum::of(kLoop), 0), GraphSum::of(make(1, {{0, 0}, {0, 0}})));
  EXPECT_EQ(add_loop(labeled(kK2), 1), labeled(make(2, {{0, 1}, {1, 1}})));
  EXPECT_EQ(add_loop(GraphSum::of(kK2), 1).k(), std::optional<int>(1));
}

TEST(EraseTest, Examples) {
  EXPECT_EQ(erase_edge(GraphSum::of(kDouble), 0, 1), GraphSum::of(kK2));
  EXPECT_EQ(erase_edge(GraphSum::of(kK2), 0, 1), GraphSum::of(Graph(2)));
  EXPECT_THROW(erase_loop(GraphSum::of(kK2), 0), PreconditionError);
  EXPECT_THROW(erase_edge(labeled(kPath), 0, 2), PreconditionError);
}

TEST(AddEdgeTest, Examples) {
  EXPECT_EQ(add_edge(GraphSum::of(kK2), 0, 1), GraphSum::of(kDouble));
  EXPECT_TRUE(add_edge_adjacent(labeled(kPath), 0, 2).empty());
  EXPECT_EQ(add_edge_nonadjacent(labeled(kPath), 0, 2), labeled(kTriangle));
  EXPECT_TRUE(add_edge_nonadjacent(GraphSum::of(kK2), 0, 1).empty());
  EXPECT_EQ(add_edge_adjacent(GraphSum::of(kK2), 1, 0), GraphSum::of(kDouble));
  EXPECT_THROW(add_edge(GraphSum::of(kK2), 1, 1), StructuralError);
}

TEST(SplitVertexTest, TwoLegs) {
  const Graph v = with_legs(Graph(1), {{0, "x1"}, {0, "x2"}});
  const GraphSum out = split_vertex(labeled(v, Rational(3, 5)), 0);
  ASSERT_EQ(out.size(), 4u);
  for (const auto& [key, term] : out.terms()) EXPECT_EQ(term.coefficient, Rational(3, 5));
  EXPECT_EQ(out.coefficient_of(with_legs(Graph(2), {{0, "x1"}, {1, "x2"}})), Rational(3, 5));
  EXPECT_EQ(out.coefficient_of(with_legs(Graph(2), {{1, "x1"}, {0, "x2"}})), Rational(3, 5));
  EXPECT_EQ(out.coefficient_of(with_legs(Graph(2), {{1, "x1"}, {1, "x2"}})), Rational(3, 5));
  EXPECT_EQ(out.k(), std::optional<int>(0));
  EXPECT_EQ(split_vertex(labeled(kLoop), 0).k(), std::nullopt);
}

TEST(SplitVertexTest, LoopBecomesConnectingEdge) {
  const GraphSum out = split_vertex(labeled(kLoop), 0);
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out.coefficient_of(make(2, {{0, 0}})), Rational(1));
  EXPECT_EQ(out.coefficient_of(make(2, {{1, 1}})), Rational(1));
  EXPECT_EQ(out.coefficient_of(kK2), Rational(2));
}

TEST(SplitVertexTest, BareVertex) {
  const GraphSum out = split_vertex(GraphSum::of(kVertex), 0);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.coefficient_of(Graph(2)), Rational(1));
}

TEST(SplitVertexTest, ConnectedAndDisconnectedParts) {
  const Graph v = with_legs(Graph(1), {{0, "x1"}, {0, "x2"}});
  EXPECT_EQ(split_disconnected(labeled(v), 0).size(), 4u);
  EXPECT_TRUE(split_connected(labeled(v), 0).empty());

  const GraphSum connected = split_connected(labeled(kTriangle), 0);
  ASSERT_EQ(connected.size(), 2u);
  EXPECT_EQ(connected.coefficient_of(make(4, {{0, 1}, {1, 2}, {2, 3}})), Rational(1));
  EXPECT_EQ(connected.coefficient_of(make(4, {{0, 2}, {1, 2}, {1, 3}})), Rational(1));
  EXPECT_EQ(split_disconnected(labeled(kTriangle), 0).size(), 2u);
}

TEST(SplitMinDegreeTest, Examples) {
  const Graph v = with_legs(Graph(1), {{0, "x1"}, {0, "x2"}});
  const GraphSum out = split_min_degree(labeled(v), 0, 1, 2);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out.coefficient_of(with_legs(Graph(2), {{0, "x1"}, {1, "x2"}})), Rational(1));
  EXPECT_EQ(out.coefficient_of(with_legs(Graph(2), {{1, "x1"}, {0, "x2"}})), Rational(1));
  EXPECT_EQ(split_min_degree(labeled(kTriangle), 1, 2, 2), split_vertex(labeled(kTriangle), 1));
  EXPECT_THROW(split_min_degree(labeled(kTriangle), 1, 2, 1), StructuralError);
  EXPECT_THROW(split_min_degree(labeled(kTriangle), 1, 0, 1), StructuralError);
}

TEST(QMapTest, SingleVertexGivesHalfK2) {
  const GraphSum out = q_map(GraphSum::of(kVertex), 0, 1);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out.coefficient_of(kK2), Rational(1, 2));
  EXPECT_EQ(out.k(), std::optional<int>(0));
}

TEST(QMapTest, SingleLoop) {
  const GraphSum out = q_map(labeled(kLoop), 0, 1);
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out.coefficient_of(make(2, {{0, 1}, {0, 0}})), Rational(1, 2));
  EXPECT_EQ(out.coefficient_of(make(2, {{0, 1}, {1, 1}})), Rational(1, 2));
  EXPECT_EQ(out.coefficient_of(kDouble), Rational(1));
  const GraphSum collapsed = q_map(GraphSum::of(kLoop), 0, 1);
  EXPECT_EQ(collapsed, out.collapsed());
  EXPECT_EQ(collapsed.coefficient_of(make(2, {{0, 1}, {0, 0}})), Rational(1));
}

TEST(QMapTest, HigherRhoAddsParallelEdges) {
  const GraphSum out = q_map(GraphSum::of(kVertex), 0, 3);
  ASSERT_EQ(out.size(), 1u);
  // 1 / (2 * 2!)
  EXPECT_EQ(out.coefficient_of(make(2, {{0, 1}, {0, 1}, {0, 1}})), Rational(1, 4));
  EXPECT_EQ(out.k(), std::optional<int>(2));
}

TEST(QMapTest, ConnectedPartOfTreesIsEmpty) {
  std::mt19937 rng(3);
  RandomGraphSpec spec{5, 4, 1, true, false, false};
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(rng, spec);
    if (cyclomatic_number(g) != 0) continue;
    for (Vertex i = 0; i < g.vertex_count(); ++i) {
      const GraphSum in = GraphSum::of(g);
      EXPECT_TRUE(q_map_connected(in, i, 1).empty());
      EXPECT_EQ(q_map_disconnected(in, i, 1), q_map(in, i, 1));
    }
  }
}

TEST(ContractEdgeTest, Examples) {
  EXPECT_EQ(contract_edge(GraphSum::of(kK2), 0, 1), GraphSum::of(kVertex));
  EXPECT_EQ(contract_edge(labeled(kPath), 0, 1), labeled(kK2));
  EXPECT_EQ(contract_edge(GraphSum::of(kTriangle), 0, 1), GraphSum::of(kDouble));
  EXPECT_EQ(contract_edge(GraphSum::of(kDouble), 0, 1), GraphSum::of(kLoop));
  EXPECT_THROW(contract_edge(labeled(kPath), 0, 2), PreconditionError);
  EXPECT_THROW(contract_edge(GraphSum::of(kK2), 1, 0), StructuralError);
}

TEST(DistributeLegsTest, Examples) {
  const auto x1 = standard_labels(1);
  const auto x12 = standard_labels(2);
  const std::vector<Vertex> both{0, 1};
  const std::vector<Vertex> first{0};
  EXPECT_EQ(distribute_legs(labeled(kK2), x1, both).size(), 2u);
  const GraphSum collapsed = distribute_legs(GraphSum::of(kK2), x1, both);
  ASSERT_EQ(collapsed.size(), 1u);
  EXPECT_EQ(collapsed.mass(), Rational(2));
  const GraphSum stacked = distribute_legs(labeled(kK2), x12, first);
  ASSERT_EQ(stacked.size(), 1u);
  EXPECT_EQ(stacked.coefficient_of(with_legs(kK2, {{0, "x1"}, {0, "x2"}})), Rational(1));
  EXPECT_EQ(distribute_legs(labeled(kK2), x12, both).size(), 4u);
  EXPECT_EQ(distribute_legs(labeled(kK2), {}, both), labeled(kK2));
  EXPECT_THROW(distribute_legs(labeled(with_legs(kK2, {{0, "x1"}})), x1, both), PreconditionError);
}

TEST(AttachLegsTest, Examples) {
  const auto x1 = standard_labels(1);
  const auto x12 = standard_labels(2);
  const std::vector<Vertex> v0{0};
  const std::vector<Vertex> v01{0, 1};
  EXPECT_EQ(attach_legs(GraphSum::of(kVertex), x1, v0), GraphSum::of(with_legs(Graph(1), {{0, "x1"}})));
  EXPECT_EQ(attach_legs(labeled(kK2), x12, v01), labeled(with_legs(kK2, {{0, "x1"}, {1, "x2"}})));
  EXPECT_THROW(attach_legs(labeled(with_legs(kK2, {{0, "y"}})), x1, v0), PreconditionError);
}

// Sums over the same (n, k, s) drawn from random graphs.
std::pair<GraphSum, GraphSum> random_pair(std::mt19937& rng) {
  RandomGraphSpec spec{4, 4, 1, false, true, true};
  std::map<std::tuple<int, int, int>, Graph> seen;
  while (true) {
    const Graph g = random_graph(rng, spec);
    const auto shape = std::make_tuple(g.vertex_count(), cyclomatic_number(g), g.leg_count());
    auto [it, fresh] = seen.emplace(shape, g);
    if (!fresh && !(it->second == g)) {
      GraphSum a = GraphSum::of(it->second, Rational(2, 3), KeyMode::labeled);
      a.add(g, Rational(-1, 5));
      return {a, GraphSum::of(g, Rational(7), KeyMode::labeled)};
    }
  }
}

TEST(TransformPropertyTest, Linearity) {
  std::mt19937 rng(11);
  const Rational c(3, 7);
  for (int trial = 0; trial < 150; ++trial) {
    const auto [a, b] = random_pair(rng);
    const GraphSum combo = sum_add(a, sum_scale(b, c));
    // Outputs may mix cyclomatic numbers; compare them as mixed sums.
    auto lift = [](const GraphSum& s) { return s.with_k(std::nullopt); };
    auto check = [&](auto op) {
      ASSERT_EQ(lift(op(combo)), sum_add(lift(op(a)), sum_scale(lift(op(b)), c)));
    };
    const int n = a.n();
    check([](const GraphSum& s) { return add_loop(s, 0); });
    check([](const GraphSum& s) { return split_vertex(s, 0); });
    check([](const GraphSum& s) { return q_map(s, 0, 1); });
    check([](const GraphSum& s) { return q_map_connected(s, 0, 2); });
    check([](const GraphSum& s) { return q_map_disconnected(s, 0, 1); });
    check([&](const GraphSum& s) { return distribute_legs(s, standard_labels(5, 1), std::vector<Vertex>{0}); });
    if (n >= 2) {
      check([](const GraphSum& s) { return add_edge(s, 0, 1); });
      check([](const GraphSum& s) { return add_edge_adjacent(s, 1, 0); });
      check([](const GraphSum& s) { return add_edge_nonadjacent(s, 1, 0); });
    }
  }
}

TEST(TransformPropertyTest, SplitCountsAndShapes) {
  std::mt19937 rng(12);
  RandomGraphSpec spec{5, 5, 2, true, true, true};
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(rng, spec);
    const Vertex i = std::uniform_int_distribution<int>(0, g.vertex_count() - 1)(rng);
    const GraphSum split = split_vertex(labeled(g), i);
    ASSERT_EQ(split.mass(), Rational(Integer(1) << g.degree(i)));
    for (const auto& [key, term] : split.terms()) {
      ASSERT_EQ(term.graph.vertex_count(), g.vertex_count() + 1);
      ASSERT_EQ(term.graph.edge_count(), g.edge_count());
    }
    for (int rho = 1; rho <= 3; ++rho) {
      const GraphSum q = q_map(GraphSum::of(g), i, rho);
      ASSERT_EQ(q.k(), std::optional<int>(cyclomatic_number(g) + rho - 1));
    }
    ASSERT_EQ(split_connected(labeled(g), i).size() + split_disconnected(labeled(g), i).size(), split.size());
  }
}

TEST(TransformPropertyTest, DegreeFilterEquivalence) {
  std::mt19937 rng(13);
  RandomGraphSpec spec{4, 5, 2, true, false, true};
  int checked = 0;
  for (int trial = 0; trial < 2000 && checked < 300; ++trial) {
    const Graph g = random_graph(rng, spec);
    for (int nu = 1; nu <= 3; ++nu) {
      if (min_degree(g) < nu) continue;
      ++checked;
      for (Vertex i = 0; i < g.vertex_count(); ++i) {
        for (int rho = 1; rho <= nu; ++rho) {
          const GraphSum in = labeled(g);
          const int fresh = g.vertex_count();
          const GraphSum expected = sum_filter(q_map(in, i, rho), [&](const Graph& h) {
            return h.degree(i) >= nu && h.degree(fresh) >= nu;
          });
          ASSERT_EQ(q_map_min_degree(in, i, rho, nu), expected);
        }
      }
    }
  }
  EXPECT_GE(checked, 100);
}

}  // namespace
}  // namespace graphgen
