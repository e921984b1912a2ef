#include <doctest.h>

#include "helpers.hpp"
#include "wgl/catalog.hpp"

using namespace wgl;
using testutil::unit_path;

TEST_CASE("construction validates weights and adjacency") {
  std::vector<std::pair<VertexId, double>> vw{{0, 1.0}, {1, 1.0}};
  CHECK_THROWS_AS(WeightedGraph({{0, 0.0}, {1, 1.0}}, {}), precondition_error);
  CHECK_THROWS_AS(WeightedGraph({{0, -2.0}, {1, 1.0}}, {}), precondition_error);
  CHECK_THROWS_AS(WeightedGraph({{0, 1.0}, {0, 1.0}}, {}), precondition_error);
  CHECK_THROWS_AS(WeightedGraph(vw, {{0, 0, 1.0}}), precondition_error);
  CHECK_THROWS_AS(WeightedGraph(vw, {{0, 1, 1.0}, {1, 0, 1.0}}), precondition_error);
  CHECK_THROWS_AS(WeightedGraph(vw, {{0, 1, 0.0}}), precondition_error);
  CHECK_THROWS_AS(WeightedGraph(vw, {{0, 2, 1.0}}), lookup_error);
  WeightedGraph g(vw, {{0, 1, 2.5}});
  CHECK(g.cond(0, 1) == 2.5);
  CHECK(g.cond(1, 0) == 2.5);
  CHECK_THROWS_AS(g.index(7), lookup_error);
}

TEST_CASE("adjacency is symmetric on random graphs") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    auto g = testutil::random_connected_graph(rng, 2, 25);
    for (VertexId x : g->ids())
      for (VertexId y : g->neighbors(x)) {
        auto back = g->neighbors(y);
        CHECK(std::find(back.begin(), back.end(), x) != back.end());
        CHECK(g->cond(x, y) == g->cond(y, x));
      }
  }
}

TEST_CASE("max degree examples") {
  CHECK(unit_path(5)->max_degree() == 2);
  // star with 7 leaves
  std::vector<std::pair<VertexId, double>> vw{{0, 1.0}};
  std::vector<WeightedGraph::Edge> edges;
  for (int i = 1; i <= 7; ++i) {
    vw.emplace_back(i, 1.0);
    edges.push_back({0, i, 1.0});
  }
  CHECK(WeightedGraph(vw, edges).max_degree() == 7);
  CHECK(instantiate(make_family("remark61"), 100)->max_degree() == 2);
}

TEST_CASE("combinatorial balls") {
  auto p = unit_path(10);
  auto b = combinatorial_ball(*p, 0, 2);
  CHECK(b.members == std::vector<VertexId>{0, 1, 2});
  CHECK(combinatorial_ball(*p, 4, 0).members == std::vector<VertexId>{4});
  CHECK_THROWS_AS(combinatorial_ball(*p, 0, -1), precondition_error);

  // 3x3 grid, vertex r*3+c
  std::vector<std::pair<VertexId, double>> vw;
  std::vector<WeightedGraph::Edge> edges;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      vw.emplace_back(r * 3 + c, 1.0);
      if (c + 1 < 3) edges.push_back({r * 3 + c, r * 3 + c + 1, 1.0});
      if (r + 1 < 3) edges.push_back({r * 3 + c, (r + 1) * 3 + c, 1.0});
    }
  WeightedGraph grid(vw, edges);
  CHECK(combinatorial_ball(grid, 4, 1).members == std::vector<VertexId>{1, 3, 4, 5, 7});

  // nesting
  std::mt19937_64 rng(12);
  for (int t = 0; t < 10; ++t) {
    auto g = testutil::random_connected_graph(rng, 3, 20);
    for (int n = 0; n < 4; ++n) {
      auto inner = combinatorial_ball(*g, g->id(0), n).members;
      auto outer = combinatorial_ball(*g, g->id(0), n + 1).members;
      CHECK(std::includes(outer.begin(), outer.end(), inner.begin(), inner.end()));
    }
  }
}

TEST_CASE("regions: interior, boundary, connectivity") {
  // path on ids 1..10, K = {1..5}: vertex 1 has its only neighbor 2 in K
  std::vector<std::pair<VertexId, double>> vw;
  std::vector<WeightedGraph::Edge> edges;
  for (int i = 1; i <= 10; ++i) vw.emplace_back(i, 1.0);
  for (int i = 1; i < 10; ++i) edges.push_back({i, i + 1, 1.0});
  WeightedGraph host(vw, edges);
  auto r = region_from_vertexset(host, {1, 2, 3, 4, 5});
  CHECK(r.interior == std::vector<VertexId>{1, 2, 3, 4});
  CHECK(r.boundary == std::vector<VertexId>{5});
  CHECK(r.interior_connected);

  // whole graph: no exterior neighbors
  std::set<VertexId> whole(host.ids().begin(), host.ids().end());
  auto rw = region_from_vertexset(host, whole);
  CHECK(rw.boundary.empty());
  CHECK(rw.interior.size() == whole.size());

  // single non-isolated vertex
  auto rs = region_from_vertexset(host, {4});
  CHECK(rs.interior.empty());
  CHECK(rs.boundary == std::vector<VertexId>{4});

  // partition and idempotence on random regions
  std::mt19937_64 rng(13);
  for (int t = 0; t < 20; ++t) {
    auto g = testutil::random_connected_graph(rng, 4, 25);
    std::set<VertexId> K;
    for (VertexId x : g->ids())
      if (std::uniform_real_distribution<>(0, 1)(rng) < 0.5) K.insert(x);
    if (K.empty()) continue;
    auto reg = region_from_vertexset(*g, K);
    CHECK(reg.interior.size() + reg.boundary.size() == K.size());
    std::set<VertexId> merged(reg.interior.begin(), reg.interior.end());
    merged.insert(reg.boundary.begin(), reg.boundary.end());
    CHECK(merged == K);
    auto again = region_from_vertexset(*g, K);
    CHECK(again.interior == reg.interior);
    CHECK(again.boundary == reg.boundary);
  }
}
