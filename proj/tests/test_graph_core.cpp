#include <algorithm>

#include "bdom/error.hpp"
#include "bdom/families.hpp"
#include "bdom/graph.hpp"
#include "doctest.h"
#include "support/random_graphs.hpp"

using bdom::Cycle;
using bdom::Error;
using bdom::ErrorCode;
using bdom::Graph;
using bdom::Path;
using bdom::Role;
using bdom::SunletDeg;

TEST_CASE("graph construction validates its invariants") {
  CHECK_THROWS_AS(Graph(0, {}), Error);

  auto invalid_edge_code = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(invalid_edge_code([] { Graph(3, {{0, 0}}); }) == ErrorCode::InvalidEdge);
  CHECK(invalid_edge_code([] { Graph(3, {{0, 5}}); }) == ErrorCode::InvalidEdge);
  CHECK(invalid_edge_code([] { Graph(3, {{0, 1}, {1, 0}}); }) ==
        ErrorCode::InvalidEdge);

  const Graph g(3, {{1, 0}, {1, 2}});
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(1) == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(!g.has_edge(0, 2));
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("adjacency is symmetric and sorted") {
  const Graph g = bdom::generate(SunletDeg{5, 2});
  for (int u = 0; u < g.vertex_count(); ++u) {
    auto nbrs = g.neighbors(u);
    CHECK(std::is_sorted(nbrs.begin(), nbrs.end()));
    for (int v : nbrs) CHECK(g.has_edge(v, u));
  }
}

TEST_CASE("distances on cycles and paths") {
  const Graph c6 = bdom::generate(Cycle{6});
  const auto from_v1 = bdom::distances(c6, 0);
  CHECK(from_v1 == std::vector<int>{0, 1, 2, 3, 2, 1});
  CHECK(from_v1[3] == 3);  // antipodal vertex

  const Graph p5 = bdom::generate(Path{5});
  CHECK(bdom::distances(p5, 0)[4] == 4);
}

TEST_CASE("distance from a base vertex to the opposite leaf of sunlet-deg") {
  // S_6^3: base vertex 1 to the leaf of the branch rooted opposite.
  const Graph g = bdom::generate(SunletDeg{6, 3});
  const auto dist = bdom::distances(g, 0);
  const int opposite_leaf = 6 + 3 * 3 + 2;  // branch of base 4, outermost
  CHECK(dist[opposite_leaf] == 6);          // floor(6/2) + 3
}

TEST_CASE("distances rejects bad sources and disconnected graphs") {
  const Graph c6 = bdom::generate(Cycle{6});
  CHECK_THROWS_AS(bdom::distances(c6, -1), Error);
  CHECK_THROWS_AS(bdom::distances(c6, 6), Error);

  const Graph split(4, {{0, 1}, {2, 3}});
  try {
    bdom::distances(split, 0);
    FAIL("expected UnreachableVertex");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnreachableVertex);
    // first unreached vertex, 1-based
    CHECK(std::string(e.what()).find("vertex 3") != std::string::npos);
  }
  CHECK_THROWS_AS(bdom::metrics(split), Error);
}

TEST_CASE("metrics on the named families") {
  const auto c6 = bdom::metrics(bdom::generate(Cycle{6}));
  CHECK(c6.radius == 3);
  CHECK(c6.diameter == 3);
  CHECK(c6.center == std::vector<int>{0, 1, 2, 3, 4, 5});

  const auto p9 = bdom::metrics(bdom::generate(Path{9}));
  CHECK(p9.radius == 4);
  CHECK(p9.diameter == 8);
  CHECK(p9.center == std::vector<int>{4});  // v5

  const bdom::Graph s63 = bdom::generate(SunletDeg{6, 3});
  const auto profile = bdom::metrics(s63);
  CHECK(profile.radius == 6);
  CHECK(profile.center == std::vector<int>{0, 1, 2, 3, 4, 5});
  for (int v : profile.center) CHECK(s63.role(v) == Role::Base);
}

TEST_CASE("single vertex graph has radius 0") {
  const auto p1 = bdom::metrics(bdom::generate(Path{1}));
  CHECK(p1.radius == 0);
  CHECK(p1.diameter == 0);
  CHECK(p1.center == std::vector<int>{0});
}

TEST_CASE("sunlet-deg radius matches floor(m/2) + n across the grid") {
  for (int m = 3; m <= 8; ++m) {
    for (int n = 1; n <= 4; ++n) {
      const bdom::Graph g = bdom::generate(SunletDeg{m, n});
      const auto profile = bdom::metrics(g);
      CHECK(profile.radius == m / 2 + n);
      for (int v : profile.center) CHECK(g.role(v) == Role::Base);
    }
  }
}

TEST_CASE("distance symmetry and triangle inequality on random graphs") {
  for (const auto& g : testsupport::seeded_random_graphs(12)) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> dist;
    dist.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) dist.push_back(bdom::distances(g, v));
    for (int u = 0; u < n; ++u) {
      CHECK(dist[u][u] == 0);
      for (int v = 0; v < n; ++v) {
        CHECK(dist[u][v] == dist[v][u]);
        for (int w = 0; w < n; ++w) {
          CHECK(dist[u][w] <= dist[u][v] + dist[v][w]);
        }
      }
    }
    const auto profile = bdom::metrics(g);
    CHECK(profile.radius <= profile.diameter);
    CHECK(profile.diameter <= 2 * profile.radius);
    CHECK(!profile.center.empty());
  }
}
