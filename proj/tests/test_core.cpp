#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "ccgt/canonical.hpp"
#include "ccgt/graph.hpp"
#include "ccgt/median.hpp"
#include "corpus.hpp"

using namespace ccgt;
using namespace ccgt::tests;

TEST_CASE("cubegraph format roundtrip") {
  auto g = make_grid(3, 4);
  g.set_basepoint(0);
  std::stringstream s;
  save_cubegraph(g, s);
  auto h = load_cubegraph(s);
  CHECK(h.num_vertices() == g.num_vertices());
  CHECK(h.num_edges() == g.num_edges());
  CHECK(h.basepoint() == g.basepoint());
  for (auto [a, b] : g.edges())
    CHECK(h.adjacent(*h.find_vertex(g.label(a)), *h.find_vertex(g.label(b))));
}

TEST_CASE("cubegraph parse errors carry line numbers") {
  std::stringstream s("cubegraph 1\nv a\ne a missing\n");
  CHECK_THROWS_AS(load_cubegraph(s), ParseError);
  try {
    std::stringstream t("cubegraph 1\nv a\ne a missing\n");
    load_cubegraph(t);
  } catch (const ParseError &e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("every corpus complex is median, agreeing with the triple oracle") {
  for (const auto &[name, g] : median_corpus()) {
    CAPTURE(name);
    REQUIRE(g.num_vertices() <= 200);
    auto r = validate_median(g);
    CHECK(r.is_median);
    if (g.num_vertices() <= 40) CHECK(oracle_is_median(g));
  }
}

TEST_CASE("median vertex equals the geodesic-intersection oracle") {
  auto g = make_grid(4, 4);
  for (Vertex u = 0; u < g.num_vertices(); u += 3)
    for (Vertex v = 1; v < g.num_vertices(); v += 4)
      for (Vertex w = 2; w < g.num_vertices(); w += 5) {
        Vertex m = median(g, u, v, w);
        CHECK(g.distance(u, m) + g.distance(m, v) == g.distance(u, v));
        CHECK(g.distance(v, m) + g.distance(m, w) == g.distance(v, w));
        CHECK(g.distance(u, m) + g.distance(m, w) == g.distance(u, w));
      }
}

TEST_CASE("cycles are rejected with a counterexample triple") {
  for (int n : {3, 5, 6}) {
    auto r = validate_median(make_cycle(n));
    CHECK(!r.is_median);
    CHECK(r.counterexample.has_value());
  }
  // C4 is the square and is median
  CHECK(validate_median(make_cycle(4)).is_median);
}

TEST_CASE("disconnected input throws naming two components") {
  CubeComplex g;
  g.add_vertex("a");
  g.add_vertex("b");
  CHECK_THROWS_AS(validate_median(g), ValidationError);
  CHECK(g.disconnection_witness().has_value());
}

TEST_CASE("flag link condition") {
  auto c3 = make_hypercube(3);
  for (Vertex v = 0; v < c3.num_vertices(); ++v) CHECK(link_is_flag(c3, v));
  // 3 squares around a vertex without the filling cube: corner of a
  // cube with the opposite vertex deleted fails the flag condition
  CubeComplex g;
  for (int i = 0; i < 7; ++i) g.add_vertex("v" + std::to_string(i));
  // vertices of I^3 minus 111; coordinates 000..110
  auto bit = [](int x, int b) { return (x >> b) & 1; };
  for (int x = 0; x < 7; ++x)
    for (int y = x + 1; y < 7; ++y) {
      int d = x ^ y;
      if ((d & (d - 1)) == 0) g.add_edge(x, y);
    }
  (void)bit;
  CHECK(!link_is_flag(g, 0));
}

TEST_CASE("cube detection counts") {
  auto c4 = make_hypercube(4);
  CHECK(detect_cubes(c4, 1).cubes.size() == 32); // edges
  CHECK(detect_cubes(c4, 2).cubes.size() == 24); // squares
  CHECK(detect_cubes(c4, 3).cubes.size() == 8);
  CHECK(detect_cubes(c4, 4).cubes.size() == 1);
  auto grid = make_grid(3, 3);
  CHECK(detect_cubes(grid, 2).cubes.size() == 4);
  CHECK(detect_cubes(grid, 3).cubes.empty());
}

TEST_CASE("product of paths is a grid") {
  CHECK(isomorphic(product(make_path(3), make_path(4)), make_grid(3, 4)));
  CHECK(isomorphic(product(make_path(2), make_path(2)), make_hypercube(2)));
}

TEST_CASE("irreducible factorization recovers product factors") {
  auto f = irreducible_factorization(make_grid(3, 5));
  REQUIRE(f.size() == 2);
  CHECK(((isomorphic(f[0], make_path(3)) && isomorphic(f[1], make_path(5))) ||
         (isomorphic(f[0], make_path(5)) && isomorphic(f[1], make_path(3)))));
  CHECK(irreducible_factorization(random_tree(20, 3)).size() == 1);
  CHECK(irreducible_factorization(make_hypercube(3)).size() == 3);
}

TEST_CASE("convex hull on a grid is the spanned subrectangle") {
  auto g = make_grid(4, 4);
  Vertex a = *g.find_vertex("0,0"), b = *g.find_vertex("2,3");
  auto hull = convex_hull(g, {a, b});
  CHECK(hull.size() == 3 * 4);
}

TEST_CASE("canonical form is label-invariant and distinguishes graphs") {
  auto a = make_grid(2, 3);
  // same graph, built in a different vertex order
  CubeComplex b;
  for (int i = 5; i >= 0; --i) b.add_vertex("x" + std::to_string(i));
  auto m = [&](int r, int c) { return 5 - (r * 3 + c); };
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 3; ++c) {
      if (r) b.add_edge(m(r - 1, c), m(r, c));
      if (c) b.add_edge(m(r, c - 1), m(r, c));
    }
  CHECK(isomorphic(a, b));
  CHECK(!isomorphic(a, make_path(6)));
  CHECK(!isomorphic(make_star(4), make_path(5)));
}
