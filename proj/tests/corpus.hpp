#ifndef CCGT_TESTS_CORPUS_HPP
#define CCGT_TESTS_CORPUS_HPP

// Shared test corpus of finite median complexes and independent
// brute-force oracles. The oracles recompute everything from the raw
// graph so that library results are checked against a second,
// structurally different implementation.

#include <algorithm>
#include <array>
#include <deque>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ccgt/ball.hpp"
#include "ccgt/graph.hpp"
#include "ccgt/halfspace.hpp"
#include "ccgt/median.hpp"
#include "ccgt/wreath.hpp"

namespace ccgt::tests {

inline CubeComplex random_tree(int nvertices, unsigned seed) {
  std::mt19937 rng(seed);
  CubeComplex g;
  g.add_vertex("t0");
  for (int i = 1; i < nvertices; ++i) {
    g.add_vertex("t" + std::to_string(i));
    std::uniform_int_distribution<int> pick(0, i - 1);
    g.add_edge(pick(rng), i);
  }
  return g;
}

/// Grid vertices (x, y) with x + y <= cap: an order ideal of the grid,
/// hence median.
inline CubeComplex staircase(int cap) {
  CubeComplex g;
  std::vector<std::vector<Vertex>> id(cap + 1);
  for (int x = 0; x <= cap; ++x) {
    id[x].resize(cap + 1, -1);
    for (int y = 0; x + y <= cap; ++y) {
      id[x][y] = g.add_vertex("s" + std::to_string(x) + "_" +
                              std::to_string(y));
      if (x > 0) g.add_edge(id[x - 1][y], id[x][y]);
      if (y > 0) g.add_edge(id[x][y - 1], id[x][y]);
    }
  }
  return g;
}

inline CubeComplex line_of_squares(int ncopies) {
  auto sq = make_hypercube(2);
  auto p = find_diametric_pair(sq);
  return build_line_complex(sq, *p, ncopies).complex;
}

struct CorpusEntry {
  std::string name;
  CubeComplex complex;
};

/// >= 20 median complexes, each <= 200 vertices.
inline std::vector<CorpusEntry> median_corpus() {
  std::vector<CorpusEntry> c;
  auto add = [&](std::string name, CubeComplex g) {
    c.push_back({std::move(name), std::move(g)});
  };
  for (int n = 1; n <= 5; ++n)
    add("cube" + std::to_string(n), make_hypercube(n));
  add("grid3x3", make_grid(3, 3));
  add("grid4x6", make_grid(4, 6));
  add("grid2x10", make_grid(2, 10));
  add("path7", make_path(7));
  add("star5", make_star(5));
  add("tree12", random_tree(12, 7));
  add("tree25", random_tree(25, 11));
  add("tree40", random_tree(40, 13));
  add("tree50", random_tree(51, 17)); // 50 edges
  add("stair4", staircase(4));
  add("stair7", staircase(7));
  add("lsq3", line_of_squares(3));
  add("lsq5", line_of_squares(5));
  add("pathXstar", product(make_path(4), make_star(3)));
  add("treeXpath", product(random_tree(8, 19), make_path(3)));
  add("cube2Xpath", product(make_hypercube(2), make_path(5)));
  return c;
}

// ---- independent oracles ----

/// Components of the graph after deleting one square-relation class of
/// edges, found by BFS that never crosses a deleted edge.
inline std::vector<int> components_without_class(const CubeComplex &g,
                                                 const HalfspaceSystem &hs,
                                                 int plane) {
  std::vector<int> comp(g.num_vertices(), -1);
  int next = 0;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    std::deque<Vertex> q{s};
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (comp[w] >= 0) continue;
        if (hs.plane_of_edge(v, w) == plane) continue;
        comp[w] = next;
        q.push_back(w);
      }
    }
    ++next;
  }
  return comp;
}

/// Sizes of the four vertex quadrants of a plane pair, indexed by the
/// library's side tags.
inline std::array<std::array<int, 2>, 2>
quadrant_counts(const CubeComplex &g, const HalfspaceSystem &hs, int p,
                int q) {
  std::array<std::array<int, 2>, 2> n{{{0, 0}, {0, 0}}};
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    int sp = hs.contains({p, 1}, v) ? 1 : 0;
    int sq = hs.contains({q, 1}, v) ? 1 : 0;
    ++n[sp][sq];
  }
  return n;
}

inline bool oracle_transverse(const CubeComplex &g, const HalfspaceSystem &hs,
                              int p, int q) {
  auto n = quadrant_counts(g, hs, p, q);
  return n[0][0] && n[0][1] && n[1][0] && n[1][1];
}

/// Square witness: some 4-cycle uses an edge of each class.
inline bool oracle_square_witness(const CubeComplex &g,
                                  const HalfspaceSystem &hs, int p, int q) {
  for (int e : hs.edges_of_plane(p)) {
    auto [a, b] = g.edges()[e];
    for (Vertex a2 : g.neighbors(a)) {
      if (a2 == b || hs.plane_of_edge(a, a2) != q) continue;
      for (Vertex b2 : g.neighbors(b))
        if (b2 != a && g.adjacent(a2, b2) &&
            hs.plane_of_edge(b, b2) == q &&
            hs.plane_of_edge(a2, b2) == p)
          return true;
    }
  }
  return false;
}

/// Every endpoint of every edge of the class lies in the given side.
inline bool oracle_plane_inside(const CubeComplex &g,
                                const HalfspaceSystem &hs, int plane,
                                HalfspaceRef side) {
  for (int e : hs.edges_of_plane(plane)) {
    auto [a, b] = g.edges()[e];
    if (!hs.contains(side, a) || !hs.contains(side, b)) return false;
  }
  return true;
}

/// Some third plane has p and q in complementary sides (full scan).
inline bool oracle_separated(const CubeComplex &g, const HalfspaceSystem &hs,
                             int p, int q) {
  for (int t = 0; t < hs.count(); ++t) {
    if (t == p || t == q) continue;
    for (int s : {0, 1})
      if (oracle_plane_inside(g, hs, p, {t, s}) &&
          oracle_plane_inside(g, hs, q, {t, 1 - s}))
        return true;
  }
  return false;
}

inline bool oracle_strongly_separated(const CubeComplex &g,
                                      const HalfspaceSystem &hs, int p,
                                      int q) {
  if (!oracle_separated(g, hs, p, q)) return false;
  for (int t = 0; t < hs.count(); ++t)
    if (t != p && t != q && oracle_transverse(g, hs, t, p) &&
        oracle_transverse(g, hs, t, q))
      return false;
  return true;
}

/// Unique-median check straight from the distance matrix.
inline bool oracle_is_median(const CubeComplex &g) {
  int n = g.num_vertices();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u; v < n; ++v)
      for (Vertex w = v; w < n; ++w) {
        int found = 0;
        for (Vertex m = 0; m < n; ++m)
          if (g.distance(u, m) + g.distance(m, v) == g.distance(u, v) &&
              g.distance(v, m) + g.distance(m, w) == g.distance(v, w) &&
              g.distance(u, m) + g.distance(m, w) == g.distance(u, w))
            ++found;
        if (found != 1) return false;
      }
  return true;
}

} // namespace ccgt::tests

#endif
