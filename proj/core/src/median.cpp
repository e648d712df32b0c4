#include "ccgt/median.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "ccgt/bitset.hpp"
#include "ccgt/halfspace.hpp"

namespace ccgt {

MedianReport validate_median(const CubeComplex &g) {
  if (auto witness = g.disconnection_witness())
    throw ValidationError("graph is disconnected: no path between '" +
                          g.label(witness->first) + "' and '" +
                          g.label(witness->second) + "'");
  const int n = g.num_vertices();
  const auto &d = g.distance_matrix();
  // interval bitsets I(u,v); medians of (u,v,w) = I(u,v)∩I(v,w)∩I(u,w)
  std::vector<std::vector<DynBitset>> iv(n);
  for (int u = 0; u < n; ++u) {
    iv[u].resize(n);
    for (int v = u; v < n; ++v) {
      DynBitset bits(n);
      for (int m = 0; m < n; ++m)
        if (d[u][m] + d[m][v] == d[u][v])
          bits.set(m);
      iv[u][v] = bits;
    }
  }
  auto interval = [&](int a, int b) -> const DynBitset & {
    return a <= b ? iv[a][b] : iv[b][a];
  };
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v)
      for (int w = v; w < n; ++w) {
        const DynBitset &ab = interval(u, v);
        const DynBitset &bc = interval(v, w);
        const DynBitset &ac = interval(u, w);
        int count = 0;
        for (int m = 0; m < n && count < 2; ++m)
          if (ab.test(m) && bc.test(m) && ac.test(m))
            ++count;
        if (count != 1)
          return {false, std::array<Vertex, 3>{u, v, w}};
      }
  return {true, std::nullopt};
}

Vertex median(const CubeComplex &g, Vertex u, Vertex v, Vertex w) {
  const auto &d = g.distance_matrix();
  Vertex found = -1;
  for (Vertex m = 0; m < g.num_vertices(); ++m)
    if (d[u][m] + d[m][v] == d[u][v] && d[v][m] + d[m][w] == d[v][w] &&
        d[u][m] + d[m][w] == d[u][w]) {
      if (found >= 0)
        throw ValidationError("triple has multiple medians");
      found = m;
    }
  if (found < 0)
    throw ValidationError("triple has no median");
  return found;
}

namespace {

bool spans_square(const CubeComplex &g, Vertex v, Vertex a, Vertex b) {
  if (g.adjacent(a, b))
    return false;
  for (Vertex z : g.neighbors(a))
    if (z != v && g.adjacent(b, z) && !g.adjacent(v, z))
      return true;
  return false;
}

/// Completes the corner at v with direction neighbors `dirs` to a full
/// hypercube, backtracking over ambiguous diagonal choices. On success
/// fills 2^k vertices indexed by direction subset.
bool complete_cube(const CubeComplex &g, Vertex v,
                   const std::vector<Vertex> &dirs,
                   std::vector<Vertex> &cube) {
  const int k = static_cast<int>(dirs.size());
  const int size = 1 << k;
  cube.assign(size, -1);
  cube[0] = v;
  for (int i = 0; i < k; ++i)
    cube[1 << i] = dirs[i];
  std::vector<int> order;
  for (int m = 0; m < size; ++m)
    if (__builtin_popcount(m) >= 2)
      order.push_back(m);
  std::sort(order.begin(), order.end(), [](int a, int b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  auto dist0 = g.bfs_distances(v);

  std::function<bool(size_t)> rec = [&](size_t idx) -> bool {
    if (idx == order.size()) {
      // induced hypercube check
      for (int m1 = 0; m1 < size; ++m1)
        for (int m2 = m1 + 1; m2 < size; ++m2) {
          bool want = __builtin_popcount(m1 ^ m2) == 1;
          if (g.adjacent(cube[m1], cube[m2]) != want)
            return false;
          if (cube[m1] == cube[m2])
            return false;
        }
      return true;
    }
    int m = order[idx];
    int i = __builtin_ctz(m);
    Vertex below = cube[m ^ (1 << i)];
    for (Vertex z : g.neighbors(below)) {
      if (dist0[z] != __builtin_popcount(m))
        continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j)
        if (m >> j & 1)
          ok = g.adjacent(cube[m ^ (1 << j)], z);
      if (!ok)
        continue;
      cube[m] = z;
      if (rec(idx + 1))
        return true;
      cube[m] = -1;
    }
    return false;
  };
  return rec(0);
}

} // namespace

bool link_is_flag(const CubeComplex &g, Vertex v) {
  const auto &nb = g.neighbors(v);
  const int deg = static_cast<int>(nb.size());
  std::vector<std::vector<char>> rel(deg, std::vector<char>(deg, 0));
  for (int i = 0; i < deg; ++i)
    for (int j = i + 1; j < deg; ++j)
      rel[i][j] = rel[j][i] = spans_square(g, v, nb[i], nb[j]);
  // every clique of the square relation must span a cube at v
  std::vector<int> clique;
  std::function<bool(int)> rec = [&](int from) -> bool {
    if (clique.size() >= 3) {
      std::vector<Vertex> dirs;
      for (int i : clique)
        dirs.push_back(nb[i]);
      std::vector<Vertex> cube;
      if (!complete_cube(g, v, dirs, cube))
        return false;
    }
    for (int i = from; i < deg; ++i) {
      bool ok = true;
      for (int j : clique)
        if (!rel[j][i]) {
          ok = false;
          break;
        }
      if (!ok)
        continue;
      clique.push_back(i);
      if (!rec(i + 1))
        return false;
      clique.pop_back();
    }
    return true;
  };
  return rec(0);
}

CubeList detect_cubes(const CubeComplex &g, int k) {
  CubeList out;
  if (k > g.dimension_bound()) {
    out.warning = "requested dimension " + std::to_string(k) +
                  " exceeds bound " + std::to_string(g.dimension_bound());
    return out;
  }
  if (k == 0) {
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      out.cubes.push_back({0, {v}, {}});
    return out;
  }
  if (k == 1) {
    for (auto [a, b] : g.edges())
      out.cubes.push_back({1, {std::min(a, b), std::max(a, b)}, {{a, b}}});
    return out;
  }
  std::set<std::vector<Vertex>> seen;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto &nb = g.neighbors(v);
    if (static_cast<int>(nb.size()) < k)
      continue;
    std::vector<int> pick;
    std::function<void(int)> choose = [&](int from) {
      if (static_cast<int>(pick.size()) == k) {
        std::vector<Vertex> dirs;
        for (int i : pick)
          dirs.push_back(nb[i]);
        std::vector<Vertex> cube;
        if (complete_cube(g, v, dirs, cube)) {
          std::vector<Vertex> sorted = cube;
          std::sort(sorted.begin(), sorted.end());
          if (seen.insert(sorted).second) {
            Cube c;
            c.dim = k;
            c.vertices = sorted;
            for (Vertex d : dirs)
              c.directions.push_back({v, d});
            out.cubes.push_back(std::move(c));
          }
        }
        return;
      }
      for (int i = from; i < static_cast<int>(nb.size()); ++i) {
        bool ok = true;
        for (int j : pick)
          if (!spans_square(g, v, nb[j], nb[i])) {
            ok = false;
            break;
          }
        if (ok) {
          pick.push_back(i);
          choose(i + 1);
          pick.pop_back();
        }
      }
    };
    choose(0);
  }
  return out;
}

CubeComplex product(const CubeComplex &a, const CubeComplex &b) {
  CubeComplex g;
  const int nb = b.num_vertices();
  for (Vertex x = 0; x < a.num_vertices(); ++x)
    for (Vertex y = 0; y < nb; ++y)
      g.add_vertex(a.label(x) + "|" + b.label(y));
  auto at = [nb](Vertex x, Vertex y) { return x * nb + y; };
  for (Vertex x = 0; x < a.num_vertices(); ++x)
    for (auto [y1, y2] : b.edges())
      g.add_edge(at(x, y1), at(x, y2));
  for (auto [x1, x2] : a.edges())
    for (Vertex y = 0; y < nb; ++y)
      g.add_edge(at(x1, y), at(x2, y));
  g.set_dimension_bound(a.dimension_bound() + b.dimension_bound());
  return g;
}

std::vector<CubeComplex> irreducible_factorization(const CubeComplex &g) {
  HalfspaceSystem hs(g);
  const int np = hs.count();
  // finest partition where planes in different classes are transverse:
  // glue every non-transverse pair
  std::vector<int> parent(np);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int p = 0; p < np; ++p)
    for (int q = p + 1; q < np; ++q)
      if (!hs.transverse(p, q))
        parent[find(p)] = find(q);
  std::map<int, std::vector<int>> classes;
  for (int p = 0; p < np; ++p)
    classes[find(p)].push_back(p);

  std::vector<CubeComplex> factors;
  for (const auto &[root, planes] : classes) {
    std::vector<char> keep(np, 0);
    for (int p : planes)
      keep[p] = 1;
    // contract all edges whose plane is outside the class
    std::vector<int> comp(g.num_vertices(), -1);
    int ncomp = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (comp[v] >= 0)
        continue;
      std::vector<Vertex> stack{v};
      comp[v] = ncomp;
      while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : g.neighbors(x)) {
          if (comp[y] >= 0 || keep[hs.plane_of_edge(x, y)])
            continue;
          comp[y] = ncomp;
          stack.push_back(y);
        }
      }
      ++ncomp;
    }
    CubeComplex f;
    for (int c = 0; c < ncomp; ++c)
      f.add_vertex("q" + std::to_string(c));
    std::set<std::pair<int, int>> fedges;
    for (auto [a, b] : g.edges())
      if (keep[hs.plane_of_edge(a, b)]) {
        int ca = comp[a], cb = comp[b];
        if (ca > cb)
          std::swap(ca, cb);
        if (fedges.insert({ca, cb}).second)
          f.add_edge(ca, cb);
      }
    factors.push_back(std::move(f));
  }
  return factors;
}

std::vector<Vertex> convex_hull(const CubeComplex &g,
                                std::vector<Vertex> seed) {
  std::set<Vertex> hull(seed.begin(), seed.end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Vertex> cur(hull.begin(), hull.end());
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j)
        for (size_t k = j + 1; k < cur.size(); ++k) {
          Vertex m = median(g, cur[i], cur[j], cur[k]);
          if (hull.insert(m).second)
            grew = true;
        }
    // intervals between hull points also belong to the hull
    const auto &d = g.distance_matrix();
    std::vector<Vertex> pts(hull.begin(), hull.end());
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i + 1; j < pts.size(); ++j)
        for (Vertex m = 0; m < g.num_vertices(); ++m)
          if (d[pts[i]][m] + d[m][pts[j]] == d[pts[i]][pts[j]])
            if (hull.insert(m).second)
              grew = true;
  }
  return {hull.begin(), hull.end()};
}

} // namespace ccgt
