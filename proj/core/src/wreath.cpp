#include "ccgt/wreath.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "ccgt/halfspace.hpp"
#include "ccgt/median.hpp"

namespace ccgt {

std::optional<DiametricPair> find_diametric_pair(const CubeComplex &X) {
  HalfspaceSystem hs(X);
  const int target = hs.count();
  for (Vertex v = 0; v < X.num_vertices(); ++v) {
    std::vector<int> dist(X.num_vertices(), -1), parent(X.num_vertices(), -1);
    std::deque<Vertex> q{v};
    dist[v] = 0;
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop_front();
      for (Vertex w : X.neighbors(u))
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push_back(w);
        }
    }
    for (Vertex u = 0; u < X.num_vertices(); ++u)
      if (dist[u] == target) {
        DiametricPair p;
        p.v = v;
        p.vstar = u;
        for (Vertex w = u; w != -1; w = parent[w])
          p.geodesic.push_back(w);
        std::reverse(p.geodesic.begin(), p.geodesic.end());
        return p;
      }
  }
  return std::nullopt;
}

Vertex LineWindow::vertex_of(int i, Vertex x) const {
  if (x == v) {
    --i;
    x = vstar;
  }
  auto it = index_.find({i, x});
  return it == index_.end() ? -1 : it->second;
}

std::pair<int, Vertex> LineWindow::coords(Vertex w) const {
  return coords_[w];
}

LineWindow build_line_complex(const CubeComplex &X, const DiametricPair &p,
                              int ncopies) {
  {
    HalfspaceSystem hs(X);
    auto dist = X.bfs_distances(p.v);
    if (p.v == p.vstar || dist[p.vstar] != hs.count())
      throw ValidationError("pair is not diametric: distance differs from "
                            "hyperplane count");
  }
  LineWindow out;
  out.base = &X;
  out.v = p.v;
  out.vstar = p.vstar;
  out.lo = -(ncopies / 2);
  out.hi = out.lo + ncopies - 1;
  for (int i = out.lo; i <= out.hi; ++i)
    for (Vertex x = 0; x < X.num_vertices(); ++x) {
      if (x == p.v && i > out.lo)
        continue; // copy i's v is copy (i-1)'s v*
      // the window's leftmost v has no left neighbor; file it under the
      // phantom copy lo-1 so canonical coordinates stay x != v
      std::pair<int, Vertex> key =
          (x == p.v) ? std::pair<int, Vertex>{i - 1, p.vstar}
                     : std::pair<int, Vertex>{i, x};
      Vertex w = out.complex.add_vertex("c" + std::to_string(i) + "|" +
                                        X.label(x));
      out.coords_.push_back(key);
      out.index_[key] = w;
    }
  for (int i = out.lo; i <= out.hi; ++i)
    for (auto [a, b] : X.edges())
      out.complex.add_edge(out.vertex_of(i, a), out.vertex_of(i, b));
  return out;
}

std::vector<Perm>
all_automorphisms(const CubeComplex &X,
                  std::optional<std::pair<Vertex, Vertex>> fix) {
  const int n = X.num_vertices();
  std::vector<int> degree(n);
  for (Vertex u = 0; u < n; ++u)
    degree[u] = static_cast<int>(X.neighbors(u).size());

  // breadth-first vertex order keeps each new vertex attached to an
  // assigned one, so adjacency pruning bites early
  std::vector<Vertex> order;
  std::vector<bool> seen(n, false);
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s])
      continue;
    std::deque<Vertex> q{s};
    seen[s] = true;
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop_front();
      order.push_back(u);
      for (Vertex w : X.neighbors(u))
        if (!seen[w]) {
          seen[w] = true;
          q.push_back(w);
        }
    }
  }

  std::vector<Perm> out;
  std::vector<int> img(n, -1);
  std::vector<bool> used(n, false);
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == order.size()) {
      out.push_back(img);
      return;
    }
    Vertex u = order[k];
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || degree[w] != degree[u])
        continue;
      if (fix) {
        if ((u == fix->first) != (w == fix->first) ||
            (u == fix->second) != (w == fix->second))
          continue;
      }
      bool ok = true;
      for (size_t j = 0; j < k && ok; ++j)
        if (X.adjacent(u, order[j]) != X.adjacent(w, img[order[j]]))
          ok = false;
      if (!ok)
        continue;
      img[u] = w;
      used[w] = true;
      rec(k + 1);
      img[u] = -1;
      used[w] = false;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

FiniteGroupRealization aut_fixing_pair(const CubeComplex &X,
                                       const DiametricPair &p) {
  auto autos = all_automorphisms(X, std::pair<Vertex, Vertex>{p.v, p.vstar});
  std::vector<Perm> gens;
  std::vector<std::string> names;
  Perm id = perm_identity(X.num_vertices());
  for (const Perm &a : autos)
    if (a != id) {
      names.push_back("a" + std::to_string(gens.size()));
      gens.push_back(a);
    }
  return FiniteGroupRealization(X.num_vertices(), gens, names);
}

WreathGroup::WreathGroup(const CubeComplex &X, DiametricPair p)
    : x_(&X), pair_(std::move(p)), comp_(aut_fixing_pair(X, pair_)) {}

WreathElement WreathGroup::component(int copy, int elem) const {
  WreathElement e;
  if (elem != comp_.identity())
    e.comps[copy] = elem;
  return e;
}

WreathElement WreathGroup::multiply(const WreathElement &a,
                                    const WreathElement &b) const {
  WreathElement out;
  out.shift = a.shift + b.shift;
  std::set<int> idx;
  for (auto &[k, e] : a.comps)
    idx.insert(k);
  for (auto &[k, e] : b.comps)
    idx.insert(k + a.shift);
  for (int j : idx) {
    auto ia = a.comps.find(j);
    auto ib = b.comps.find(j - a.shift);
    int ea = ia == a.comps.end() ? comp_.identity() : ia->second;
    int eb = ib == b.comps.end() ? comp_.identity() : ib->second;
    int c = comp_.mul(ea, eb);
    if (c != comp_.identity())
      out.comps[j] = c;
  }
  return out;
}

WreathElement WreathGroup::inverse(const WreathElement &a) const {
  WreathElement out;
  out.shift = -a.shift;
  for (auto &[k, e] : a.comps)
    out.comps[k - a.shift] = comp_.inv(e);
  return out;
}

WreathElement WreathGroup::power(const WreathElement &a, int k) const {
  WreathElement base = k < 0 ? inverse(a) : a;
  WreathElement out;
  for (int i = 0; i < std::abs(k); ++i)
    out = multiply(out, base);
  return out;
}

WreathElement WreathGroup::commutator(const WreathElement &a,
                                      const WreathElement &b) const {
  return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
}

WreathPoint WreathGroup::act(const WreathElement &e, WreathPoint p) const {
  int i = p.copy + e.shift;
  Vertex x = p.x;
  auto it = e.comps.find(i);
  if (it != e.comps.end())
    x = comp_.element(it->second)[x];
  if (x == pair_.v) { // renormalize onto the canonical chart
    --i;
    x = pair_.vstar;
  }
  return {i, x};
}

WreathLawReport verify_wreath_law(const CubeComplex &X,
                                  const DiametricPair &p, int trials,
                                  int window, std::uint64_t seed) {
  WreathLawReport rep;
  rep.aut_order = static_cast<int>(all_automorphisms(X).size());
  WreathGroup g(X, p);
  const FiniteGroupRealization &c = g.component_group();
  rep.fixing_order = c.order();
  rep.copy_preserving = true;
  rep.law_holds = true;
  rep.observed_exponent = 1;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_shift(-2, 2);
  std::uniform_int_distribution<int> pick_elem(0, c.order() - 1);
  std::uniform_int_distribution<int> pick_copy(-window - 2, window + 2);
  std::uniform_int_distribution<int> pick_x(0, X.num_vertices() - 1);
  auto sample = [&]() {
    WreathElement e;
    e.shift = pick_shift(rng);
    for (int k = -window; k <= window; ++k) {
      int a = pick_elem(rng);
      if (a != c.identity())
        e.comps[k] = a;
    }
    return e;
  };
  auto elem_order = [&](int e) {
    int t = 1, acc = e;
    while (acc != c.identity()) {
      acc = c.mul(acc, e);
      ++t;
    }
    return t;
  };

  for (int t = 0; t < trials; ++t) {
    WreathElement x = sample(), y = sample();
    WreathElement comm = g.commutator(x, y);
    if (comm.shift != 0)
      rep.copy_preserving = false;
    for (auto &[k, e] : comm.comps)
      rep.observed_exponent = std::lcm(rep.observed_exponent, elem_order(e));
    if (!g.power(comm, rep.aut_order).is_identity())
      rep.law_holds = false;
    // spot-check the same identity through the action
    WreathPoint pt{pick_copy(rng), pick_x(rng)};
    if (pt.x == p.v)
      pt.x = p.vstar;
    if (!(g.act(g.power(comm, rep.aut_order), pt) == pt))
      rep.law_holds = false;
    ++rep.pairs_tested;
  }
  return rep;
}

NonsolvabilityReport nonsolvability_evidence(const CubeComplex &X,
                                             const DiametricPair &p) {
  NonsolvabilityReport rep;
  FiniteGroupRealization g = aut_fixing_pair(X, p);
  rep.group_order = g.order();
  DerivedSeries ds = derived_series(g);
  rep.derived_orders = ds.orders;
  rep.solvable = ds.solvable;
  rep.conclusion =
      ds.solvable
          ? "pair-fixing automorphism group is solvable; no nonsolvability "
            "conclusion for the line-complex group"
          : "pair-fixing automorphism group is not solvable, so the direct "
            "sum of its copies over the integers is not virtually solvable";
  return rep;
}

CoordinateActionReport coordinate_action(const CubeComplex &X,
                                         const DiametricPair &p) {
  CoordinateActionReport rep;
  HalfspaceSystem hs(X);
  rep.nplanes = hs.count();
  FiniteGroupRealization g = aut_fixing_pair(X, p);
  std::set<Perm> image;
  for (int i = 0; i < g.order(); ++i) {
    const Perm &phi = g.element(i);
    Perm pp(rep.nplanes);
    for (int q = 0; q < rep.nplanes; ++q) {
      auto [a, b] = hs.representative(q);
      pp[q] = hs.plane_of_edge(phi[a], phi[b]);
    }
    image.insert(pp);
  }
  rep.image_order = static_cast<int>(image.size());
  rep.faithful = rep.image_order == g.order();
  return rep;
}

} // namespace ccgt
