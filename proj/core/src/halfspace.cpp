#include "ccgt/halfspace.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace ccgt {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

HalfspaceSystem::HalfspaceSystem(const CubeComplex &g) : g_(&g) {
  const int ne = g.num_edges();
  UnionFind uf(ne);
  // Opposite edges of an induced square are related; classes are the
  // transitive closure. Every square is visited from each corner.
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    const auto &nu = g.neighbors(u);
    for (size_t i = 0; i < nu.size(); ++i)
      for (size_t j = i + 1; j < nu.size(); ++j) {
        Vertex v = nu[i], w = nu[j];
        if (g.adjacent(v, w))
          continue;
        // common neighbors of v and w other than u
        const auto &nv = g.neighbors(v);
        for (Vertex z : nv) {
          if (z == u || !g.adjacent(w, z) || g.adjacent(u, z))
            continue;
          uf.unite(g.edge_index(u, v), g.edge_index(w, z));
          uf.unite(g.edge_index(u, w), g.edge_index(v, z));
        }
      }
  }
  edge_class_.assign(ne, -1);
  std::vector<int> root_to_class(ne, -1);
  for (int e = 0; e < ne; ++e) {
    int r = uf.find(e);
    if (root_to_class[r] < 0) {
      root_to_class[r] = nplanes_++;
      class_edges_.emplace_back();
    }
    edge_class_[e] = root_to_class[r];
    class_edges_[edge_class_[e]].push_back(e);
  }
}

std::pair<Vertex, Vertex> HalfspaceSystem::representative(int plane) const {
  return g_->edges()[class_edges_.at(plane).front()];
}

void HalfspaceSystem::materialize(int plane) const {
  if (sides_.count(plane))
    return;
  const int n = g_->num_vertices();
  // blocked edges as sorted endpoint pairs: classes are tiny compared
  // to the complex, so this beats per-step edge-id lookups
  std::vector<std::pair<Vertex, Vertex>> blocked;
  for (int e : class_edges_[plane])
    blocked.push_back(g_->edges()[e]);
  std::sort(blocked.begin(), blocked.end());
  auto is_blocked = [&](Vertex v, Vertex w) {
    if (v > w)
      std::swap(v, w);
    return std::binary_search(blocked.begin(), blocked.end(),
                              std::pair{v, w});
  };
  auto grow = [&](Vertex start, DynBitset &out) {
    std::deque<Vertex> q{start};
    out.set(start);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop_front();
      for (Vertex w : g_->neighbors(v)) {
        if (out.test(w) || is_blocked(v, w))
          continue;
        out.set(w);
        q.push_back(w);
      }
    }
  };
  auto [a, b] = representative(plane);
  DynBitset sa(n), sb(n);
  if (n > 100000) {
    // lockstep growth from both endpoints: the smaller side closes
    // first and the other side is its complement, so the cost is twice
    // the small side instead of the whole complex. Two-sidedness is
    // checked via the blocked edges, each of which must cross the
    // finished side; for single-edge classes (trees) that is a full
    // proof of the two-component split.
    auto bad = [&] {
      return RepresentationError(
          "edge class " + std::to_string(plane) +
          " does not separate the complex into two components");
    };
    std::deque<Vertex> qa{a}, qb{b};
    sa.set(a);
    sb.set(b);
    auto step = [&](std::deque<Vertex> &q, DynBitset &mine,
                    const DynBitset &other) {
      if (q.empty())
        return false;
      Vertex v = q.front();
      q.pop_front();
      for (Vertex w : g_->neighbors(v)) {
        if (mine.test(w) || is_blocked(v, w))
          continue;
        if (other.test(w))
          throw bad();
        mine.set(w);
        q.push_back(w);
      }
      return true;
    };
    while (true) {
      bool ga = step(qa, sa, sb);
      bool gb = step(qb, sb, sa);
      if (!ga) {
        sb = sa.complemented();
        break;
      }
      if (!gb) {
        sa = sb.complemented();
        break;
      }
    }
    for (auto [v, w] : blocked)
      if (sa.test(v) == sa.test(w))
        throw bad();
  } else {
    grow(a, sa);
    grow(b, sb);
    if (sa.intersects(sb) || sa.count() + sb.count() != n)
      throw RepresentationError(
          "edge class " + std::to_string(plane) +
          " does not separate the complex into two components");
  }
  // side 0 carries the lexicographically least vertex label
  if (least_ < 0) {
    least_ = 0;
    for (Vertex v = 1; v < n; ++v)
      if (g_->label(v) < g_->label(least_))
        least_ = v;
  }
  Vertex least = least_;
  if (sa.test(least))
    sides_[plane] = {std::move(sa), std::move(sb)};
  else
    sides_[plane] = {std::move(sb), std::move(sa)};
}

const DynBitset &HalfspaceSystem::side(int plane, int s) const {
  materialize(plane);
  return sides_.at(plane)[s];
}

const std::vector<Vertex> &HalfspaceSystem::carrier(int plane) const {
  auto it = carriers_.find(plane);
  if (it == carriers_.end()) {
    std::vector<Vertex> vs;
    for (int e : class_edges_[plane]) {
      vs.push_back(g_->edges()[e].first);
      vs.push_back(g_->edges()[e].second);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    it = carriers_.emplace(plane, std::move(vs)).first;
  }
  return it->second;
}

std::optional<Vertex> HalfspaceSystem::quadrant_witness(HalfspaceRef a,
                                                        HalfspaceRef b) const {
  if (a.plane == b.plane)
    return a.side == b.side ? std::optional<Vertex>(side(a).first())
                            : std::nullopt;
  int v = side(a).first_common(side(b));
  if (v < 0)
    return std::nullopt;
  return v;
}

std::optional<int>
HalfspaceSystem::empty_certificate_budget(HalfspaceRef a, HalfspaceRef b) const {
  // Gate argument: if the quadrant is nonempty globally, it contains the
  // gate of any a-side carrier vertex of plane a onto halfspace b, which
  // lies within depth(start) + d(start, b-side within ball) of the
  // basepoint. If that budget fits inside the ball radius, emptiness
  // within the ball certifies global emptiness.
  const DynBitset &sa = side(a);
  Vertex start = -1;
  for (Vertex v : carrier(a.plane))
    if (sa.test(v) && (start < 0 || g_->depth(v) < g_->depth(start)))
      start = v;
  if (start < 0)
    return std::nullopt;
  const DynBitset &sb = side(b);
  std::vector<int> dist(g_->num_vertices(), -1);
  std::deque<Vertex> q{start};
  dist[start] = 0;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop_front();
    if (sb.test(v))
      return g_->depth(start) + dist[v];
    for (Vertex w : g_->neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push_back(w);
      }
  }
  return std::nullopt;
}

int HalfspaceSystem::basepoint_gap(HalfspaceRef h) const {
  Vertex p = *g_->basepoint();
  const DynBitset &s = side(h);
  if (s.test(p))
    return 0;
  // the basepoint's gate onto the halfspace lies on the carrier
  int best = std::numeric_limits<int>::max() / 4;
  for (Vertex v : carrier(h.plane))
    if (s.test(v))
      best = std::min(best, g_->depth(v));
  return best;
}

Verdict HalfspaceSystem::quadrant_empty(HalfspaceRef a, HalfspaceRef b) const {
  if (a.plane == b.plane)
    return a.side == b.side ? Verdict::No : Verdict::Yes;
  if (side(a).intersects(side(b)))
    return Verdict::No;
  if (!g_->is_ball())
    return Verdict::Yes;
  const int radius = g_->ball_radius();
  // A nonempty quadrant is gated, and any hyperplane separating the
  // basepoint from it must separate the basepoint from a or from b:
  // otherwise the median of an a-vertex and a b-vertex on the basepoint
  // side with a quadrant vertex would lie in the quadrant yet on the
  // basepoint side. So the quadrant's gate sits within
  // d(p,a) + d(p,b) of the basepoint.
  if (basepoint_gap(a) + basepoint_gap(b) <= radius)
    return Verdict::Yes;
  for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
    auto budget = empty_certificate_budget(x, y);
    if (budget && *budget <= radius)
      return Verdict::Yes;
  }
  return Verdict::Inconclusive;
}

Verdict HalfspaceSystem::contained_in(HalfspaceRef a, HalfspaceRef b) const {
  Verdict v = quadrant_empty(a, b.complement());
  return v; // a ⊆ b iff a ∩ b* = ∅
}

Verdict HalfspaceSystem::strictly_contained_in(HalfspaceRef a,
                                               HalfspaceRef b) const {
  Verdict c = contained_in(a, b);
  if (c != Verdict::Yes)
    return c;
  // strictness: a vertex of b outside a, i.e. b ∩ a* nonempty
  Verdict rest_empty = quadrant_empty(b, a.complement());
  if (rest_empty == Verdict::No)
    return Verdict::Yes;
  if (rest_empty == Verdict::Yes)
    return Verdict::No; // a = b as vertex sets
  return Verdict::Inconclusive;
}

bool HalfspaceSystem::transverse(int p1, int p2) const {
  if (p1 == p2)
    return false;
  // square witness: incident edges of the two classes spanning a square
  const auto &small = class_edges_[p1].size() <= class_edges_[p2].size()
                          ? class_edges_[p1]
                          : class_edges_[p2];
  int other = class_edges_[p1].size() <= class_edges_[p2].size() ? p2 : p1;
  for (int e : small) {
    auto [u, v] = g_->edges()[e];
    for (Vertex corner : {u, v}) {
      Vertex far = corner == u ? v : u;
      for (Vertex w : g_->neighbors(corner)) {
        if (w == far || edge_class_[g_->edge_index(corner, w)] != other)
          continue;
        if (g_->adjacent(far, w))
          continue;
        for (Vertex z : g_->neighbors(far))
          if (z != corner && g_->adjacent(w, z) && !g_->adjacent(corner, z))
            return true;
      }
    }
  }
  return false;
}

std::vector<int> HalfspaceSystem::planes_touching_carrier(int p) const {
  std::vector<int> out;
  for (Vertex v : carrier(p))
    for (Vertex w : g_->neighbors(v)) {
      int c = edge_class_[g_->edge_index(v, w)];
      if (c != p)
        out.push_back(c);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Verdict HalfspaceSystem::separated(int p1, int p2) const {
  if (p1 == p2)
    return Verdict::No;
  // Any separator crosses every geodesic from carrier(p1) to carrier(p2),
  // so candidates are the classes of one such geodesic's edges.
  const auto &c1 = carrier(p1);
  const auto &c2 = carrier(p2);
  std::vector<int> dist(g_->num_vertices(), -1);
  std::vector<Vertex> prev(g_->num_vertices(), -1);
  std::deque<Vertex> q;
  for (Vertex v : c1) {
    dist[v] = 0;
    q.push_back(v);
  }
  DynBitset target(g_->num_vertices());
  for (Vertex v : c2)
    target.set(v);
  Vertex hit = -1;
  while (!q.empty() && hit < 0) {
    Vertex v = q.front();
    q.pop_front();
    if (target.test(v)) {
      hit = v;
      break;
    }
    for (Vertex w : g_->neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        prev[w] = v;
        q.push_back(w);
      }
  }
  if (hit < 0)
    return Verdict::No; // carriers inseparable (or touch)
  std::vector<int> candidates;
  for (Vertex v = hit; prev[v] >= 0; v = prev[v])
    candidates.push_back(edge_class_[g_->edge_index(v, prev[v])]);
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  bool saw_inconclusive = false;
  for (int k : candidates) {
    if (k == p1 || k == p2)
      continue;
    for (int ks = 0; ks < 2; ++ks) {
      // carrier(p1) inside side ks of k, carrier(p2) inside the other:
      // equivalently side 1-ks of k inside one side of p1, and side ks
      // of k inside one side of p2.
      auto fits = [&](int plane, HalfspaceRef inner) {
        Verdict best = Verdict::No;
        for (int s = 0; s < 2; ++s) {
          Verdict v = contained_in(inner, {plane, s});
          if (v == Verdict::Yes)
            return Verdict::Yes;
          if (v == Verdict::Inconclusive)
            best = Verdict::Inconclusive;
        }
        return best;
      };
      Verdict v1 = fits(p1, HalfspaceRef{k, 1 - ks});
      Verdict v2 = fits(p2, HalfspaceRef{k, ks});
      if (v1 == Verdict::Yes && v2 == Verdict::Yes)
        return Verdict::Yes;
      if (v1 == Verdict::Inconclusive || v2 == Verdict::Inconclusive)
        saw_inconclusive = true;
    }
  }
  return saw_inconclusive ? Verdict::Inconclusive : Verdict::No;
}

Verdict HalfspaceSystem::strongly_separated(int p1, int p2) const {
  Verdict sep = separated(p1, p2);
  if (sep == Verdict::No)
    return Verdict::No;
  // A hyperplane transverse to both must share a square with p1, hence
  // have an edge at a carrier vertex of p1 (and symmetrically p2).
  // Scan whichever carrier is fully interior so no witness square is cut
  // off by the ball boundary.
  auto scan = [&](int pa, int pb) -> std::optional<Verdict> {
    if (g_->is_ball())
      for (Vertex v : carrier(pa))
        if (g_->depth(v) > g_->ball_radius() - 2)
          return std::nullopt; // witness squares may be missing
    for (int k : planes_touching_carrier(pa))
      if (k != pb && transverse(k, pa) && transverse(k, pb))
        return Verdict::No;
    return Verdict::Yes;
  };
  for (auto [pa, pb] : {std::pair{p1, p2}, std::pair{p2, p1}}) {
    auto res = scan(pa, pb);
    if (res == Verdict::No)
      return Verdict::No;
    if (res == Verdict::Yes)
      return sep; // Yes or Inconclusive from the separated check
  }
  return Verdict::Inconclusive;
}

PairRelation HalfspaceSystem::classify(int p1, int p2) const {
  PairRelation rel;
  int empties = 0;
  Verdict concl = Verdict::Yes;
  for (int s1 = 0; s1 < 2; ++s1)
    for (int s2 = 0; s2 < 2; ++s2) {
      Verdict v = quadrant_empty({p1, s1}, {p2, s2});
      if (v == Verdict::Yes) {
        ++empties;
        rel.empty_quadrant = {s1, s2};
      } else if (v == Verdict::Inconclusive) {
        concl = Verdict::Inconclusive;
      }
    }
  bool square = transverse(p1, p2);
  if (empties == 0 && concl == Verdict::Yes) {
    if (!square)
      throw RepresentationError(
          "quadrant table says transverse but no square witness");
    rel.base = BaseRel::Transverse;
    rel.conclusive = Verdict::Yes;
    return rel;
  }
  if (empties == 0) {
    // could not certify any quadrant empty; square witness may still
    // settle transversality positively
    if (square) {
      rel.base = BaseRel::Transverse;
      rel.conclusive = Verdict::Yes;
      return rel;
    }
    rel.conclusive = Verdict::Inconclusive;
    return rel;
  }
  if (square)
    throw RepresentationError(
        "square witness present but a quadrant is empty");
  rel.base = (rel.empty_quadrant[0] == rel.empty_quadrant[1])
                 ? BaseRel::Facing
                 : BaseRel::Nested;
  rel.conclusive = concl;
  Verdict sep = separated(p1, p2);
  rel.separated = sep == Verdict::Yes;
  if (sep != Verdict::No && rel.conclusive == Verdict::Yes &&
      sep == Verdict::Inconclusive)
    rel.conclusive = Verdict::Inconclusive;
  Verdict ss = strongly_separated(p1, p2);
  rel.strongly_separated = ss == Verdict::Yes;
  if (ss == Verdict::Inconclusive)
    rel.conclusive = Verdict::Inconclusive;
  return rel;
}

bool HalfspaceSystem::facing_tuple(const std::vector<HalfspaceRef> &hs) const {
  for (size_t i = 0; i < hs.size(); ++i)
    for (size_t j = i + 1; j < hs.size(); ++j) {
      // Two sides of one hyperplane partition the vertices; that is not a
      // facing configuration, so tuples may not repeat a hyperplane.
      if (hs[i].plane == hs[j].plane)
        return false;
      if (quadrant_empty(hs[i], hs[j]) != Verdict::Yes)
        return false;
    }
  return true;
}

std::vector<HalfspaceRef> HalfspaceSystem::vertex_ultrafilter(Vertex v) const {
  std::vector<HalfspaceRef> out;
  out.reserve(nplanes_);
  for (int p = 0; p < nplanes_; ++p) {
    bool s0 = side(p, 0).test(v);
    bool s1 = side(p, 1).test(v);
    if (s0 == s1)
      throw RepresentationError("halfspace sides do not partition vertices");
    out.emplace_back(p, s0 ? 0 : 1);
  }
  return out;
}

} // namespace ccgt
