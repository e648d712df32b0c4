#include "ccgt/skewer.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "ccgt/median.hpp"

namespace ccgt {

namespace {

// bounded BFS distance; -1 if farther than `bound`
int bounded_distance(const CubeComplex &g, Vertex from, Vertex to, int bound) {
  if (from == to)
    return 0;
  if (bound <= 0)
    return -1;
  std::vector<int> dist(g.num_vertices(), -1);
  std::deque<Vertex> q{from};
  dist[from] = 0;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop_front();
    if (dist[v] >= bound)
      continue;
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] >= 0)
        continue;
      if (w == to)
        return dist[v] + 1;
      dist[w] = dist[v] + 1;
      q.push_back(w);
    }
  }
  return -1;
}

} // namespace

FixedBehavior classify_fixed_behavior(const CubeComplex &g,
                                      const Automorphism &a, int radius) {
  FixedBehavior out;
  out.radius = radius;
  const int n = g.num_vertices();

  // fixed vertex
  for (Vertex v = 0; v < n; ++v)
    if (a.fwd[v] == v) {
      out.elliptic = true;
      out.fixed_cube = {v};
      out.translation_min = 0;
      return out;
    }
  // setwise-fixed edge
  for (auto [u, v] : g.edges())
    if (a.fwd[u] == v && a.fwd[v] == u) {
      out.elliptic = true;
      out.fixed_cube = {u, v};
      out.translation_min = 1;
      return out;
    }
  // setwise-fixed higher cube; only affordable on small complexes
  if (n <= 5000) {
    for (int k = 2; k <= g.dimension_bound(); ++k) {
      auto cubes = detect_cubes(g, k).cubes;
      if (cubes.empty())
        break;
      for (const auto &c : cubes) {
        std::vector<Vertex> img;
        bool ok = true;
        for (Vertex v : c.vertices) {
          if (a.fwd[v] < 0) {
            ok = false;
            break;
          }
          img.push_back(a.fwd[v]);
        }
        if (!ok)
          continue;
        std::sort(img.begin(), img.end());
        if (img == c.vertices) {
          out.elliptic = true;
          out.fixed_cube = c.vertices;
          out.translation_min = 0;
          return out;
        }
      }
    }
  }

  int best = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (a.fwd[v] < 0)
      continue;
    int bound = best < 0 ? g.num_vertices() : best - 1;
    int d = bounded_distance(g, v, a.fwd[v], bound);
    if (d >= 0 && (best < 0 || d < best))
      best = d;
    if (best == 1)
      break;
  }
  out.translation_min = best;
  return out;
}

Verdict flips(const GroupAction &action, const HalfspaceSystem &hs,
              const Automorphism &g, HalfspaceRef h) {
  auto img = action.image_halfspace(hs, g, h);
  if (!img)
    return Verdict::Inconclusive;
  if (*img == h.complement())
    return Verdict::No; // equal, not strict
  return hs.strictly_contained_in(*img, h.complement());
}

std::optional<Word> find_flipper(const GroupAction &action,
                                 const HalfspaceSystem &hs, HalfspaceRef h,
                                 int max_word_len, bool *saw_inconclusive) {
  if (saw_inconclusive)
    *saw_inconclusive = false;
  // deep flippers need long words, so the search walks the reduced-word
  // tree in place (iterative deepening keeps it shortest-first) and
  // filters candidates by a constant-time necessary condition before
  // any halfspace is materialized: the image of the carrier edge must
  // already lie inside h*.
  const int ng = action.num_generators();
  std::vector<bool> invol(ng);
  for (int i = 0; i < ng; ++i)
    invol[i] = action.generator(i).fwd == action.generator_inverse(i).fwd;
  std::vector<int> letters;
  for (int i = 1; i <= ng; ++i) {
    letters.push_back(i);
    if (!invol[i - 1])
      letters.push_back(-i);
  }
  auto [eu, ev] = hs.representative(h.plane);
  const DynBitset &star = hs.side(h.complement());
  const bool u_in_h = hs.contains(h, eu);

  Word w; // built back-to-front: letters are prepended action-wise
  std::optional<Word> found;
  bool inconclusive_seen = false;
  auto check = [&](Vertex mu, Vertex mv) {
    // candidates surviving the filter get the full strictness check
    if (!action.complex().adjacent(mu, mv))
      return false;
    if (!star.test(mu) || !star.test(mv))
      return false;
    int plane = hs.plane_of_edge(mu, mv);
    if (plane == h.plane)
      return false;
    Vertex probe = u_in_h ? mu : mv;
    HalfspaceRef img{plane, hs.contains({plane, 0}, probe) ? 0 : 1};
    if (img == h.complement())
      return false;
    Verdict v = hs.strictly_contained_in(img, h.complement());
    if (v == Verdict::Yes)
      return true;
    if (v == Verdict::Inconclusive)
      inconclusive_seen = true;
    return false;
  };
  // the state carries the carrier edge's image under the suffix chosen
  // so far, so each extension is two table lookups; a branch whose
  // image leaves the ball can never recover and is pruned whole
  auto step = [&](int l, Vertex v) -> Vertex {
    const Automorphism &g =
        l > 0 ? action.generator(l - 1) : action.generator_inverse(-l - 1);
    return v >= 0 && g.fwd[v] >= 0 ? g.fwd[v] : -1;
  };
  auto dfs = [&](auto &&self, int remaining, Vertex mu, Vertex mv) -> bool {
    if (remaining == 0)
      return check(mu, mv);
    for (int l : letters) {
      // adjacent-letter reduction, seen from the front of the word
      if (!w.empty() &&
          (w.back() == -l || (l > 0 && invol[l - 1] && w.back() == l)))
        continue;
      Vertex nu = step(l, mu), nv = step(l, mv);
      if (nu < 0 || nv < 0) {
        inconclusive_seen = true;
        continue;
      }
      w.push_back(l);
      if (self(self, remaining - 1, nu, nv))
        return true;
      w.pop_back();
    }
    return false;
  };
  for (int len = 1; len <= max_word_len && !found; ++len) {
    w.clear();
    if (dfs(dfs, len, eu, ev)) {
      // w was collected suffix-first; the word reads front-to-back
      std::reverse(w.begin(), w.end());
      found = w;
    }
  }
  if (saw_inconclusive)
    *saw_inconclusive = inconclusive_seen;
  return found;
}

SkewerCert double_skewers(const GroupAction &action, const HalfspaceSystem &hs,
                          const Word &g, HalfspaceRef hprime,
                          HalfspaceRef hsecond, bool strong) {
  SkewerCert cert;
  cert.word = g;
  cert.hprime = hprime;
  cert.hsecond = hsecond;
  cert.strong = strong;
  auto names = action.generator_names();
  auto describe = [&](HalfspaceRef h) {
    return "(" + std::to_string(h.plane) + "," + std::to_string(h.side) + ")";
  };
  Verdict nested = hs.strictly_contained_in(hprime, hsecond);
  cert.transcript.push_back("h' strictly inside h'': " +
                            std::string(to_string(nested)));
  if (nested != Verdict::Yes) {
    cert.status = nested;
    return cert;
  }
  Automorphism a = action.evaluate(g);
  auto img = action.image_halfspace(hs, a, hsecond);
  if (!img) {
    cert.transcript.push_back("image of h'' under " +
                              word_to_string(g, names) + ": out of ball");
    cert.status = Verdict::Inconclusive;
    return cert;
  }
  cert.transcript.push_back("g.h'' = " + describe(*img));
  Verdict inner = *img == hprime
                      ? Verdict::No
                      : hs.strictly_contained_in(*img, hprime);
  cert.transcript.push_back("g.h'' strictly inside h': " +
                            std::string(to_string(inner)));
  if (inner != Verdict::Yes) {
    cert.status = inner;
    return cert;
  }
  if (strong) {
    Verdict ss = hs.strongly_separated(hprime.plane, hsecond.plane);
    cert.transcript.push_back("h', h'' strongly separated: " +
                              std::string(to_string(ss)));
    if (ss != Verdict::Yes) {
      cert.status = ss;
      return cert;
    }
  }
  cert.status = Verdict::Yes;
  return cert;
}

SkewerCert contracting_certificate(const GroupAction &action,
                                   const HalfspaceSystem &hs, const Word &g,
                                   HalfspaceRef hprime, HalfspaceRef hsecond) {
  return double_skewers(action, hs, g, hprime, hsecond, true);
}

std::pair<DescendingChain, DescendingChain>
poles_prefix(const GroupAction &action, const HalfspaceSystem &hs,
             const Word &g, HalfspaceRef h, int m) {
  auto names = action.generator_names();
  Automorphism a = action.evaluate(g);
  Automorphism ainv = a.inverse();

  auto build = [&](const Automorphism &step, HalfspaceRef start,
                   const std::string &desc) {
    DescendingChain c;
    c.description = desc;
    c.chain.push_back(start);
    c.strongly_separated = true;
    HalfspaceRef cur = start;
    for (int i = 1; i <= m; ++i) {
      auto next = action.image_halfspace(hs, step, cur);
      if (!next) {
        c.status = Verdict::Inconclusive;
        return c;
      }
      Verdict desc_ok = *next == cur
                            ? Verdict::No
                            : hs.strictly_contained_in(*next, cur);
      if (desc_ok != Verdict::Yes) {
        c.status = desc_ok;
        return c;
      }
      Verdict ss = hs.strongly_separated(next->plane, cur.plane);
      if (ss != Verdict::Yes)
        c.strongly_separated = false;
      c.chain.push_back(*next);
      c.verified_steps = i;
      cur = *next;
    }
    return c;
  };
  std::string gname = word_to_string(g, names);
  return {build(a, h, "{" + gname + "^i.h}"),
          build(ainv, h.complement(), "{" + gname + "^-i.h*}")};
}

ChainDisjointness chain_disjointness(const HalfspaceSystem &hs,
                                     const DescendingChain &a,
                                     const DescendingChain &b, int m) {
  ChainDisjointness out;
  bool inconclusive = false;
  int top = std::min<int>(
      {m, static_cast<int>(a.chain.size()) - 1,
       static_cast<int>(b.chain.size()) - 1});
  for (int i = 0; i <= top; ++i) {
    Verdict v = hs.quadrant_empty(a.chain[i], b.chain[i]);
    if (v == Verdict::Yes) {
      out.disjoint_at = i;
      out.status = Verdict::Yes;
      return out;
    }
    if (v == Verdict::Inconclusive)
      inconclusive = true;
  }
  out.status =
      (inconclusive || top < m) ? Verdict::Inconclusive : Verdict::No;
  return out;
}

std::optional<Word> essentiality_witness(const GroupAction &action,
                                         const HalfspaceSystem &hs, int plane,
                                         int D, int max_word_len) {
  const CubeComplex &g = action.complex();
  const auto &carr = hs.carrier(plane);
  std::vector<int> dist(g.num_vertices(), -1);
  std::deque<Vertex> q;
  for (Vertex v : carr) {
    dist[v] = 0;
    q.push_back(v);
  }
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop_front();
    for (Vertex w : g.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push_back(w);
      }
  }
  HalfspaceRef h{plane, 0};
  for (const Word &w : action.enumerate_words(max_word_len)) {
    Automorphism a = action.evaluate(w);
    auto img = action.image_halfspace(hs, a, h);
    if (!img)
      continue;
    int dmin = -1;
    for (Vertex v : hs.carrier(img->plane))
      if (dist[v] >= 0 && (dmin < 0 || dist[v] < dmin))
        dmin = dist[v];
    if (dmin >= D)
      return w;
  }
  return std::nullopt;
}

std::optional<Word> find_simultaneous_skewerer(
    const GroupAction &action, const HalfspaceSystem &hs,
    const std::vector<std::pair<HalfspaceRef, HalfspaceRef>> &pairs,
    int max_word_len, bool strong) {
  for (const Word &w : action.enumerate_words(max_word_len)) {
    bool all = true;
    for (const auto &[hp, hsnd] : pairs) {
      SkewerCert c = double_skewers(action, hs, w, hp, hsnd, strong);
      if (c.status != Verdict::Yes) {
        all = false;
        break;
      }
    }
    if (all)
      return w;
  }
  return std::nullopt;
}

} // namespace ccgt
