#include "ccgt/girth.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <random>
#include <set>

namespace ccgt {

GirthResult girth_cayley(const FiniteGroupRealization &g,
                         const std::vector<int> &gens) {
  GirthResult out;
  for (int e : gens)
    if (g.inv(e) == e && e != g.identity())
      out.involution_note = true;

  auto closure = g.closure(gens);
  if (static_cast<int>(closure.size()) != g.order()) {
    out.generated = false;
    out.subgroup_order = static_cast<int>(closure.size());
    return out;
  }

  // simple undirected adjacency: x ~ x·s^{±1}, deduplicated
  const int n = g.order();
  auto neighbors = [&](int x) {
    std::vector<std::pair<int, int>> nb; // (vertex, generator letter)
    std::set<int> seen{x};
    for (size_t i = 0; i < gens.size(); ++i) {
      int a = g.mul(x, gens[i]);
      if (seen.insert(a).second)
        nb.push_back({a, static_cast<int>(i) + 1});
      int b = g.mul(x, g.inv(gens[i]));
      if (seen.insert(b).second)
        nb.push_back({b, -(static_cast<int>(i) + 1)});
    }
    return nb;
  };

  // BFS from the identity; the shortest cycle through the root is
  // min over cross/back edges (u,w) of dist[u]+dist[w]+1, and by
  // vertex transitivity that is the girth
  std::vector<int> dist(n, -1), parent(n, -1), letter(n, 0);
  std::deque<int> q{g.identity()};
  dist[g.identity()] = 0;
  int best = -1, bu = -1, bw = -1, blet = 0;
  std::vector<int> order;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    order.push_back(u);
    for (auto [w, let] : neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        parent[w] = u;
        letter[w] = let;
        q.push_back(w);
      }
    }
  }
  for (int u : order)
    for (auto [w, let] : neighbors(u)) {
      if (parent[w] == u || parent[u] == w)
        continue; // tree edge
      int len = dist[u] + dist[w] + 1;
      if (best < 0 || len < best) {
        best = len;
        bu = u;
        bw = w;
        blet = let;
      }
    }
  if (best < 0) {
    // a finite Cayley graph with at least one nontrivial generator
    // always closes a cycle unless the graph is a single edge or vertex
    out.infinite_within = true;
    out.girth = -1;
    return out;
  }
  out.girth = best;
  // witness: path id -> u, the edge, then w -> id reversed
  std::vector<int> up, down;
  for (int v = bu; v != g.identity(); v = parent[v])
    up.push_back(letter[v]);
  std::reverse(up.begin(), up.end());
  for (int v = bw; v != g.identity(); v = parent[v])
    down.push_back(-letter[v]);
  out.witness = up;
  out.witness.push_back(blet);
  out.witness.insert(out.witness.end(), down.begin(), down.end());
  return out;
}

GirthResult girth_ball(const FamilyBall &ball) {
  GirthResult out;
  const CubeComplex &g = ball.complex;
  out.radius = g.ball_radius();
  // a connected graph is acyclic iff |E| = |V| - 1
  if (g.num_edges() == g.num_vertices() - 1) {
    out.infinite_within = true;
    out.girth = 2 * out.radius + 1; // certified lower bound
    return out;
  }
  // cycle inside the ball: BFS from the basepoint as above
  Vertex root = g.basepoint().value_or(0);
  std::vector<int> dist(g.num_vertices(), -1), parent(g.num_vertices(), -1);
  std::deque<Vertex> q{root};
  dist[root] = 0;
  int best = -1;
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop_front();
    for (Vertex w : g.neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        parent[w] = u;
        q.push_back(w);
      }
  }
  for (auto [u, w] : g.edges()) {
    if (parent[w] == u || parent[u] == w)
      continue;
    int len = dist[u] + dist[w] + 1;
    if (best < 0 || len < best)
      best = len;
  }
  out.girth = best;
  return out;
}

namespace {

// subsets equal up to inverses give the same Cayley graph; keep the
// canonical representative min(e, e^-1) and dedupe
std::vector<int> inverse_canonical(const FiniteGroupRealization &g,
                                   const std::vector<int> &set) {
  std::vector<int> out;
  for (int e : set)
    out.push_back(std::min(e, g.inv(e)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace

GirthSupResult girth_sup_bounded(const FiniteGroupRealization &g,
                                 int max_gens) {
  GirthSupResult out;
  const int n = g.order();
  std::vector<int> nontrivial;
  for (int e = 0; e < n; ++e)
    if (e != g.identity() && std::min(e, g.inv(e)) == e)
      nontrivial.push_back(e);

  std::set<std::vector<int>> done; // conjugacy-pruned
  std::vector<int> cur;

  std::function<void(size_t)> rec = [&](size_t from) {
    if (!cur.empty()) {
      std::vector<int> canon = cur;
      // lexicographically least conjugate of the subset
      for (int c = 0; c < n; ++c) {
        std::vector<int> conj;
        for (int e : cur)
          conj.push_back(g.mul(g.mul(c, e), g.inv(c)));
        conj = inverse_canonical(g, conj);
        if (conj < canon)
          canon = conj;
      }
      if (done.insert(canon).second) {
        ++out.sets_examined;
        GirthResult r = girth_cayley(g, cur);
        if (r.generated && r.girth > out.girth) {
          out.girth = r.girth;
          out.witness_gens = cur;
        }
      }
    }
    if (static_cast<int>(cur.size()) >= max_gens)
      return;
    for (size_t i = from; i < nontrivial.size(); ++i) {
      cur.push_back(nontrivial[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

LawResult check_law(const FiniteGroupRealization &g,
                    const std::vector<int> &word, int nvars,
                    std::int64_t exhaustive_limit, int samples,
                    std::uint64_t seed) {
  LawResult out;
  auto eval = [&](const std::vector<int> &tuple) {
    int acc = g.identity();
    for (int l : word) {
      int e = tuple[std::abs(l) - 1];
      acc = g.mul(acc, l > 0 ? e : g.inv(e));
    }
    return acc;
  };
  std::int64_t total = 1;
  for (int i = 0; i < nvars; ++i) {
    total *= g.order();
    if (total > exhaustive_limit)
      break;
  }
  if (total <= exhaustive_limit) {
    out.exhaustive = true;
    std::vector<int> tuple(nvars, 0);
    while (true) {
      ++out.tuples_checked;
      if (eval(tuple) != g.identity()) {
        out.holds = false;
        out.counterexample = tuple;
        return out;
      }
      int i = 0;
      while (i < nvars && ++tuple[i] == g.order()) {
        tuple[i] = 0;
        ++i;
      }
      if (i == nvars)
        break;
    }
    return out;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, g.order() - 1);
  std::vector<int> tuple(nvars);
  for (int s = 0; s < samples; ++s) {
    for (int &x : tuple)
      x = pick(rng);
    ++out.tuples_checked;
    if (eval(tuple) != g.identity()) {
      out.holds = false;
      out.counterexample = tuple;
      return out;
    }
  }
  return out;
}

DerivedSeries derived_series(const FiniteGroupRealization &g) {
  DerivedSeries out;
  std::vector<int> cur(g.order());
  for (int i = 0; i < g.order(); ++i)
    cur[i] = i;
  out.orders.push_back(g.order());
  while (true) {
    // commutator subgroup of <cur>
    std::vector<int> comms;
    for (int a : cur)
      for (int b : cur)
        comms.push_back(
            g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    std::vector<int> next = g.closure(comms);
    if (next.size() == cur.size())
      break; // stabilized
    out.orders.push_back(static_cast<int>(next.size()));
    cur = std::move(next);
    if (cur.size() == 1)
      break;
  }
  out.solvable = cur.size() == 1;
  return out;
}

} // namespace ccgt
