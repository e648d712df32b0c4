#include "ccgt/canonical.hpp"

#include <algorithm>
#include <map>

namespace ccgt {

namespace {

using Coloring = std::vector<int>;

/// 1-WL color refinement to a stable partition. Colors are canonical:
/// new color ids follow the sorted order of signatures.
void refine(const CubeComplex &g, Coloring &color) {
  const int n = g.num_vertices();
  while (true) {
    using Sig = std::pair<int, std::vector<int>>;
    std::vector<Sig> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      std::vector<int> around;
      around.reserve(g.neighbors(v).size());
      for (Vertex w : g.neighbors(v))
        around.push_back(color[w]);
      std::sort(around.begin(), around.end());
      sig[v] = {color[v], std::move(around)};
    }
    std::map<Sig, int> order;
    for (const Sig &s : sig)
      order.emplace(s, 0);
    int next = 0;
    for (auto &[s, id] : order)
      id = next++;
    Coloring fresh(n);
    for (Vertex v = 0; v < n; ++v)
      fresh[v] = order[sig[v]];
    if (fresh == color)
      return;
    color = std::move(fresh);
  }
}

std::string emit(const CubeComplex &g, const Coloring &color) {
  const int n = g.num_vertices();
  std::vector<Vertex> perm(n);
  for (Vertex v = 0; v < n; ++v)
    perm[color[v]] = v;
  std::string s;
  s.reserve(static_cast<size_t>(n) * n / 2 + 16);
  s += std::to_string(n);
  s += ';';
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      s += g.adjacent(perm[i], perm[j]) ? '1' : '0';
  return s;
}

std::string canon_rec(const CubeComplex &g, Coloring color) {
  refine(g, color);
  const int n = g.num_vertices();
  // first color class with more than one vertex
  std::map<int, std::vector<Vertex>> classes;
  for (Vertex v = 0; v < n; ++v)
    classes[color[v]].push_back(v);
  const std::vector<Vertex> *split = nullptr;
  for (const auto &[c, vs] : classes)
    if (vs.size() > 1) {
      split = &vs;
      break;
    }
  if (!split)
    return emit(g, color);
  std::string best;
  for (Vertex v : *split) {
    Coloring next = color;
    next[v] = n; // fresh maximal color, symmetric across branches
    std::string s = canon_rec(g, std::move(next));
    if (best.empty() || s < best)
      best = std::move(s);
  }
  return best;
}

} // namespace

std::string canonical_form(const CubeComplex &g) {
  Coloring color(g.num_vertices(), 0);
  return canon_rec(g, std::move(color));
}

} // namespace ccgt
