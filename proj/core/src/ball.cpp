#include "ccgt/ball.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "ccgt/median.hpp"

namespace ccgt {

namespace {

// words over letters; lowercase = generator, uppercase = its inverse
char gen_letter(int i) { return static_cast<char>('a' + i); }
char inv_letter(int i) { return static_cast<char>('A' + i); }
char flip_case(char c) {
  return std::isupper(static_cast<unsigned char>(c))
             ? static_cast<char>(std::tolower(static_cast<unsigned char>(c)))
             : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
}

std::string word_label(const std::string &w) { return w.empty() ? "1" : w; }

FamilyBall tree_ball(int radius, const std::vector<char> &letters,
                     bool involutions) {
  FamilyBall fb;
  CubeComplex &g = fb.complex;
  const int L = static_cast<int>(letters.size());
  std::vector<int> slot(256, -1);
  for (int i = 0; i < L; ++i)
    slot[static_cast<unsigned char>(letters[i])] = i;
  std::vector<std::string> words;
  // child[v * L + i] = the vertex for words[v] + letters[i]
  std::vector<Vertex> child;
  {
    // vertex count of the reduced-word tree, for capacity hints
    size_t nv = 1, layer = 1;
    for (int d = 1; d <= radius; ++d) {
      layer *= d == 1 ? L : L - 1;
      nv += layer;
    }
    g.reserve(static_cast<int>(nv), static_cast<int>(nv - 1));
    words.reserve(nv);
    child.reserve(nv * L);
  }
  g.add_vertex(word_label(""));
  words.push_back("");
  child.resize(L, -1);
  // BFS by word length; edge = append one letter on the right. Every
  // non-cancelling extension of a reduced word is a fresh reduced word,
  // so no dedup lookup is needed while growing the tree.
  for (size_t head = 0; head < words.size(); ++head) {
    const std::string w = words[head];
    if (static_cast<int>(w.size()) >= radius)
      continue;
    for (char c : letters) {
      bool cancels = !w.empty() && (involutions ? w.back() == c
                                                : w.back() == flip_case(c));
      if (cancels)
        continue;
      Vertex b = g.add_vertex(word_label(w + c));
      words.push_back(w + c);
      child.resize(child.size() + L, -1);
      child[head * L + slot[static_cast<unsigned char>(c)]] = b;
      g.add_edge(static_cast<Vertex>(head), b);
    }
  }
  g.set_basepoint(0);
  g.set_dimension_bound(1);
  g.declare_ball(0, radius);

  // resolve a reduced word to its vertex by walking the child pointers
  auto lookup = [&](const std::string &w) -> Vertex {
    Vertex v = 0;
    for (char c : w) {
      v = child[static_cast<size_t>(v) * L +
                slot[static_cast<unsigned char>(c)]];
      if (v < 0)
        return -1;
    }
    return v;
  };

  // generators act by left multiplication
  int ngens = involutions ? L : L / 2;
  for (int i = 0; i < ngens; ++i) {
    char c = gen_letter(i);
    Automorphism a;
    a.name = std::string(1, c);
    a.fwd.assign(g.num_vertices(), -1);
    a.inv.assign(g.num_vertices(), -1);
    auto left_mult = [&](char l, const std::string &w) {
      bool cancels = !w.empty() && (involutions ? w.front() == l
                                                : w.front() == flip_case(l));
      return cancels ? w.substr(1) : l + w;
    };
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      Vertex m = lookup(left_mult(c, words[v]));
      if (m >= 0) {
        a.fwd[v] = m;
        a.inv[m] = v;
      }
    }
    if (involutions)
      a.inv = a.fwd;
    fb.generators.push_back(std::move(a));
  }
  return fb;
}

} // namespace

FamilyBall free_group_ball(int rank, int radius) {
  std::vector<char> letters;
  for (int i = 0; i < rank; ++i) {
    letters.push_back(gen_letter(i));
    letters.push_back(inv_letter(i));
  }
  return tree_ball(radius, letters, false);
}

FamilyBall free_product_involutions_ball(int k, int radius) {
  std::vector<char> letters;
  for (int i = 0; i < k; ++i)
    letters.push_back(gen_letter(i));
  return tree_ball(radius, letters, true);
}

Vertex LineBall::vertex_of(int i, Vertex x) const {
  // glue: copy i's v* is copy i+1's v; stored coords avoid x == v
  // except at the bottom copy
  if (x == v && i > -copies) {
    i -= 1;
    x = vstar;
  }
  auto it = index_.find({i, x});
  return it == index_.end() ? -1 : it->second;
}

std::pair<int, Vertex> LineBall::coords(Vertex w) const { return coords_[w]; }

LineBall line_complex_ball(const CubeComplex &X, Vertex v, Vertex vstar,
                           int copies) {
  if (v == vstar)
    throw std::invalid_argument("diametric pair must be two distinct vertices");
  LineBall lb;
  lb.base = &X;
  lb.v = v;
  lb.vstar = vstar;
  lb.copies = copies;
  lb.period = X.distance(v, vstar);
  CubeComplex &g = lb.complex;
  for (int i = -copies; i < copies; ++i)
    for (Vertex x = 0; x < X.num_vertices(); ++x) {
      if (x == v && i > -copies)
        continue;
      Vertex w = g.add_vertex("c" + std::to_string(i) + "|" + X.label(x));
      lb.coords_.push_back({i, x});
      lb.index_[{i, x}] = w;
    }
  for (int i = -copies; i < copies; ++i)
    for (auto [x, y] : X.edges())
      g.add_edge(lb.vertex_of(i, x), lb.vertex_of(i, y));
  Vertex base = lb.vertex_of(0, v);
  g.set_basepoint(base);
  g.set_dimension_bound(X.dimension_bound());
  g.declare_ball(base, copies * lb.period);

  lb.shift.name = "t";
  lb.shift.fwd.assign(g.num_vertices(), -1);
  lb.shift.inv.assign(g.num_vertices(), -1);
  for (Vertex w = 0; w < g.num_vertices(); ++w) {
    auto [i, x] = lb.coords_[w];
    Vertex m = lb.vertex_of(i + 1, x);
    if (m >= 0) {
      lb.shift.fwd[w] = m;
      lb.shift.inv[m] = w;
    }
  }
  return lb;
}

FamilyBall product_ball(const FamilyBall &A, const FamilyBall &B) {
  if (A.generators.size() != B.generators.size())
    throw std::invalid_argument("diagonal action needs matching generators");
  FamilyBall fb;
  fb.complex = product(A.complex, B.complex);
  const int nb = B.complex.num_vertices();
  auto at = [nb](Vertex x, Vertex y) { return x * nb + y; };
  Vertex ba = A.complex.basepoint().value_or(0);
  Vertex bb = B.complex.basepoint().value_or(0);
  Vertex base = at(ba, bb);
  fb.complex.set_basepoint(base);
  int radius = std::min(A.complex.ball_radius(), B.complex.ball_radius());
  fb.complex.declare_ball(base, radius);
  for (size_t gi = 0; gi < A.generators.size(); ++gi) {
    const auto &ga = A.generators[gi];
    const auto &gb = B.generators[gi];
    Automorphism a;
    a.name = ga.name;
    a.fwd.assign(fb.complex.num_vertices(), -1);
    a.inv.assign(fb.complex.num_vertices(), -1);
    for (Vertex x = 0; x < A.complex.num_vertices(); ++x)
      for (Vertex y = 0; y < nb; ++y) {
        if (ga.fwd[x] >= 0 && gb.fwd[y] >= 0)
          a.fwd[at(x, y)] = at(ga.fwd[x], gb.fwd[y]);
        if (ga.inv[x] >= 0 && gb.inv[y] >= 0)
          a.inv[at(x, y)] = at(ga.inv[x], gb.inv[y]);
      }
    fb.generators.push_back(std::move(a));
  }
  return fb;
}

} // namespace ccgt
