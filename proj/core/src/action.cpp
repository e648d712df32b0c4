#include "ccgt/action.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace ccgt {

Automorphism Automorphism::identity(int n, const std::string &name) {
  Automorphism a;
  a.name = name;
  a.fwd.resize(n);
  a.inv.resize(n);
  for (int i = 0; i < n; ++i)
    a.fwd[i] = a.inv[i] = i;
  return a;
}

bool Automorphism::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (fwd[i] >= 0 && fwd[i] != i)
      return false;
  return true;
}

Automorphism Automorphism::inverse() const {
  Automorphism a;
  a.name = name + "^-1";
  a.fwd = inv;
  a.inv = fwd;
  return a;
}

Automorphism Automorphism::after(const Automorphism &other) const {
  Automorphism a;
  a.name = name + "*" + other.name;
  const int n = std::max(size(), other.size());
  a.fwd.assign(n, -1);
  a.inv.assign(n, -1);
  for (int v = 0; v < other.size(); ++v) {
    int m = other.fwd[v];
    if (m >= 0 && m < size() && fwd[m] >= 0)
      a.fwd[v] = fwd[m];
  }
  for (int v = 0; v < size(); ++v) {
    int m = inv[v];
    if (m >= 0 && m < other.size() && other.inv[m] >= 0)
      a.inv[v] = other.inv[m];
  }
  return a;
}

Verdict check_automorphism(const CubeComplex &g, const Automorphism &a) {
  const int n = g.num_vertices();
  if (a.size() != n)
    return Verdict::No;
  std::vector<char> hit(n, 0);
  bool partial = false;
  for (int v = 0; v < n; ++v) {
    int m = a.fwd[v];
    if (m < 0) {
      partial = true;
      continue;
    }
    if (m >= n || hit[m])
      return Verdict::No; // not injective
    hit[m] = 1;
    if (a.inv[m] != v)
      return Verdict::No; // inverse table disagrees
  }
  if (partial && !g.is_ball())
    return Verdict::No;
  auto must_preserve = [&](Vertex v) {
    return !g.is_ball() || g.interior(v);
  };
  for (auto [u, v] : g.edges()) {
    int mu = a.fwd[u], mv = a.fwd[v];
    if (mu >= 0 && mv >= 0) {
      // an interior vertex has all its neighbors in the ball, so the
      // image edge must be present when either image is interior
      if ((must_preserve(mu) || must_preserve(mv)) && !g.adjacent(mu, mv))
        return Verdict::No;
    }
    mu = a.inv[u];
    mv = a.inv[v];
    if (mu >= 0 && mv >= 0 && (must_preserve(mu) || must_preserve(mv)) &&
        !g.adjacent(mu, mv))
      return Verdict::No;
  }
  return Verdict::Yes;
}

std::string word_to_string(const Word &w,
                           const std::vector<std::string> &names) {
  if (w.empty())
    return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i)
      s += ".";
    int k = w[i];
    s += names.at(std::abs(k) - 1);
    if (k < 0)
      s += "^-1";
  }
  return s;
}

GroupAction::GroupAction(const CubeComplex &g, std::vector<Automorphism> gens)
    : g_(&g), gens_(std::move(gens)) {
  gen_invs_.reserve(gens_.size());
  for (const auto &a : gens_)
    gen_invs_.push_back(a.inverse());
}

std::vector<std::string> GroupAction::generator_names() const {
  std::vector<std::string> out;
  for (const auto &a : gens_)
    out.push_back(a.name);
  return out;
}

Automorphism GroupAction::evaluate(const Word &w) const {
  Automorphism acc = Automorphism::identity(g_->num_vertices(),
                                            word_to_string(w, generator_names()));
  std::string name = acc.name;
  // right-to-left: w = l1 l2 ... lk acts as l1 ∘ l2 ∘ ... ∘ lk
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    int k = *it;
    const Automorphism &step = k > 0 ? gens_[k - 1] : gen_invs_[-k - 1];
    acc = step.after(acc);
  }
  acc.name = name;
  return acc;
}

std::optional<Vertex> GroupAction::apply_word(const Word &w, Vertex v) const {
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    int k = *it;
    const Automorphism &step = k > 0 ? gens_[k - 1] : gen_invs_[-k - 1];
    auto m = step.apply(v);
    if (!m)
      return std::nullopt;
    v = *m;
  }
  return v;
}

std::optional<HalfspaceRef>
GroupAction::image_halfspace(const HalfspaceSystem &hs, const Automorphism &a,
                             HalfspaceRef h) const {
  auto [u, v] = hs.representative(h.plane);
  auto mu = a.apply(u);
  auto mv = a.apply(v);
  if (!mu || !mv || !g_->adjacent(*mu, *mv))
    return std::nullopt;
  int plane = hs.plane_of_edge(*mu, *mv);
  // exactly one endpoint lies on side h.side; its image orients the result
  Vertex probe = hs.contains(h, u) ? *mu : *mv;
  int side = hs.contains({plane, 0}, probe) ? 0 : 1;
  return HalfspaceRef{plane, side};
}

std::optional<HalfspaceRef>
GroupAction::image_halfspace(const HalfspaceSystem &hs, const Word &w,
                             HalfspaceRef h) const {
  auto [u, v] = hs.representative(h.plane);
  auto mu = apply_word(w, u);
  auto mv = apply_word(w, v);
  if (!mu || !mv || !g_->adjacent(*mu, *mv))
    return std::nullopt;
  int plane = hs.plane_of_edge(*mu, *mv);
  Vertex probe = hs.contains(h, u) ? *mu : *mv;
  int side = hs.contains({plane, 0}, probe) ? 0 : 1;
  return HalfspaceRef{plane, side};
}

std::vector<Word> GroupAction::enumerate_words(int max_len) const {
  std::vector<Word> out;
  // an involution generator is its own inverse: emitting its negative
  // letter would enumerate every element twice
  std::vector<bool> invol(num_generators());
  for (int i = 0; i < num_generators(); ++i)
    invol[i] = gens_[i].fwd == gen_invs_[i].fwd;
  std::vector<int> letters;
  for (int i = 1; i <= num_generators(); ++i) {
    letters.push_back(i);
    if (!invol[i - 1])
      letters.push_back(-i);
  }
  std::vector<Word> frontier{{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto &w : frontier)
      for (int l : letters) {
        if (!w.empty() &&
            (w.back() == -l || (l > 0 && invol[l - 1] && w.back() == l)))
          continue; // freely reduce
        Word x = w;
        x.push_back(l);
        next.push_back(x);
      }
    for (const auto &w : next)
      out.push_back(w);
    frontier = std::move(next);
  }
  return out;
}

std::vector<Automorphism> load_autperm(std::istream &in,
                                       const CubeComplex &g) {
  std::vector<Automorphism> out;
  std::string line;
  int lineno = 0;
  bool header = false;
  auto resolve = [&](const std::string &id, int ln) {
    auto v = g.find_vertex(id);
    if (!v)
      throw ParseError("unknown vertex '" + id + "'", ln);
    return *v;
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok))
      continue;
    if (!header) {
      std::string ver;
      if (tok != "autperm" || !(ls >> ver) || ver != "1")
        throw ParseError("expected header 'autperm 1'", lineno);
      header = true;
      continue;
    }
    if (tok == "a") {
      std::string name;
      if (!(ls >> name))
        throw ParseError("a line needs a name", lineno);
      Automorphism a;
      a.name = name;
      a.fwd.assign(g.num_vertices(), -1);
      a.inv.assign(g.num_vertices(), -1);
      out.push_back(std::move(a));
    } else if (tok == "m") {
      if (out.empty())
        throw ParseError("m line before any a line", lineno);
      std::string sv, sg;
      if (!(ls >> sv >> sg))
        throw ParseError("m line needs <v> <gv>", lineno);
      Vertex v = resolve(sv, lineno), gv = resolve(sg, lineno);
      if (out.back().fwd[v] >= 0)
        throw ParseError("vertex '" + sv + "' mapped twice", lineno);
      out.back().fwd[v] = gv;
      if (out.back().inv[gv] >= 0)
        throw ParseError("vertex '" + sg + "' hit twice", lineno);
      out.back().inv[gv] = v;
    } else {
      throw ParseError("unknown record '" + tok + "'", lineno);
    }
  }
  if (!header)
    throw ParseError("missing header 'autperm 1'", 1);
  return out;
}

void save_autperm(const std::vector<Automorphism> &as, const CubeComplex &g,
                  std::ostream &out) {
  out << "autperm 1\n";
  for (const auto &a : as) {
    out << "a " << a.name << "\n";
    for (int v = 0; v < a.size(); ++v)
      if (a.fwd[v] >= 0)
        out << "m " << g.label(v) << " " << g.label(a.fwd[v]) << "\n";
  }
}

} // namespace ccgt
