#include "ccgt/pocset.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace ccgt {

void Pocset::close() {
  const int m = npairs_ * 2;
  for (int x = 0; x < m; ++x)
    leq_[x][x] = 1;
  // order-reversing involution: x ≤ y implies y* ≤ x*
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        if (leq_[x][y]) {
          int xs = x ^ 1, ys = y ^ 1;
          if (!leq_[ys][xs]) {
            leq_[ys][xs] = 1;
            changed = true;
          }
        }
    // transitivity
    for (int k = 0; k < m; ++k)
      for (int x = 0; x < m; ++x)
        if (leq_[x][k])
          for (int y = 0; y < m; ++y)
            if (leq_[k][y] && !leq_[x][y]) {
              leq_[x][y] = 1;
              changed = true;
            }
  }
  for (int x = 0; x < m; ++x) {
    if (leq_[x][x ^ 1])
      throw PocsetError("halfspace " + names_[x / 2] +
                        " contained in its own complement");
    for (int y = 0; y < m; ++y)
      if (x != y && leq_[x][y] && leq_[y][x])
        throw PocsetError("distinct halfspaces forced equal: " +
                          names_[x / 2] + ", " + names_[y / 2]);
  }
}

Pocset Pocset::from_complex(const HalfspaceSystem &hs) {
  Pocset p;
  p.npairs_ = hs.count();
  for (int i = 0; i < p.npairs_; ++i)
    p.names_.push_back("h" + std::to_string(i));
  const int m = p.npairs_ * 2;
  p.leq_.assign(m, std::vector<char>(m, 0));
  for (int a = 0; a < p.npairs_; ++a)
    for (int b = 0; b < p.npairs_; ++b)
      for (int sa = 0; sa < 2; ++sa)
        for (int sb = 0; sb < 2; ++sb)
          if (hs.side(a, sa).subset_of(hs.side(b, sb)))
            p.leq_[idx(a, sa)][idx(b, sb)] = 1;
  p.close();
  return p;
}

Pocset Pocset::from_containments(
    int npairs,
    const std::vector<std::tuple<int, int, int, int>> &containments) {
  Pocset p;
  p.npairs_ = npairs;
  for (int i = 0; i < npairs; ++i)
    p.names_.push_back("p" + std::to_string(i));
  const int m = npairs * 2;
  p.leq_.assign(m, std::vector<char>(m, 0));
  for (auto [a, sa, b, sb] : containments) {
    if (a < 0 || a >= npairs || b < 0 || b >= npairs || sa < 0 || sa > 1 ||
        sb < 0 || sb > 1)
      throw PocsetError("containment references unknown pair or side");
    p.leq_[idx(a, sa)][idx(b, sb)] = 1;
  }
  p.close();
  return p;
}

Pocset Pocset::load(std::istream &in) {
  std::string line;
  int lineno = 0;
  bool header = false;
  std::map<std::string, int> ids;
  std::vector<std::string> names;
  std::vector<std::tuple<std::string, int, std::string, int, int>> cons;
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
      if (tok != "pocset" || !(ls >> ver) || ver != "1")
        throw ParseError("expected header 'pocset 1'", lineno);
      header = true;
      continue;
    }
    if (tok == "p") {
      std::string id;
      if (!(ls >> id))
        throw ParseError("p line needs an id", lineno);
      if (ids.count(id))
        throw ParseError("duplicate pair id " + id, lineno);
      ids[id] = static_cast<int>(names.size());
      names.push_back(id);
    } else if (tok == "c") {
      std::string a, b;
      int sa, sb;
      if (!(ls >> a >> sa >> b >> sb))
        throw ParseError("c line needs <idA> <sideA> <idB> <sideB>", lineno);
      cons.push_back({a, sa, b, sb, lineno});
    } else {
      throw ParseError("unknown record '" + tok + "'", lineno);
    }
  }
  if (!header)
    throw ParseError("missing header 'pocset 1'", 1);
  std::vector<std::tuple<int, int, int, int>> resolved;
  for (auto &[a, sa, b, sb, ln] : cons) {
    if (!ids.count(a) || !ids.count(b))
      throw ParseError("containment references unknown pair", ln);
    resolved.push_back({ids[a], sa, ids[b], sb});
  }
  Pocset p = from_containments(static_cast<int>(names.size()), resolved);
  p.names_ = names;
  return p;
}

void Pocset::save(std::ostream &out) const {
  out << "pocset 1\n";
  for (const auto &n : names_)
    out << "p " << n << "\n";
  for (int a = 0; a < npairs_; ++a)
    for (int sa = 0; sa < 2; ++sa)
      for (int b = 0; b < npairs_; ++b)
        for (int sb = 0; sb < 2; ++sb)
          if ((a != b) && leq_[idx(a, sa)][idx(b, sb)])
            out << "c " << names_[a] << " " << sa << " " << names_[b] << " "
                << sb << "\n";
}

std::vector<std::vector<int>> Pocset::ultrafilters() const {
  std::vector<std::vector<int>> out;
  std::vector<int> assign(npairs_, -1);

  // choosing (p,s) forces (q,t) whenever (p,s) ≤ (q,t)
  std::function<bool(int, int)> force = [&](int p, int s) -> bool {
    if (assign[p] == s)
      return true;
    if (assign[p] == 1 - s)
      return false;
    assign[p] = s;
    for (int q = 0; q < npairs_; ++q)
      for (int t = 0; t < 2; ++t)
        if (q != p && leq_[idx(p, s)][idx(q, t)])
          if (!force(q, t))
            return false;
    return true;
  };

  std::function<void(int)> rec = [&](int from) {
    int p = -1;
    for (int i = from; i < npairs_; ++i)
      if (assign[i] < 0) {
        p = i;
        break;
      }
    if (p < 0) {
      out.push_back(assign);
      return;
    }
    for (int s = 0; s < 2; ++s) {
      std::vector<int> saved = assign;
      if (force(p, s))
        rec(p + 1);
      assign = std::move(saved);
    }
  };
  rec(0);
  return out;
}

CubeComplex Pocset::dual_complex() const {
  auto ufs = ultrafilters();
  std::vector<std::string> keys;
  keys.reserve(ufs.size());
  for (const auto &u : ufs) {
    std::string k;
    for (int s : u)
      k += char('0' + s);
    keys.push_back(k);
  }
  std::vector<int> order(ufs.size());
  for (size_t i = 0; i < order.size(); ++i)
    order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return keys[a] < keys[b]; });
  CubeComplex g;
  for (int i : order)
    g.add_vertex("u" + keys[i]);
  for (size_t i = 0; i < order.size(); ++i)
    for (size_t j = i + 1; j < order.size(); ++j) {
      const auto &a = ufs[order[i]];
      const auto &b = ufs[order[j]];
      int diff = 0;
      for (int p = 0; p < npairs_ && diff < 2; ++p)
        diff += a[p] != b[p];
      if (diff == 1)
        g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  return g;
}

} // namespace ccgt
