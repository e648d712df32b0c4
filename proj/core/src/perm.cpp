#include "ccgt/perm.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ccgt/graph.hpp" // ParseError

namespace ccgt {

Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_mul(const Perm &a, const Perm &b) {
  Perm p(b.size());
  for (size_t i = 0; i < b.size(); ++i)
    p[i] = a[b[i]];
  return p;
}

Perm perm_inv(const Perm &a) {
  Perm p(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    p[a[i]] = static_cast<int>(i);
  return p;
}

bool is_perm(const Perm &a) {
  std::vector<char> seen(a.size(), 0);
  for (int x : a) {
    if (x < 0 || x >= static_cast<int>(a.size()) || seen[x])
      return false;
    seen[x] = 1;
  }
  return true;
}

std::string perm_cycles(const Perm &a) {
  std::string s;
  std::vector<char> done(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (done[i] || a[i] == static_cast<int>(i))
      continue;
    s += "(";
    size_t j = i;
    bool first = true;
    while (!done[j]) {
      if (!first)
        s += " ";
      s += std::to_string(j);
      done[j] = 1;
      first = false;
      j = a[j];
    }
    s += ")";
  }
  return s.empty() ? "()" : s;
}

FiniteGroupRealization::FiniteGroupRealization(int degree,
                                               std::vector<Perm> gens,
                                               std::vector<std::string> names)
    : degree_(degree), gens_(std::move(gens)), names_(std::move(names)) {
  for (const auto &g : gens_)
    if (static_cast<int>(g.size()) != degree_ || !is_perm(g))
      throw std::invalid_argument("generator is not a permutation of the domain");
  std::vector<Perm> step = gens_;
  for (const auto &g : gens_)
    step.push_back(perm_inv(g));
  elements_.push_back(perm_identity(degree_));
  index_[elements_[0]] = 0;
  for (size_t head = 0; head < elements_.size(); ++head) {
    Perm cur = elements_[head];
    for (const auto &s : step) {
      Perm nxt = perm_mul(cur, s);
      if (!index_.count(nxt)) {
        index_[nxt] = static_cast<int>(elements_.size());
        elements_.push_back(std::move(nxt));
      }
    }
  }
  for (const auto &g : gens_)
    gen_elems_.push_back(index_.at(g));
}

std::vector<int> FiniteGroupRealization::closure(
    const std::vector<int> &elems) const {
  std::vector<int> out{identity()};
  std::vector<char> seen(order(), 0);
  seen[identity()] = 1;
  std::vector<int> step;
  for (int e : elems) {
    step.push_back(e);
    step.push_back(inv(e));
  }
  for (size_t head = 0; head < out.size(); ++head)
    for (int s : step) {
      int n = mul(out[head], s);
      if (!seen[n]) {
        seen[n] = 1;
        out.push_back(n);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

FiniteGroupRealization cyclic_group(int n) {
  Perm r(n);
  for (int i = 0; i < n; ++i)
    r[i] = (i + 1) % n;
  return {n, {r}, {"r"}};
}

FiniteGroupRealization dihedral_group(int n) {
  Perm r(n), s(n);
  for (int i = 0; i < n; ++i) {
    r[i] = (i + 1) % n;
    s[i] = (n - i) % n;
  }
  return {n, {r, s}, {"r", "s"}};
}

FiniteGroupRealization symmetric_group(int n) {
  Perm t = perm_identity(n), c(n);
  if (n >= 2)
    std::swap(t[0], t[1]);
  for (int i = 0; i < n; ++i)
    c[i] = (i + 1) % n;
  if (n <= 2)
    return {std::max(n, 1), {t}, {"t"}};
  return {n, {t, c}, {"t", "c"}};
}

FiniteGroupRealization alternating_group(int n) {
  // generated by the 3-cycle (0 1 2) and, for n > 3, an even big cycle
  Perm c3 = perm_identity(n);
  c3[0] = 1;
  c3[1] = 2;
  c3[2] = 0;
  if (n <= 3)
    return {n, {c3}, {"c3"}};
  Perm big(n);
  if (n % 2 == 1) {
    for (int i = 0; i < n; ++i)
      big[i] = (i + 1) % n; // n-cycle, even for odd n
  } else {
    big = perm_identity(n); // (1 2 ... n-1), an (n-1)-cycle, even
    for (int i = 1; i < n; ++i)
      big[i] = i % (n - 1) + 1;
  }
  return {n, {c3, big}, {"c3", "c"}};
}

FiniteGroupRealization quaternion_group() {
  // right regular representation on {1,-1,i,-i,j,-j,k,-k} = 0..7
  // order: 1,-1,i,-i,j,-j,k,-k
  auto mul = [](int a, int b) {
    // encode units as (axis, sign): 0->(0,+),1->(0,-),2->(1,+),...
    int ax = a / 2, bx = b / 2;
    int as = a % 2 ? -1 : 1, bs = b % 2 ? -1 : 1;
    static const int table[4][4] = {// axes: 1,i,j,k ; value axis
                                    {0, 1, 2, 3},
                                    {1, 0, 3, 2},
                                    {2, 3, 0, 1},
                                    {3, 2, 1, 0}};
    static const int sign[4][4] = {{1, 1, 1, 1},
                                   {1, -1, 1, -1},
                                   {1, -1, -1, 1},
                                   {1, 1, -1, -1}};
    int axis = table[ax][bx];
    int s = as * bs * sign[ax][bx];
    return axis * 2 + (s < 0 ? 1 : 0);
  };
  Perm i(8), j(8);
  for (int x = 0; x < 8; ++x) {
    i[x] = mul(2, x);
    j[x] = mul(4, x);
  }
  return {8, {i, j}, {"i", "j"}};
}

FiniteGroupRealization elementary_abelian_2(int k) {
  // acts on k disjoint transposition pairs
  std::vector<Perm> gens;
  std::vector<std::string> names;
  for (int g = 0; g < k; ++g) {
    Perm p = perm_identity(2 * k);
    std::swap(p[2 * g], p[2 * g + 1]);
    gens.push_back(p);
    names.push_back("e" + std::to_string(g));
  }
  return {2 * k, gens, names};
}

FiniteGroupRealization load_permgrp(std::istream &in) {
  std::string line;
  int lineno = 0;
  bool header = false;
  int deg = -1;
  std::vector<Perm> gens;
  std::vector<std::string> names;
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
      if (tok != "permgrp" || !(ls >> ver) || ver != "1")
        throw ParseError("expected header 'permgrp 1'", lineno);
      header = true;
      continue;
    }
    if (tok == "deg") {
      if (!(ls >> deg) || deg <= 0)
        throw ParseError("deg needs a positive integer", lineno);
    } else if (tok == "g") {
      if (deg < 0)
        throw ParseError("g line before deg", lineno);
      std::string name;
      if (!(ls >> name))
        throw ParseError("g line needs a name", lineno);
      Perm p;
      int x;
      while (ls >> x)
        p.push_back(x);
      if (static_cast<int>(p.size()) != deg || !is_perm(p))
        throw ParseError("generator '" + name + "' is not a permutation of 0.." +
                             std::to_string(deg - 1),
                         lineno);
      gens.push_back(std::move(p));
      names.push_back(name);
    } else {
      throw ParseError("unknown record '" + tok + "'", lineno);
    }
  }
  if (!header)
    throw ParseError("missing header 'permgrp 1'", 1);
  if (deg < 0)
    throw ParseError("missing deg line", lineno ? lineno : 1);
  return {deg, gens, names};
}

void save_permgrp(const FiniteGroupRealization &g, std::ostream &out) {
  out << "permgrp 1\n";
  out << "deg " << g.degree() << "\n";
  for (int i = 0; i < g.num_generators(); ++i) {
    out << "g " << g.generator_name(i);
    for (int x : g.element(g.generator_element(i)))
      out << " " << x;
    out << "\n";
  }
}

} // namespace ccgt
