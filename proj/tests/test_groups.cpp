#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "ccgt/girth.hpp"
#include "ccgt/perm.hpp"
#include "ccgt/wreath.hpp"
#include "corpus.hpp"

using namespace ccgt;
using namespace ccgt::tests;

namespace {

/// Brute-force girth of the simple undirected Cayley graph: depth-first
/// enumeration of simple cycles through the identity, up to length 12.
/// Returns -1 when acyclic within that bound.
int oracle_girth(const FiniteGroupRealization &g,
                 const std::vector<int> &gens) {
  int n = g.order();
  // undirected neighbor sets, deduplicated (simple graph)
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> nb;
    for (int s : gens) {
      nb.push_back(g.mul(s, v));
      nb.push_back(g.mul(g.inv(s), v));
    }
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    nb.erase(std::remove(nb.begin(), nb.end(), v), nb.end());
    adj[v] = nb;
  }
  int best = 13;
  std::vector<char> on_path(n, 0);
  std::vector<int> path{g.identity()};
  on_path[g.identity()] = 1;
  auto dfs = [&](auto &&self, int v) -> void {
    if (static_cast<int>(path.size()) >= best) return;
    for (int w : adj[v]) {
      if (w == g.identity() && path.size() >= 3) {
        best = std::min(best, static_cast<int>(path.size()));
        continue;
      }
      if (on_path[w]) continue;
      on_path[w] = 1;
      path.push_back(w);
      self(self, w);
      path.pop_back();
      on_path[w] = 0;
    }
  };
  dfs(dfs, g.identity());
  return best == 13 ? -1 : best;
}

} // namespace

TEST_CASE("permutation arithmetic") {
  Perm a{1, 2, 0}, b{1, 0, 2};
  CHECK(perm_mul(a, perm_inv(a)) == perm_identity(3));
  CHECK(perm_mul(a, b) == Perm{2, 1, 0});
  CHECK(perm_cycles(a) == "(0 1 2)");
  CHECK(is_perm(a));
  CHECK(!is_perm(Perm{0, 0, 1}));
}

TEST_CASE("built-in group orders") {
  CHECK(cyclic_group(7).order() == 7);
  CHECK(dihedral_group(5).order() == 10);
  CHECK(symmetric_group(4).order() == 24);
  CHECK(alternating_group(4).order() == 12);
  CHECK(quaternion_group().order() == 8);
  CHECK(elementary_abelian_2(3).order() == 8);
}

TEST_CASE("permgrp format roundtrip") {
  auto g = dihedral_group(4);
  std::stringstream s;
  save_permgrp(g, s);
  auto h = load_permgrp(s);
  CHECK(h.order() == g.order());
  CHECK(h.degree() == g.degree());
}

TEST_CASE("girth spot values") {
  auto z5 = cyclic_group(5);
  auto r5 = girth_cayley(z5, {z5.generator_element(0)});
  CHECK(r5.girth == 5);
  CHECK(r5.witness.size() == 5);

  auto v4 = elementary_abelian_2(2);
  auto rv = girth_cayley(
      v4, {v4.generator_element(0), v4.generator_element(1)});
  CHECK(rv.girth == 4);
  CHECK(rv.involution_note);

  auto z2 = cyclic_group(2);
  auto r2 = girth_cayley(z2, {z2.generator_element(0)});
  CHECK(r2.girth == -1); // a single involution: one edge, no cycle
}

TEST_CASE("non-generating sets are reported, not girthed") {
  auto s4 = symmetric_group(4);
  // a transposition alone generates a subgroup of order 2
  Perm t{1, 0, 2, 3};
  auto r = girth_cayley(s4, {s4.element_index(t)});
  CHECK(!r.generated);
  CHECK(r.subgroup_order == 2);
}

TEST_CASE("free group ball girth is a certified lower bound") {
  auto r = girth_ball(free_group_ball(2, 8));
  CHECK(r.infinite_within);
  CHECK(r.girth == 17); // 2 * 8 + 1
}

TEST_CASE("girth matches the brute-force cycle oracle on sampled sets") {
  // exhaustive comparison lives in the acceptance gate; here a spread
  // of spot checks across the group table
  std::vector<FiniteGroupRealization> groups;
  groups.push_back(cyclic_group(12));
  groups.push_back(dihedral_group(6));
  groups.push_back(symmetric_group(3));
  groups.push_back(alternating_group(4));
  groups.push_back(quaternion_group());
  groups.push_back(elementary_abelian_2(3));
  for (const auto &g : groups) {
    int n = g.order();
    for (int i = 1; i < n; ++i)
      for (int j = i; j < n; ++j) {
        std::vector<int> gens = i == j ? std::vector<int>{i}
                                       : std::vector<int>{i, j};
        auto r = girth_cayley(g, gens);
        if (!r.generated) continue;
        // the oracle caps its cycle search at length 12
        int og = oracle_girth(g, gens);
        if (og == -1)
          CHECK((r.girth == -1 || r.girth > 12));
        else
          CHECK(r.girth == og);
      }
  }
}

TEST_CASE("girth supremum over bounded generating sets") {
  auto z5 = cyclic_group(5);
  auto sup = girth_sup_bounded(z5, 1);
  CHECK(sup.girth == 5);
  CHECK(sup.sets_examined >= 1);
  // adding generators can only shrink cycles; sup over larger sets is
  // still attained by a single generator for Z5
  CHECK(girth_sup_bounded(z5, 2).girth == 5);
}

TEST_CASE("law checking") {
  auto v4 = elementary_abelian_2(2);
  // x^2 = 1 holds in (Z2)^2
  auto r = check_law(v4, {1, 1}, 1);
  CHECK(r.holds);
  CHECK(r.exhaustive);
  // commutator law holds in abelian groups, fails in S3
  std::vector<int> comm{1, 2, -1, -2};
  CHECK(check_law(cyclic_group(6), comm, 2).holds);
  auto s3 = symmetric_group(3);
  auto rf = check_law(s3, comm, 2);
  CHECK(!rf.holds);
  CHECK(rf.counterexample.size() == 2);
}

TEST_CASE("derived series") {
  auto s4 = derived_series(symmetric_group(4));
  CHECK(s4.orders == std::vector<int>{24, 12, 4, 1});
  CHECK(s4.solvable);
  auto s5 = derived_series(symmetric_group(5));
  CHECK(s5.orders.front() == 120);
  CHECK(s5.orders.back() == 60); // stabilizes at A5
  CHECK(!s5.solvable);
  CHECK(derived_series(cyclic_group(9)).solvable);
}

TEST_CASE("diametric pairs") {
  auto c3 = make_hypercube(3);
  auto p = find_diametric_pair(c3);
  REQUIRE(p.has_value());
  CHECK(c3.distance(p->v, p->vstar) == 3);
  CHECK(p->geodesic.size() == 4);
  // a star has 2 leaves at distance 2 but 5 hyperplanes: no diametric pair
  CHECK(!find_diametric_pair(make_star(5)).has_value());
}

TEST_CASE("pair-fixing automorphism groups of hypercubes are symmetric "
          "groups acting faithfully on coordinates") {
  for (int n = 2; n <= 4; ++n) {
    auto cube = make_hypercube(n);
    auto p = find_diametric_pair(cube);
    REQUIRE(p.has_value());
    auto g = aut_fixing_pair(cube, *p);
    int fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(g.order() == fact);
    auto ca = coordinate_action(cube, *p);
    CHECK(ca.nplanes == n);
    CHECK(ca.faithful);
    CHECK(ca.image_order == fact);
  }
}

TEST_CASE("wreath group arithmetic and action") {
  auto sq = make_hypercube(2);
  auto p = find_diametric_pair(sq);
  WreathGroup w(sq, *p);
  auto t = w.shift_element(1);
  CHECK(w.multiply(t, w.inverse(t)).is_identity());
  CHECK(w.power(t, 3) == w.shift_element(3));
  // conjugating a component by the shift moves its copy index
  auto c0 = w.component(0, 1);
  auto moved = w.multiply(w.multiply(t, c0), w.inverse(t));
  CHECK(moved.shift == 0);
  CHECK(moved.comps.size() == 1);
  CHECK(moved.comps.count(0) == 0);
  // action: the shift translates coordinates
  WreathPoint pt{0, p->vstar};
  auto q = w.act(t, pt);
  CHECK(q.copy == 1);
}

TEST_CASE("wreath law on the square") {
  auto sq = make_hypercube(2);
  auto p = find_diametric_pair(sq);
  auto rep = verify_wreath_law(sq, *p, 300, 3, 42);
  CHECK(rep.aut_order == 8);
  CHECK(rep.fixing_order == 2);
  CHECK(rep.copy_preserving);
  CHECK(rep.law_holds);
  CHECK(rep.pairs_tested >= 300);
  CHECK(rep.observed_exponent <= 8);
}

TEST_CASE("nonsolvability evidence needs n >= 5") {
  auto c5 = make_hypercube(5);
  auto p5 = find_diametric_pair(c5);
  auto n5 = nonsolvability_evidence(c5, *p5);
  CHECK(n5.group_order == 120);
  CHECK(!n5.solvable);
  auto c3 = make_hypercube(3);
  auto p3 = find_diametric_pair(c3);
  CHECK(nonsolvability_evidence(c3, *p3).solvable);
}
