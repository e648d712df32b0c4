#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "ccgt/action.hpp"
#include "ccgt/amplify.hpp"
#include "ccgt/ball.hpp"
#include "ccgt/skewer.hpp"
#include "corpus.hpp"

using namespace ccgt;
using namespace ccgt::tests;

namespace {

/// 90-degree rotation of the square I^2 (labels 00,01,10,11 in order).
Automorphism square_rotation(const CubeComplex &sq) {
  Automorphism a;
  a.name = "rot";
  a.fwd = {1, 3, 0, 2}; // 00->01->11->10->00
  a.inv = {2, 0, 3, 1};
  (void)sq;
  return a;
}

} // namespace

TEST_CASE("automorphism check accepts symmetries and rejects non-maps") {
  auto sq = make_hypercube(2);
  CHECK(check_automorphism(sq, square_rotation(sq)) == Verdict::Yes);
  CHECK(check_automorphism(sq, Automorphism::identity(4)) == Verdict::Yes);
  Automorphism bad;
  bad.fwd = {1, 1, 0, 2}; // not injective
  bad.inv = {2, 0, 3, 1};
  CHECK(check_automorphism(sq, bad) == Verdict::No);
  auto p3 = make_path(3);
  Automorphism noedge;
  noedge.fwd = {1, 0, 2}; // sends the edge 1-2 to the non-edge 0-2
  noedge.inv = {1, 0, 2};
  CHECK(check_automorphism(p3, noedge) == Verdict::No);
}

TEST_CASE("autperm format roundtrip") {
  auto sq = make_hypercube(2);
  std::vector<Automorphism> as{square_rotation(sq)};
  std::stringstream s;
  save_autperm(as, sq, s);
  auto back = load_autperm(s, sq);
  REQUIRE(back.size() == 1);
  CHECK(back[0].fwd == as[0].fwd);
}

TEST_CASE("word evaluation is a homomorphism on ball vertices") {
  auto ball = free_group_ball(2, 6);
  GroupAction act(ball.complex, ball.generators);
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> letter(0, 3);
  auto rand_word = [&](int len) {
    Word w;
    for (int i = 0; i < len; ++i) {
      int l = letter(rng);
      w.push_back(l < 2 ? l + 1 : -(l - 1));
    }
    return w;
  };
  for (int trial = 0; trial < 200; ++trial) {
    Word u = rand_word(2), v = rand_word(2), uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    for (Vertex x = 0; x < ball.complex.num_vertices(); x += 37) {
      auto direct = act.apply_word(uv, x);
      auto inner = act.apply_word(v, x);
      auto composed = inner ? act.apply_word(u, *inner) : std::nullopt;
      if (direct && composed) CHECK(*direct == *composed);
    }
  }
}

TEST_CASE("enumerate_words is reduced, complete, deterministic") {
  auto ball = free_group_ball(2, 4);
  GroupAction act(ball.complex, ball.generators);
  auto words = act.enumerate_words(3);
  // free group: 4 + 12 + 36 reduced words
  CHECK(words.size() == 52);
  CHECK(words == act.enumerate_words(3));
  for (const auto &w : words)
    for (size_t i = 1; i < w.size(); ++i) CHECK(w[i] != -w[i - 1]);

  auto tri = free_product_involutions_ball(3, 4);
  GroupAction ta(tri.complex, tri.generators);
  auto tw = ta.enumerate_words(3);
  // involutions: no inverse letters, no repeats: 3 + 6 + 12
  CHECK(tw.size() == 21);
  for (const auto &w : tw) {
    for (int l : w) CHECK(l > 0);
    for (size_t i = 1; i < w.size(); ++i) CHECK(w[i] != w[i - 1]);
  }
}

TEST_CASE("hyperplane images are hyperplanes with matching sides") {
  auto sq = make_hypercube(2);
  HalfspaceSystem hs(sq);
  GroupAction act(sq, {square_rotation(sq)});
  for (int p = 0; p < hs.count(); ++p)
    for (int s = 0; s < 2; ++s) {
      auto img = act.image_halfspace(hs, act.generator(0), {p, s});
      REQUIRE(img.has_value());
      // the image side must be exactly the pointwise image
      for (Vertex v = 0; v < 4; ++v)
        CHECK(hs.contains(*img, *act.generator(0).apply(v)) ==
              hs.contains({p, s}, v));
    }
}

TEST_CASE("strong separation is action-invariant on the free ball") {
  auto ball = free_group_ball(2, 6);
  GroupAction act(ball.complex, ball.generators);
  HalfspaceSystem hs(ball.complex);
  // plane of the edge 1 -- a and its translate by a: strongly separated
  Vertex base = *ball.complex.basepoint();
  Vertex va = *act.apply_word({1}, base);
  Vertex vaa = *act.apply_word({1, 1}, base);
  Vertex vaaa = *act.apply_word({1, 1, 1}, base);
  int p = hs.plane_of_edge(base, va);
  int q = hs.plane_of_edge(vaa, vaaa); // two apart: a third plane separates
  REQUIRE(hs.strongly_separated(p, q) == Verdict::Yes);
  for (const Word &g : {Word{2}, Word{-1}, Word{2, 1}}) {
    auto ip = act.image_halfspace(hs, g, {p, 0});
    auto iq = act.image_halfspace(hs, g, {q, 0});
    REQUIRE(ip.has_value());
    REQUIRE(iq.has_value());
    CHECK(hs.strongly_separated(ip->plane, iq->plane) == Verdict::Yes);
  }
}

TEST_CASE("ball builders: sizes, depths, basepoints") {
  auto f2 = free_group_ball(2, 5);
  // 1 + 4 * (3^5 - 1) / 2
  CHECK(f2.complex.num_vertices() == 485);
  CHECK(f2.complex.is_ball());
  CHECK(f2.complex.ball_radius() == 5);
  CHECK(f2.generators.size() == 2);

  auto t3 = free_product_involutions_ball(3, 5);
  CHECK(t3.complex.num_vertices() == 1 + 3 * (1 + 2 + 4 + 8 + 16));
  CHECK(t3.generators.size() == 3);
  GroupAction act(t3.complex, t3.generators);
  // involution: applying a generator twice returns
  Vertex b = *t3.complex.basepoint();
  CHECK(*act.apply_word({1, 1}, b) == b);
}

TEST_CASE("line ball coordinates and shift") {
  auto sq = make_hypercube(2);
  auto lb = line_complex_ball(sq, 0, 3, 3);
  CHECK(lb.period == 2);
  CHECK(lb.complex.is_ball());
  Vertex v00 = lb.vertex_of(0, 1);
  REQUIRE(v00 >= 0);
  auto sh = lb.shift.apply(v00);
  REQUIRE(sh.has_value());
  CHECK(lb.coords(*sh) == std::pair{1, Vertex(1)});
}

TEST_CASE("flip detection on the 3-regular tree") {
  auto t3 = free_product_involutions_ball(3, 8);
  GroupAction act(t3.complex, t3.generators);
  HalfspaceSystem hs(t3.complex);
  Vertex b = *t3.complex.basepoint();
  Vertex va = *act.apply_word({1}, b);
  int p = hs.plane_of_edge(b, va);
  HalfspaceRef h{p, hs.contains({p, 0}, b) ? 0 : 1}; // side of basepoint
  // b itself maps subtree(a) into subtree(b...), not a flip of h
  // (h = basepoint side); a flipper of h must exist at length 3: a b a
  auto w = find_flipper(act, hs, h, 4);
  REQUIRE(w.has_value());
  CHECK(flips(act, hs, act.evaluate(*w), h) == Verdict::Yes);
  // its complement (the deep subtree) needs its own flipper
  auto w2 = find_flipper(act, hs, h.complement(), 4);
  REQUIRE(w2.has_value());
  CHECK(flips(act, hs, act.evaluate(*w2), h.complement()) == Verdict::Yes);
}

TEST_CASE("double skewer and poles on the free group") {
  auto f2 = free_group_ball(2, 8);
  GroupAction act(f2.complex, f2.generators);
  HalfspaceSystem hs(f2.complex);
  Vertex b = *f2.complex.basepoint();
  Vertex va = *act.apply_word({1}, b);
  Vertex vaa = *act.apply_word({1, 1}, b);
  Vertex vaaa = *act.apply_word({1, 1, 1}, b);
  int p = hs.plane_of_edge(b, va);
  int q = hs.plane_of_edge(vaa, vaaa);
  // halfspaces pointing away from the basepoint, two planes apart so
  // that the pair is strongly separated (a tree never separates
  // adjacent planes)
  HalfspaceRef hp{p, hs.contains({p, 0}, b) ? 1 : 0};
  HalfspaceRef hq{q, hs.contains({q, 0}, b) ? 1 : 0};
  auto cert = double_skewers(act, hs, {1, 1, 1}, hq, hp, true);
  CHECK(cert.status == Verdict::Yes);
  CHECK(cert.strong);

  auto [pos, neg] = poles_prefix(act, hs, {1, 1}, hp, 3);
  CHECK(pos.verified_steps >= 2);
  CHECK(neg.verified_steps >= 2);
  CHECK(pos.strongly_separated);
  auto dj = chain_disjointness(hs, pos, neg, 3);
  CHECK(dj.status == Verdict::Yes);
  CHECK(dj.disjoint_at <= 1);
}

TEST_CASE("chains into the same end intersect forever") {
  auto f2 = free_group_ball(2, 8);
  GroupAction act(f2.complex, f2.generators);
  HalfspaceSystem hs(f2.complex);
  Vertex b = *f2.complex.basepoint();
  Vertex va = *act.apply_word({1}, b);
  int p = hs.plane_of_edge(b, va);
  HalfspaceRef hp{p, hs.contains({p, 0}, b) ? 1 : 0};
  auto [pos, _] = poles_prefix(act, hs, {1}, hp, 3);
  auto dj = chain_disjointness(hs, pos, pos, 3);
  CHECK(dj.status == Verdict::No);
}

TEST_CASE("amplification grows a facing family on the 3-regular tree") {
  // radius 14: the deepest produced pair sits at depth ~7 and the
  // pairwise emptiness certificates need gap(a) + gap(b) <= radius
  auto t3 = free_product_involutions_ball(3, 14);
  GroupAction act(t3.complex, t3.generators);
  HalfspaceSystem hs(t3.complex);
  Vertex base = *t3.complex.basepoint();
  auto plane_away = [&](const Word &w) {
    Vertex u = *act.apply_word(w, base);
    Word shorter(w.begin(), w.end() - 1);
    Vertex prev = *act.apply_word(shorter, base);
    int p = hs.plane_of_edge(prev, u);
    return HalfspaceRef{p, hs.contains({p, 0}, base) ? 1 : 0};
  };
  HalfspaceRef a = plane_away({1, 2});
  HalfspaceRef bH = plane_away({2, 1});
  HalfspaceRef c = plane_away({3});
  REQUIRE(hs.facing_tuple({a, bH, c}));

  for (int n : {2, 4}) {
    auto fam = amplify_facing(act, hs, a, bH, c, n, 8);
    CHECK(fam.complete);
    REQUIRE(static_cast<int>(fam.pairs.size()) == n);
    CHECK(fam.pairs[0].first == a);
    CHECK(fam.pairs[0].second == bH);
    auto rep = verify_family(hs, fam);
    CHECK(rep.all_green);
    CHECK(rep.inconclusive_entries == 0);
    // oracle re-check: all 2n sides pairwise disjoint as vertex sets
    std::vector<HalfspaceRef> flat;
    for (auto [x, y] : fam.pairs) {
      flat.push_back(x);
      flat.push_back(y);
    }
    for (size_t i = 0; i < flat.size(); ++i)
      for (size_t j = i + 1; j < flat.size(); ++j)
        CHECK(!hs.side(flat[i]).intersects(hs.side(flat[j])));
  }
}

TEST_CASE("amplification reports a partial family when search is capped") {
  auto t3 = free_product_involutions_ball(3, 10);
  GroupAction act(t3.complex, t3.generators);
  HalfspaceSystem hs(t3.complex);
  Vertex base = *t3.complex.basepoint();
  Vertex va = *act.apply_word({1, 2}, base);
  Vertex vb = *act.apply_word({2, 1}, base);
  Vertex vc = *act.apply_word({3}, base);
  int pa = hs.plane_of_edge(*act.apply_word({1}, base), va);
  int pb = hs.plane_of_edge(*act.apply_word({2}, base), vb);
  int pc = hs.plane_of_edge(base, vc);
  HalfspaceRef a{pa, hs.contains({pa, 0}, base) ? 1 : 0};
  HalfspaceRef b{pb, hs.contains({pb, 0}, base) ? 1 : 0};
  HalfspaceRef c{pc, hs.contains({pc, 0}, base) ? 1 : 0};
  // flipping c* needs a word of length 3; cap below that
  auto fam = amplify_facing(act, hs, a, b, c, 3, 2);
  CHECK(!fam.complete);
  CHECK(fam.failure_index == 2);
  CHECK(fam.pairs.size() == 1);
}
