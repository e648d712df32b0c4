#ifndef CCGT_BALL_HPP
#define CCGT_BALL_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ccgt/action.hpp"
#include "ccgt/graph.hpp"

namespace ccgt {

/// A finite ball of a lazily generated complex together with the
/// restriction of a generating set of global automorphisms. The vertex
/// set is always a full metric ball, so interior vertices see all their
/// neighbors and emptiness certificates stay sound.
struct FamilyBall {
  CubeComplex complex;
  std::vector<Automorphism> generators;
};

/// Cayley graph ball of the free group F_rank (the 2·rank-regular tree),
/// basepoint = identity. Generators act by left multiplication.
FamilyBall free_group_ball(int rank, int radius);

/// Cayley graph ball of Z2 * ... * Z2 (k factors, the k-regular tree).
/// Generators are involutions acting by left multiplication.
FamilyBall free_product_involutions_ball(int k, int radius);

/// Ball of the line of copies of X glued along a diametric pair (v,v*):
/// copy i's v* is copy (i+1)'s v. Holds copies -copies..copies-1, which
/// is exactly the metric ball of radius copies·d(v,v*) around v_0.
struct LineBall {
  CubeComplex complex;
  Automorphism shift; // tau: copy i -> copy i+1, partial at the top
  int copies = 0;     // built copy indices are -copies .. copies-1
  int period = 0;     // d(v, v*)
  /// Ball vertex of point (copy i, x in X); glue points may be named
  /// from either neighboring copy. -1 if outside the ball.
  Vertex vertex_of(int i, Vertex x) const;
  /// Canonical coordinates of a ball vertex: the pair (i, x) with x != v.
  std::pair<int, Vertex> coords(Vertex w) const;

  const CubeComplex *base = nullptr;
  Vertex v = -1, vstar = -1;
  std::vector<std::pair<int, Vertex>> coords_;
  std::map<std::pair<int, Vertex>, Vertex> index_;
};

LineBall line_complex_ball(const CubeComplex &X, Vertex v, Vertex vstar,
                           int copies);

/// Product of two family balls with the diagonal action of paired
/// generators (both must have the same generator count). Declared as a
/// ball of radius min(R1, R2): every product vertex within that distance
/// of the paired basepoints is present.
FamilyBall product_ball(const FamilyBall &A, const FamilyBall &B);

} // namespace ccgt

#endif
