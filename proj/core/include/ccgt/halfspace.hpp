#ifndef CCGT_HALFSPACE_HPP
#define CCGT_HALFSPACE_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ccgt/bitset.hpp"
#include "ccgt/graph.hpp"

namespace ccgt {

/// One side of a hyperplane.
struct HalfspaceRef {
  int plane = -1;
  int side = 0; // 0 or 1; side 0 holds the lexicographically least label
  HalfspaceRef() = default;
  HalfspaceRef(int p, int s) : plane(p), side(s) {}
  HalfspaceRef complement() const { return {plane, 1 - side}; }
  bool operator==(const HalfspaceRef &o) const {
    return plane == o.plane && side == o.side;
  }
  bool operator<(const HalfspaceRef &o) const {
    return plane != o.plane ? plane < o.plane : side < o.side;
  }
};

enum class BaseRel { Transverse, Nested, Facing };

/// Relation of a hyperplane pair, phrased for the side-0 halfspaces.
struct PairRelation {
  BaseRel base = BaseRel::Transverse;
  /// For non-transverse pairs, the empty quadrant (s1,s2):
  /// side s1 of plane 1 is disjoint from side s2 of plane 2.
  std::array<int, 2> empty_quadrant{-1, -1};
  bool separated = false;
  bool strongly_separated = false;
  /// Inconclusive when a ball was exhausted before certification.
  Verdict conclusive = Verdict::Yes;
};

struct RepresentationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Hyperplanes of a complex: the square-relation classes of its edges,
/// with lazily materialized halfspace vertex sets.
class HalfspaceSystem {
public:
  explicit HalfspaceSystem(const CubeComplex &g);

  const CubeComplex &complex() const { return *g_; }
  int count() const { return nplanes_; }
  int plane_of_edge(int edge_id) const { return edge_class_[edge_id]; }
  int plane_of_edge(Vertex a, Vertex b) const {
    return edge_class_[g_->edge_index(a, b)];
  }
  const std::vector<int> &edges_of_plane(int plane) const {
    return class_edges_[plane];
  }
  /// Representative edge (the first edge of the class).
  std::pair<Vertex, Vertex> representative(int plane) const;

  /// Vertex set of one side. Throws RepresentationError if removing the
  /// class does not split the complex into exactly two components.
  const DynBitset &side(int plane, int s) const;
  const DynBitset &side(HalfspaceRef h) const { return side(h.plane, h.side); }
  bool contains(HalfspaceRef h, Vertex v) const { return side(h).test(v); }

  /// Carrier vertices: all endpoints of the class's edges.
  const std::vector<Vertex> &carrier(int plane) const;

  /// Quadrant h1^{s1} ∩ h2^{s2} emptiness, certified on balls.
  Verdict quadrant_empty(HalfspaceRef a, HalfspaceRef b) const;
  std::optional<Vertex> quadrant_witness(HalfspaceRef a, HalfspaceRef b) const;

  /// a ⊆ b at vertex level; Yes/No certified, else Inconclusive.
  Verdict contained_in(HalfspaceRef a, HalfspaceRef b) const;
  /// a ⊊ b: containment plus a witness vertex of b outside a.
  Verdict strictly_contained_in(HalfspaceRef a, HalfspaceRef b) const;
  Verdict disjoint(HalfspaceRef a, HalfspaceRef b) const {
    return quadrant_empty(a, b);
  }

  /// Transversality by square witness (exact, local).
  bool transverse(int p1, int p2) const;

  PairRelation classify(int p1, int p2) const;

  /// Both hyperplanes lie in complementary halfspaces of some third.
  Verdict separated(int p1, int p2) const;
  Verdict strongly_separated(int p1, int p2) const;

  bool facing_tuple(const std::vector<HalfspaceRef> &hs) const;

  /// All halfspaces containing v; checks Choice + Consistency.
  std::vector<HalfspaceRef> vertex_ultrafilter(Vertex v) const;

  /// Planes with an edge incident to a vertex of the carrier of p.
  std::vector<int> planes_touching_carrier(int p) const;

private:
  void materialize(int plane) const;
  /// Smallest distance from a carrier vertex of `from`'s plane lying in
  /// `from` to any ball vertex in `target`, plus that vertex's depth.
  std::optional<int> empty_certificate_budget(HalfspaceRef a,
                                              HalfspaceRef b) const;
  /// Depth of the basepoint's gate onto the halfspace (0 if it contains
  /// the basepoint).
  int basepoint_gap(HalfspaceRef h) const;

  const CubeComplex *g_;
  int nplanes_ = 0;
  std::vector<int> edge_class_;
  std::vector<std::vector<int>> class_edges_;
  mutable std::map<int, std::array<DynBitset, 2>> sides_;
  mutable std::map<int, std::vector<Vertex>> carriers_;
  mutable Vertex least_ = -1; // lexicographically least label, cached
};

} // namespace ccgt

#endif
