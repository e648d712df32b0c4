#ifndef CCGT_WREATH_HPP
#define CCGT_WREATH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccgt/girth.hpp"
#include "ccgt/graph.hpp"
#include "ccgt/perm.hpp"

namespace ccgt {

/// A pair of vertices at distance = number of hyperplanes, i.e. a
/// geodesic between them crosses every hyperplane exactly once.
struct DiametricPair {
  Vertex v = -1;
  Vertex vstar = -1;
  std::vector<Vertex> geodesic; // from v to vstar
};

std::optional<DiametricPair> find_diametric_pair(const CubeComplex &X);

/// Finite window of the line of copies of X with copy i's v* glued to
/// copy (i+1)'s v. Canonical point coordinates are (i, x) with x != v.
struct LineWindow {
  CubeComplex complex;
  int lo = 0, hi = -1; // copy indices, inclusive
  const CubeComplex *base = nullptr;
  Vertex v = -1, vstar = -1;

  Vertex vertex_of(int i, Vertex x) const; // -1 when outside the window
  std::pair<int, Vertex> coords(Vertex w) const;

  std::vector<std::pair<int, Vertex>> coords_;
  std::map<std::pair<int, Vertex>, Vertex> index_;
};

/// Builds ncopies consecutive copies, centered on copy 0. Throws
/// ValidationError when the pair is not diametric.
LineWindow build_line_complex(const CubeComplex &X, const DiametricPair &p,
                              int ncopies);

/// All automorphisms of X as permutations of V(X); when fix is set,
/// only those fixing both named vertices.
std::vector<Perm>
all_automorphisms(const CubeComplex &X,
                  std::optional<std::pair<Vertex, Vertex>> fix = {});

/// The group of automorphisms of X fixing both vertices of the pair.
FiniteGroupRealization aut_fixing_pair(const CubeComplex &X,
                                       const DiametricPair &p);

/// Point of the line complex in canonical coordinates (x != v, so the
/// glue vertex between copies i and i+1 is written (i, v*)).
struct WreathPoint {
  int copy = 0;
  Vertex x = -1;
  bool operator==(const WreathPoint &o) const {
    return copy == o.copy && x == o.x;
  }
};

/// Element (sigma, tau^shift) of Z wr Aut_{v,v*}(X): a finitely
/// supported map copy index -> component automorphism, and a shift.
struct WreathElement {
  std::map<int, int> comps; // copy index -> element id, identity omitted
  int shift = 0;
  bool is_identity() const { return shift == 0 && comps.empty(); }
  bool operator==(const WreathElement &o) const {
    return shift == o.shift && comps == o.comps;
  }
};

/// The group Z ⋉ ⊕_Z Aut_{v,v*}(X) with its action on line points.
class WreathGroup {
public:
  WreathGroup(const CubeComplex &X, DiametricPair p);

  const FiniteGroupRealization &component_group() const { return comp_; }
  const DiametricPair &pair() const { return pair_; }

  WreathElement identity() const { return {}; }
  WreathElement shift_element(int n) const { return {{}, n}; }
  WreathElement component(int copy, int elem) const;

  /// (s1, t^m)(s2, t^n) = (s1 · t^m s2 t^-m, t^(m+n)).
  WreathElement multiply(const WreathElement &a, const WreathElement &b) const;
  /// (s, t^n)^-1 = (t^-n s^-1 t^n, t^-n).
  WreathElement inverse(const WreathElement &a) const;
  WreathElement power(const WreathElement &a, int k) const;
  WreathElement commutator(const WreathElement &a, const WreathElement &b) const;

  /// (s, t^n)·(i, x) = (i+n, s_{i+n}(x)), renormalized.
  WreathPoint act(const WreathElement &e, WreathPoint p) const;

private:
  const CubeComplex *x_;
  DiametricPair pair_;
  FiniteGroupRealization comp_;
};

struct WreathLawReport {
  int aut_order = 0;      // |Aut(X)|, the law exponent tested
  int fixing_order = 0;   // |Aut_{v,v*}(X)|
  std::int64_t pairs_tested = 0;
  bool copy_preserving = false; // every tested commutator has shift 0
  bool law_holds = false;       // [x,y]^{aut_order} = 1 on every test
  int observed_exponent = 0;    // lcm of component orders actually seen
};

/// Samples pairs (x, y) with supports in [-window, window] and checks
/// that [x,y] preserves copies and [x,y]^{|Aut(X)|} is the identity,
/// both algebraically and on sampled line points.
WreathLawReport verify_wreath_law(const CubeComplex &X,
                                  const DiametricPair &p, int trials,
                                  int window = 3, std::uint64_t seed = 1);

struct NonsolvabilityReport {
  int group_order = 0;          // |Aut_{v,v*}(X)|
  std::vector<int> derived_orders;
  bool solvable = true;
  /// Human-readable consequence; machine-verified only up to the
  /// derived series of the finite component group.
  std::string conclusion;
};

NonsolvabilityReport nonsolvability_evidence(const CubeComplex &X,
                                             const DiametricPair &p);

struct CoordinateActionReport {
  int nplanes = 0;
  bool faithful = false; // distinct elements act differently on planes
  int image_order = 0;   // size of the induced permutation group
};

/// Action of Aut_{v,v*}(X) on the hyperplanes of X. For X = I^n this
/// exhibits the isomorphism with the symmetric group on n letters.
CoordinateActionReport coordinate_action(const CubeComplex &X,
                                         const DiametricPair &p);

} // namespace ccgt

#endif
