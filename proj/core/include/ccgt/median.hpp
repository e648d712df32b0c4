#ifndef CCGT_MEDIAN_HPP
#define CCGT_MEDIAN_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccgt/graph.hpp"

namespace ccgt {

struct MedianReport {
  bool is_median = false;
  /// A triple without a unique median, when not median.
  std::optional<std::array<Vertex, 3>> counterexample;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Every vertex triple has a unique median. Throws ValidationError on a
/// disconnected graph, naming vertices from two components.
MedianReport validate_median(const CubeComplex &g);

/// The unique median of u, v, w; requires a median graph.
Vertex median(const CubeComplex &g, Vertex u, Vertex v, Vertex w);

/// Gromov link condition at v: every set of edges at v that pairwise
/// span squares spans a cube.
bool link_is_flag(const CubeComplex &g, Vertex v);

/// An induced k-hypercube subgraph.
struct Cube {
  int dim = 0;
  std::vector<Vertex> vertices; // sorted
  /// Edges at the minimal corner, one per coordinate direction.
  std::vector<std::pair<Vertex, Vertex>> directions;
};

struct CubeList {
  std::vector<Cube> cubes;
  std::string warning; // set when k exceeds the dimension bound
};

/// All induced k-hypercube subgraphs, each listed once.
CubeList detect_cubes(const CubeComplex &g, int k);

/// Cartesian product of skeletons; labels are "<a>|<b>".
CubeComplex product(const CubeComplex &a, const CubeComplex &b);

/// Finest partition of hyperplanes with classes pairwise transverse
/// across different classes; one factor per class.
std::vector<CubeComplex> irreducible_factorization(const CubeComplex &g);

/// Median closure of a vertex set (combinatorial convex hull).
std::vector<Vertex> convex_hull(const CubeComplex &g,
                                std::vector<Vertex> seed);

} // namespace ccgt

#endif
