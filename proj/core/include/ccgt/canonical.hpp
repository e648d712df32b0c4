#ifndef CCGT_CANONICAL_HPP
#define CCGT_CANONICAL_HPP

#include <string>
#include <vector>

#include "ccgt/graph.hpp"

namespace ccgt {

/// Label-independent canonical form: refinement plus individualization,
/// minimal adjacency string over the search tree.
std::string canonical_form(const CubeComplex &g);

inline bool isomorphic(const CubeComplex &a, const CubeComplex &b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges())
    return false;
  return canonical_form(a) == canonical_form(b);
}

} // namespace ccgt

#endif
