#ifndef CCGT_POCSET_HPP
#define CCGT_POCSET_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "ccgt/graph.hpp"
#include "ccgt/halfspace.hpp"

namespace ccgt {

struct PocsetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finite pocset: pairs {h, h*} with a partial order closed under
/// transitivity and the order-reversing involution.
class Pocset {
public:
  /// Harvested from a finite complex: pairs = hyperplanes, containment
  /// by vertex-set inclusion.
  static Pocset from_complex(const HalfspaceSystem &hs);

  /// Abstract pocset with `npairs` pairs and containment generators
  /// (a, sa) ⊆ (b, sb). Throws PocsetError on inconsistency.
  static Pocset from_containments(
      int npairs,
      const std::vector<std::tuple<int, int, int, int>> &containments);

  /// "pocset v1": `pocset 1` header, `p <id>` pair lines,
  /// `c <idA> <sideA> <idB> <sideB>` containment lines.
  static Pocset load(std::istream &in);
  void save(std::ostream &out) const;

  int pairs() const { return npairs_; }
  const std::string &pair_name(int i) const { return names_[i]; }
  bool leq(int a, int sa, int b, int sb) const {
    return leq_[idx(a, sa)][idx(b, sb)];
  }

  /// All Choice+Consistency ultrafilters as side vectors.
  std::vector<std::vector<int>> ultrafilters() const;

  /// Sageev dual: vertices = ultrafilters, edges = flip one pair.
  CubeComplex dual_complex() const;

private:
  static int idx(int pair, int side) { return pair * 2 + side; }
  void close();

  int npairs_ = 0;
  std::vector<std::string> names_;
  std::vector<std::vector<char>> leq_; // leq_[x][y] : x ⊆ y
};

} // namespace ccgt

#endif
