#ifndef CCGT_GIRTH_HPP
#define CCGT_GIRTH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ccgt/ball.hpp"
#include "ccgt/perm.hpp"

namespace ccgt {

struct GirthResult {
  bool generated = true;
  int subgroup_order = 0; // the proper subgroup found, when not generated
  bool infinite_within = false; // no cycle inside the explored radius
  int radius = 0;
  int girth = -1; // exact girth, or the certified lower bound 2R+1
  /// Witness cycle as generator indices (±(i+1)), empty when acyclic.
  std::vector<int> witness;
  /// Set when some listed generator is an involution: the undirected
  /// graph convention makes a² = 1 contribute an edge, not a 2-cycle.
  bool involution_note = false;
};

/// Girth of the simple undirected Cayley graph of a finite group with
/// the chosen generators (element ids of the realization). BFS from the
/// identity; exact by vertex transitivity.
GirthResult girth_cayley(const FiniteGroupRealization &g,
                         const std::vector<int> &gens);

/// Girth exploration on a lazily generated Cayley ball (free groups,
/// free products): exact girth if a cycle closes inside the ball, else
/// a certified lower bound 2R+1.
GirthResult girth_ball(const FamilyBall &ball);

struct GirthSupResult {
  int girth = -1;
  std::vector<int> witness_gens; // element ids
  int sets_examined = 0;
};

/// Max of girth_cayley over generating subsets of size <= max_gens;
/// subsets are pruned up to inverses and conjugacy.
GirthSupResult girth_sup_bounded(const FiniteGroupRealization &g,
                                 int max_gens);

struct LawResult {
  bool holds = true;
  bool exhaustive = false;
  std::int64_t tuples_checked = 0;
  std::vector<int> counterexample; // element ids for x1..xr
};

/// Checks w(x1..xr) = 1 (word letters ±(i+1) refer to variables).
/// Exhaustive when |G|^r is small, else deterministic sampling.
LawResult check_law(const FiniteGroupRealization &g,
                    const std::vector<int> &word, int nvars,
                    std::int64_t exhaustive_limit = 2000000,
                    int samples = 1000, std::uint64_t seed = 1);

struct DerivedSeries {
  std::vector<int> orders; // starting with |G|
  bool solvable = false;
};

/// Successive commutator subgroups until stabilization.
DerivedSeries derived_series(const FiniteGroupRealization &g);

} // namespace ccgt

#endif
