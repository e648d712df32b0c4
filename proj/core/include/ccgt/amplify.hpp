#ifndef CCGT_AMPLIFY_HPP
#define CCGT_AMPLIFY_HPP

#include <string>
#include <vector>

#include "ccgt/action.hpp"
#include "ccgt/halfspace.hpp"
#include "ccgt/skewer.hpp"

namespace ccgt {

/// n halfspace pairs (a_i, b_i): all 2n pairwise disjoint, each pair's
/// hyperplanes strongly separated. The transcript records which flip
/// word produced which pair.
struct FacingFamily {
  std::vector<std::pair<HalfspaceRef, HalfspaceRef>> pairs;
  std::vector<std::string> transcript;
  bool complete = false;
  int failure_index = -1; // first target size that could not be built
};

struct AmplifyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Grows the facing triple (a, b, c) — with (a, b) strongly separated —
/// into n pairs by repeated flipping: a flip of c* doubles the family,
/// and each later step picks a fresh halfspace facing everything built
/// so far and flips its complement the same way. Both images landing
/// inside the flipped target is asserted at every step; a missing
/// flipper or facing halfspace yields a partial family.
FacingFamily amplify_facing(const GroupAction &action,
                            const HalfspaceSystem &hs, HalfspaceRef a,
                            HalfspaceRef b, HalfspaceRef c, int n,
                            int flip_search_len);

struct FamilyReport {
  /// disjoint[i][j] for halfspaces flattened as a1,b1,a2,b2,...
  std::vector<std::vector<Verdict>> disjoint;
  std::vector<Verdict> pair_strongly_separated;
  bool all_green = false;
  int inconclusive_entries = 0;
};

FamilyReport verify_family(const HalfspaceSystem &hs,
                           const FacingFamily &family);

} // namespace ccgt

#endif
