#ifndef CCGT_SKEWER_HPP
#define CCGT_SKEWER_HPP

#include <optional>
#include <string>
#include <vector>

#include "ccgt/action.hpp"
#include "ccgt/graph.hpp"
#include "ccgt/halfspace.hpp"

namespace ccgt {

struct FixedBehavior {
  bool elliptic = false;
  std::vector<Vertex> fixed_cube; // setwise-invariant cube, if elliptic
  int translation_min = -1;       // min over ball vertices of d(v, g.v)
  int radius = 0;
};

/// Searches for a setwise g-invariant cube in the ball (a fixed vertex
/// of the cubical barycentric subdivision). Failure to find one is not
/// a hyperbolicity certificate.
FixedBehavior classify_fixed_behavior(const CubeComplex &g,
                                      const Automorphism &a, int radius);

/// g flips h: g.h strictly inside h*.
Verdict flips(const GroupAction &action, const HalfspaceSystem &hs,
              const Automorphism &g, HalfspaceRef h);

/// Breadth-first word search for a flipper of h; deterministic order.
std::optional<Word> find_flipper(const GroupAction &action,
                                 const HalfspaceSystem &hs, HalfspaceRef h,
                                 int max_word_len,
                                 bool *saw_inconclusive = nullptr);

struct SkewerCert {
  Word word;
  HalfspaceRef hprime, hsecond;
  bool strong = false;
  Verdict status = Verdict::No;
  std::vector<std::string> transcript;
};

/// Checks the chain g.h'' strictly inside h' inside h''. The strong
/// variant additionally certifies strong separation of the pair.
SkewerCert double_skewers(const GroupAction &action, const HalfspaceSystem &hs,
                          const Word &g, HalfspaceRef hprime,
                          HalfspaceRef hsecond, bool strong = false);

/// Strong double skewer: the sufficient condition for a contracting
/// isometry on that factor.
SkewerCert contracting_certificate(const GroupAction &action,
                                   const HalfspaceSystem &hs, const Word &g,
                                   HalfspaceRef hprime, HalfspaceRef hsecond);

struct DescendingChain {
  std::vector<HalfspaceRef> chain;
  std::string description;
  int verified_steps = 0; // consecutive strict containments verified
  bool strongly_separated = false;
  Verdict status = Verdict::Yes;
};

/// The two pole chains {g^i h} and {g^-i h*}, i = 0..m.
std::pair<DescendingChain, DescendingChain>
poles_prefix(const GroupAction &action, const HalfspaceSystem &hs,
             const Word &g, HalfspaceRef h, int m);

struct ChainDisjointness {
  int disjoint_at = -1; // first index with certified disjointness
  Verdict status = Verdict::No;
};

/// First index i <= m with chainA[i], chainB[i] certified disjoint;
/// status No means they intersect through index m.
ChainDisjointness chain_disjointness(const HalfspaceSystem &hs,
                                     const DescendingChain &a,
                                     const DescendingChain &b, int m);

/// Word moving the hyperplane's edge set to edge-path distance >= D.
std::optional<Word> essentiality_witness(const GroupAction &action,
                                         const HalfspaceSystem &hs, int plane,
                                         int D, int max_word_len);

/// Word that double skewers every listed pair (one pair per factor).
std::optional<Word> find_simultaneous_skewerer(
    const GroupAction &action, const HalfspaceSystem &hs,
    const std::vector<std::pair<HalfspaceRef, HalfspaceRef>> &pairs,
    int max_word_len, bool strong = false);

} // namespace ccgt

#endif
