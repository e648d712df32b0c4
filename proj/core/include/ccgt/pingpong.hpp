#ifndef CCGT_PINGPONG_HPP
#define CCGT_PINGPONG_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ccgt/action.hpp"
#include "ccgt/halfspace.hpp"
#include "ccgt/skewer.hpp"

namespace ccgt {

/// Factor index of every hyperplane: finest partition with planes in
/// different classes pairwise transverse. Quadratic; small complexes or
/// trees only (a connected non-transverse pair graph is found fast).
std::vector<int> plane_factors(const HalfspaceSystem &hs, int *nfactors);

/// One factor's piece of an attractor, the bipolar shape produced by
/// the pole construction: U restricted to the factor is pos ∪ neg.
struct Attractor {
  int factor = 0;
  HalfspaceRef pos, neg;
};

/// Witness tuple for the infinite-girth criterion. The for-all-k
/// conditions are certified by nesting transcripts: per factor,
/// s.pos strictly inside pos and s⁻¹.neg strictly inside neg, which
/// extend the directly checked k = ±1 inclusions to every power.
struct PingPongCert {
  Word sigma, tau;         // the powered elements actually certified
  std::vector<Word> gens;  // generating set
  std::vector<Attractor> u_sigma, u_tau;
  Vertex x = -1;
  int N = 0, M = 0;
  int nfactors = 1;
  std::vector<int> plane_factor; // factor of each hyperplane
  std::vector<std::string> transcript;
};

struct CertVerdict {
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> certified_directly;  // inclusion labels
  std::vector<std::string> certified_by_nesting;
  std::string failure; // first failing or inconclusive condition
};

/// Free-subgroup criterion: x outside both attractors, powers of sigma
/// send {x} ∪ U_tau into U_sigma and symmetrically; |k| <= K checked
/// directly, all k via the nesting transcripts.
CertVerdict check_free_cert(const GroupAction &action,
                            const HalfspaceSystem &hs, const PingPongCert &c,
                            int K);

/// Infinite-girth criterion: additionally the generator translates of
/// each attractor avoid the other one and miss x. Never a false pass:
/// anything uncertified makes the verdict inconclusive.
CertVerdict check_girth_cert(const GroupAction &action,
                             const HalfspaceSystem &hs, const PingPongCert &c,
                             int K);

struct DaggerList {
  std::vector<DescendingChain> chains;
  Verdict status = Verdict::Yes;
};

/// A skewered halfspace in one factor; the descending orientation is
/// fixed automatically.
struct FactorHalfspace {
  int factor = 0;
  HalfspaceRef h;
};

/// The translated pole chains {s^n h_i}, {s^-n h_i*}, and their images
/// under every generator and inverse, truncated at depth m; each chain
/// verified descending and strongly separated.
DaggerList verify_dagger(const GroupAction &action, const HalfspaceSystem &hs,
                         const Word &sigma, const std::vector<Word> &gens,
                         const std::vector<FactorHalfspace> &factor_halfspaces,
                         int m);

/// Builds a cert from pole data: per factor, a halfspace h_i skewered
/// by sigma and h'_i skewered by tau. Searches minimal N making all
/// disjointness conditions hold, then minimal M making the nesting
/// transcripts certify; sigma/tau in the cert are the M-th powers.
std::optional<PingPongCert> build_cert_from_poles(
    const GroupAction &action, const HalfspaceSystem &hs, const Word &sigma,
    const Word &tau, const std::vector<Word> &gens,
    const std::vector<FactorHalfspace> &sigma_halfspaces,
    const std::vector<FactorHalfspace> &tau_halfspaces, int m, int N_max,
    int M_max, std::string *why_not = nullptr);

/// "ppcert v1" JSON serialization. Words are generator-index arrays,
/// halfspaces are [plane, side] pairs.
void save_ppcert(const PingPongCert &c, std::ostream &out);
PingPongCert load_ppcert(std::istream &in);

} // namespace ccgt

#endif
