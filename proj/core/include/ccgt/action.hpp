#ifndef CCGT_ACTION_HPP
#define CCGT_ACTION_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ccgt/graph.hpp"
#include "ccgt/halfspace.hpp"

namespace ccgt {

/// A (possibly partial) cubical automorphism. On a finite complex the
/// maps are total permutations; on a ball of a lazy complex they are the
/// restriction of a global automorphism, undefined where the image
/// leaves the ball.
struct Automorphism {
  std::string name;
  std::vector<Vertex> fwd; // -1 = undefined
  std::vector<Vertex> inv;

  static Automorphism identity(int n, const std::string &name = "1");

  int size() const { return static_cast<int>(fwd.size()); }
  std::optional<Vertex> apply(Vertex v) const {
    if (v < 0 || v >= size() || fwd[v] < 0)
      return std::nullopt;
    return fwd[v];
  }
  std::optional<Vertex> apply_inv(Vertex v) const {
    if (v < 0 || v >= size() || inv[v] < 0)
      return std::nullopt;
    return inv[v];
  }
  bool is_identity() const;

  Automorphism inverse() const;
  /// this ∘ other (apply `other` first).
  Automorphism after(const Automorphism &other) const;
};

/// Checks the map is injective where defined and preserves adjacency in
/// both directions. On a ball, only edges between interior vertices are
/// required to map to edges; the result is then radius-limited but Yes.
Verdict check_automorphism(const CubeComplex &g, const Automorphism &a);

/// Words are sequences of nonzero ints: +k = generator k-1, -k = its
/// inverse.
using Word = std::vector<int>;

std::string word_to_string(const Word &w,
                           const std::vector<std::string> &names);

class GroupAction {
public:
  GroupAction(const CubeComplex &g, std::vector<Automorphism> gens);

  const CubeComplex &complex() const { return *g_; }
  int num_generators() const { return static_cast<int>(gens_.size()); }
  const Automorphism &generator(int i) const { return gens_[i]; }
  const Automorphism &generator_inverse(int i) const { return gen_invs_[i]; }
  const std::string &generator_name(int i) const { return gens_[i].name; }
  std::vector<std::string> generator_names() const;

  Automorphism evaluate(const Word &w) const;
  std::optional<Vertex> apply_word(const Word &w, Vertex v) const;

  /// Image of a halfspace under an automorphism: the image of a carrier
  /// edge names the plane, the image of a carrier vertex picks the side.
  /// Nullopt when the images fall outside the ball.
  std::optional<HalfspaceRef> image_halfspace(const HalfspaceSystem &hs,
                                              const Automorphism &a,
                                              HalfspaceRef h) const;
  /// Same through a word, mapping only the carrier edge instead of
  /// building the full automorphism.
  std::optional<HalfspaceRef> image_halfspace(const HalfspaceSystem &hs,
                                              const Word &w,
                                              HalfspaceRef h) const;

  /// Words of length 1..max_len in breadth-first order, tie-broken by
  /// generator index then sign: γ₁, γ₁⁻¹, γ₂, γ₂⁻¹, …
  std::vector<Word> enumerate_words(int max_len) const;

private:
  const CubeComplex *g_;
  std::vector<Automorphism> gens_;
  std::vector<Automorphism> gen_invs_;
};

/// "autperm v1": `autperm 1` header, `a <name>` starts an automorphism,
/// `m <v> <gv>` lines map vertex labels.
std::vector<Automorphism> load_autperm(std::istream &in,
                                       const CubeComplex &g);
void save_autperm(const std::vector<Automorphism> &as, const CubeComplex &g,
                  std::ostream &out);

} // namespace ccgt

#endif
