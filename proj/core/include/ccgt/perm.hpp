#ifndef CCGT_PERM_HPP
#define CCGT_PERM_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace ccgt {

/// Permutation of {0..n-1} as an image vector.
using Perm = std::vector<int>;

Perm perm_identity(int n);
Perm perm_mul(const Perm &a, const Perm &b); // (a*b)(x) = a[b[x]]
Perm perm_inv(const Perm &a);
bool is_perm(const Perm &a);
std::string perm_cycles(const Perm &a); // cycle notation, e.g. "(0 1 2)"

/// A finite group given by permutation generators; the element list is
/// closed eagerly on construction (breadth-first, deterministic order).
class FiniteGroupRealization {
public:
  FiniteGroupRealization(int degree, std::vector<Perm> gens,
                         std::vector<std::string> names);

  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const Perm &element(int i) const { return elements_[i]; }
  int num_generators() const { return static_cast<int>(gens_.size()); }
  const std::string &generator_name(int i) const { return names_[i]; }
  int generator_element(int i) const { return gen_elems_[i]; }

  int identity() const { return 0; }
  int mul(int i, int j) const { return index_.at(perm_mul(elements_[i], elements_[j])); }
  int inv(int i) const { return index_.at(perm_inv(elements_[i])); }
  int element_index(const Perm &p) const { return index_.at(p); }
  bool contains(const Perm &p) const { return index_.count(p) != 0; }

  /// Breadth-first closure of a subset of elements; returns element ids.
  std::vector<int> closure(const std::vector<int> &elems) const;

private:
  int degree_;
  std::vector<Perm> gens_;
  std::vector<std::string> names_;
  std::vector<int> gen_elems_;
  std::vector<Perm> elements_;
  std::map<Perm, int> index_;
};

// Built-in small groups.
FiniteGroupRealization cyclic_group(int n);
FiniteGroupRealization dihedral_group(int n); // order 2n, n >= 3
FiniteGroupRealization symmetric_group(int n);
FiniteGroupRealization alternating_group(int n);
FiniteGroupRealization quaternion_group(); // Q8, regular representation
FiniteGroupRealization elementary_abelian_2(int k); // (Z2)^k

/// "permgrp v1": `permgrp 1` header, `deg <n>`, then
/// `g <name> <i0> <i1> ... <i(n-1)>` generator image lines.
FiniteGroupRealization load_permgrp(std::istream &in);
void save_permgrp(const FiniteGroupRealization &g, std::ostream &out);

} // namespace ccgt

#endif
