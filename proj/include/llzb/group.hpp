#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "llzb/error.hpp"

namespace llzb {

/// Permutation of {0..degree-1}, stored as the image array.
using Perm = std::vector<std::uint16_t>;

Perm perm_identity(int degree);
Perm perm_compose(const Perm& a, const Perm& b);  // apply a, then b
Perm perm_inverse(const Perm& a);
bool perm_is_valid(const Perm& a);

constexpr long kDefaultOrderCap = 20000;
constexpr long kMultTableCap = 4096;

/// Finite permutation group with full element enumeration. Elements are
/// sorted lexicographically by image array, so index 0 is the identity and
/// indexing is stable across runs. Immutable after construction.
class PermGroup {
 public:
  static PermGroup from_generators(int degree, std::vector<Perm> gens, long cap = kDefaultOrderCap);
  /// Wrap an already-closed element set (a subgroup of some enumerated group).
  static PermGroup from_elements(int degree, std::vector<Perm> elements);

  int degree() const { return degree_; }
  long order() const { return static_cast<long>(elements_.size()); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return gens_; }

  int mul(int a, int b) const;
  int inv(int a) const { return inv_[a]; }
  int index_of(const Perm& p) const;  // -1 if not an element
  int power(int a, long e) const;
  long element_order(int a) const;
  long exponent() const;
  std::vector<int> generator_indices() const;

  int conjugate(int x, int g) const { return mul(mul(inv(g), x), g); }  // g^-1 x g

  // subgroup helpers; subgroups are sorted element-index vectors
  std::vector<int> closure(std::vector<int> seed) const;
  std::vector<int> whole() const;
  std::vector<int> center() const;
  std::vector<int> derived_subgroup() const;
  std::vector<int> centralizer(int x) const;
  std::vector<int> centralizer_of_set(const std::vector<int>& S) const;
  std::vector<int> normalizer_of_set(const std::vector<int>& S) const;
  std::vector<int> conjugate_set(const std::vector<int>& S, int g) const;
  std::vector<int> generated_by(const std::vector<int>& gens) const { return closure(gens); }
  std::vector<int> cyclic(int x) const;
  std::vector<int> minimal_generators(const std::vector<int>& sub) const;
  bool is_subgroup_normal(const std::vector<int>& N) const;
  bool is_abelian() const;
  bool is_p_group(long p) const;
  /// Standalone group on the same points whose elements are the subgroup.
  PermGroup materialize(const std::vector<int>& sub) const;

 private:
  PermGroup() = default;
  void finish();

  int degree_ = 1;
  std::vector<Perm> gens_;
  std::vector<Perm> elements_;
  std::vector<int> inv_;
  std::vector<std::uint16_t> mult_table_;  // order^2 entries when order <= kMultTableCap
};

using PermGroupPtr = std::shared_ptr<const PermGroup>;

struct ConjClass {
  int representative;        // smallest element index in the class
  std::vector<int> members;  // sorted
  long size;
  long centralizer_order;
};

struct SectionPartition {
  long prime;
  std::vector<std::vector<int>> sections;  // sorted element-index sets
  std::vector<int> section_label;          // p'-class index owning each section
  std::vector<int> section_of;             // element index -> section index
};

struct ConjData {
  std::vector<ConjClass> classes;  // sorted by (size, representative)
  std::vector<int> class_of;
  std::vector<int> p_part;        // per element
  std::vector<int> p_prime_part;  // per element
  SectionPartition sections;
};

ConjData conjugacy_data(const PermGroup& G, long p);

std::vector<int> sylow_subgroup(const PermGroup& G, long p);

struct QuotientMap {
  PermGroup image;
  std::vector<int> element_map;  // source element index -> image element index
  std::vector<int> kernel;
};

QuotientMap quotient_group(const PermGroup& G, const std::vector<int>& N);

/// Automorphism of N as a full element-index map; checked to be bijective and
/// multiplicative.
std::vector<int> automorphism_from_images(const PermGroup& N, const std::vector<int>& gen_images);
std::vector<int> automorphism_from_conjugation(const PermGroup& ambient, const std::vector<int>& sub, int g);

/// N x H as a permutation group on |N|*|H| points (right regular action),
/// one automorphism of N per generator of H.
PermGroup semidirect_product(const PermGroup& N, const PermGroup& H,
                             const std::vector<std::vector<int>>& action);
PermGroup direct_product(const PermGroup& A, const PermGroup& B);

/// Invariant-factor type of an abelian group: prime-power orders, descending.
std::vector<long> abelian_type(const PermGroup& G);
std::vector<long> abelian_type_of_subgroup(const PermGroup& G, const std::vector<int>& sub);

struct Fingerprint {
  long order = 1, exponent = 1, center_order = 1, derived_order = 1;
  std::vector<long> center_type, ab_type;                // prime-power types
  std::vector<std::pair<long, long>> order_stats;        // (element order, count)
  std::string str() const;
  bool operator==(const Fingerprint& o) const = default;
};

Fingerprint fingerprint(const PermGroup& G);
std::vector<long> class_size_multiset(const PermGroup& G);

}  // namespace llzb
