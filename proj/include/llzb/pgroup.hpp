#pragma once

#include "llzb/algebra.hpp"

namespace llzb {

/// LL(FP) for an abelian p-group of type (p^a1, ..., p^ar):
/// p^a1 + ... + p^ar - r + 1.
long abelian_ll(const PermGroup& P, long p);
long abelian_ll_of_type(const std::vector<long>& type);

struct JenningsData {
  std::vector<std::vector<int>> dimension_subgroups;  // D_1 = P down to 1
  std::vector<int> d;                                 // d_i = log_p |D_i : D_{i+1}|
};
JenningsData jennings_data(const PermGroup& P, long p);
/// LL(FP) = 1 + (p-1) * sum i*d_i
long jennings_ll(const PermGroup& P, long p);

enum class PGroupTag {
  Abelian,
  M,            // M_{p^d}
  W,            // W_{p^d}
  Dihedral,
  Quaternion,
  Semidihedral,
  C4SemiC4,
  MNA21,
  D8xC2,
  Q8xC2,
  Other,
};

struct PGroupClass {
  PGroupTag tag = PGroupTag::Other;
  long p = 2;
  int d = 0;                  // order = p^d
  std::vector<long> abelian;  // type when tag == Abelian
};
PGroupClass recognize(const PermGroup& P);
const char* pgroup_tag_name(PGroupTag t);

/// The recursive upper-bound function for LL(ZB) in terms of the defect group.
long script_l(const PermGroup& P);

struct FixedPointData {
  int dim = 0;  // number of I-orbits on P
  int ll = 0;   // LL(FP^I)
  std::vector<int> centralizer;  // C_P(I), element indices in P
  std::vector<int> commutator;   // [P, I]
  bool semiregular = false;      // I semiregular on [P,I] \ {1}
  long ll_centralizer = 1;       // LL(F C_P(I))
  long ll_commutator = 1;        // LL(F [P,I])
  bool bound_holds = false;      // 2(ll - ll_c) <= ll_[P,I] - 1
  bool bound_equality = false;
};
/// P abelian, I a p'-group of automorphisms given as permutations of P's
/// element indices (degree |P|).
FixedPointData fixed_point_data(const PermGroup& P, const PermGroup& I, long p);

}  // namespace llzb
