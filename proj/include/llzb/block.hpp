#pragma once

#include <optional>

#include "llzb/algebra.hpp"

namespace llzb {

long nu_p(long n, long p);
/// Sylow p-subgroup of the subgroup spanned by `elems`, as G element indices.
std::vector<int> sylow_of_subgroup(const PermGroup& G, const std::vector<int>& elems, long p);
/// Least m with F_{p^m} a splitting field for FG and all its subquotients:
/// the multiplicative order of p modulo the p'-part of exp(G).
int splitting_degree(const PermGroup& G, long p);

struct Block {
  int index = 0;
  bool principal = false;
  std::vector<u64> idempotent;  // class-sum coordinates over the splitting field
  std::vector<u64> omega;       // central character on each class
  int k = 0, l = 0;
  int defect = 0;
  int defect_class = -1;
  std::vector<int> defect_group;  // element indices in G
  Fingerprint defect_fingerprint;
  LoewySeries loewy;
  int ll_zb = 1;
  int ll_zb_mod_rb = 0;
  SubalgebraView center;     // e*Z
  Subspace center_radical;   // radical of e*Z, in center coords
  Subspace reynolds_in_z;    // e*RFG, in Z coords
  QuotientView mod_reynolds; // (e*Z) / (e*RFG)
};

struct BlockSet {
  PermGroupPtr G;
  long p = 2;
  FqFieldPtr Fp, Fsplit;
  ConjData cd;
  CenterAlgebra Zp;  // over F_p
  Subspace rad_p;
  CenterAlgebra Z;   // over the splitting field
  Subspace rad;
  std::vector<Block> blocks;
};

BlockSet compute_blocks(PermGroupPtr G, long p, FqFieldPtr field_override = nullptr);

/// C_G(Q) together with the data needed by the Brauer homomorphism.
struct CentralizerContext {
  PermGroupPtr group;            // materialized C_G(Q), same degree as G
  std::vector<int> elems_in_g;   // sorted; local index i <-> elems_in_g[i]
  ConjData cd;
};
CentralizerContext centralizer_context(const PermGroup& G, long p, const std::vector<int>& Q);

/// Truncation of a central element (class coordinates in G) to C_G(Q),
/// re-expressed over the class sums of C_G(Q). Q must be a p-group.
std::vector<u64> brauer_hom(const PermGroup& G, const ConjData& gcd, long p,
                            const std::vector<u64>& z, const std::vector<int>& Q,
                            const CentralizerContext& C);

/// omega_{b^G} on the classes of G, via (K cap H)^+ evaluated at omega_b.
std::vector<u64> induced_character(const BlockSet& GB, const BlockSet& HB,
                                   const std::vector<int>& h_elems, int hblock);
bool induced_block_is(const BlockSet& GB, int gblock, const BlockSet& HB,
                      const std::vector<int>& h_elems, int hblock);

struct LocalDatum {
  int u_class = -1;
  long u_order = 1;
  CentralizerContext C;
  BlockSet blocks;                                // blocks of C_G(u)
  std::vector<std::vector<u64>> induced_omega;    // per local block, on G classes
  QuotientMap quot;                               // C_G(u) -> C_G(u)/<u>
  BlockSet qblocks;                               // blocks of the quotient
  std::vector<int> dominated;                     // local block -> quotient block
};
struct LocalData {
  std::vector<LocalDatum> data;
};
LocalData compute_local_data(const BlockSet& BS);

struct Subsection {
  int datum = -1;       // index into LocalData::data
  int local_block = -1;
};
std::vector<Subsection> subsections(const BlockSet& BS, const LocalData& LD, int block);

struct DominationResult {
  int quotient_block = -1;
  std::vector<u64> image;  // class coordinates in the quotient
};
/// Image of a block idempotent of H under FH -> F[H/N], N a central p-subgroup.
DominationResult dominated_block(const BlockSet& HB, int hblock, const std::vector<int>& N,
                                 const QuotientMap& qm, const BlockSet& QB);

struct InertialData {
  std::vector<int> defect_group;  // in G
  long order = 1;                 // |I(B)| = |N_G(D, b_D) : D C_G(D)|
  PermGroup action_on_d;          // induced automorphisms of D (includes inner ones)
  PermGroup action_on_z;          // restriction to Z(D); a p'-group
  PermGroup center_of_d;          // Z(D) as a standalone group
  int c = 1;                      // orbits of I(B) on Z(D)
  int z = 1;                      // LL(F Z(D)^{I(B)})
};
InertialData inertial_quotient(const BlockSet& BS, int block);
std::pair<int, int> cz_invariants(const InertialData& id);

struct EmbeddingReport {
  bool injective = false;
  bool multiplicative = false;
  bool reynolds_vanishes = false;
  int dim_lhs = 0;
  int dim_rhs = 0;
  int max_local_ll_mod = 0;  // max LL(Zb_i / Rb_i) over subsections
};
EmbeddingReport embedding_check(const BlockSet& BS, const LocalData& LD, int block);

}  // namespace llzb
