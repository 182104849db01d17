#pragma once

#include <vector>

#include "llzb/group.hpp"
#include "llzb/linalg.hpp"

namespace llzb {

/// Commutative structure-constant algebra over F_q. The class algebra ZFG is
/// the main instance; block summands e*Z and quotients A/I are derived ones.
struct CenterAlgebra {
  FqFieldPtr F;
  long p = 2;
  int dim = 0;
  std::vector<u64> unit;
  // sparse structure constants: entry (i*dim+j) lists (k, c_ijk)
  std::vector<std::vector<std::pair<int, u64>>> sc;

  std::vector<u64> mul(const std::vector<u64>& x, const std::vector<u64>& y) const;
  std::vector<u64> pow_int(const std::vector<u64>& x, long e) const;
  BilinearMap bilinear() const;
  void verify_axioms() const;  // commutativity + associativity on basis triples
};

CenterAlgebra class_algebra(const PermGroup& G, const ConjData& cd, FqFieldPtr F);

struct LoewySeries {
  std::vector<int> dims;  // [dim J^0, dim J^1, ..., 0]
  int loewy_length = 0;
};

Subspace radical(const CenterAlgebra& A);
LoewySeries loewy_series(const CenterAlgebra& A, const Subspace& J);
CenterAlgebra extend_scalars(const CenterAlgebra& A, FqFieldPtr F2);

/// Primitive orthogonal central idempotents over any base field, ordered by
/// (first support coordinate, lexicographic).
std::vector<std::vector<u64>> central_idempotent_decomposition(const CenterAlgebra& A);
/// Same, but requires the field to split A/J(A): count must be dim - dim J.
std::vector<std::vector<u64>> primitive_idempotents(const CenterAlgebra& A);

/// Monic minimal polynomial of b inside the unital algebra (span, unit), plus
/// its roots in F.
struct MinPoly {
  Poly poly;
  std::vector<u64> roots;
};
MinPoly minpoly_and_roots(const CenterAlgebra& A, const std::vector<u64>& unit,
                          const std::vector<u64>& b);

/// e*A with its own structure constants; rows of basis embed it in A.
struct SubalgebraView {
  CenterAlgebra alg;
  Matrix basis;  // alg coords -> A coords
  std::vector<u64> to_parent(const std::vector<u64>& coords) const;
  std::vector<u64> from_parent(const std::vector<u64>& v) const;  // must lie in the span
};
SubalgebraView summand(const CenterAlgebra& A, const std::vector<u64>& e);

/// A/I on the complement of the pivot coordinates of I.
struct QuotientView {
  CenterAlgebra alg;
  Subspace ideal;
  std::vector<int> complement;  // coordinates of A carrying the quotient basis
  std::vector<u64> reduce(const std::vector<u64>& v) const;        // coords in alg
  std::vector<u64> lift(const std::vector<u64>& coords) const;     // canonical rep in A
};
QuotientView quotient_algebra(const CenterAlgebra& A, const Subspace& I);

/// x with sum_i x_i rows_i = v; fails if v is outside the row span
std::vector<u64> solve_combination(const FqField& F, const std::vector<std::vector<u64>>& rows,
                                   const std::vector<u64>& v);
/// scalar c with v = c * unit mod J, for local algebras
u64 residue_scalar(const CenterAlgebra& A, const Subspace& J, const std::vector<u64>& v);

std::vector<std::vector<u64>> section_sum_vectors(const ConjData& cd, const FqField& F);
/// Whole-algebra Reynolds ideal (span of section sums), or its projection
/// e * RFG when a block idempotent is given.
Subspace reynolds_ideal(const CenterAlgebra& Z, const ConjData& cd,
                        const std::vector<u64>* e = nullptr);

std::vector<u64> class_vector_to_elements(const ConjData& cd, const std::vector<u64>& v, long n);
std::vector<u64> elements_to_class_vector(const FqField& F, const ConjData& cd,
                                          const std::vector<u64>& w);

/// Full group algebra FP, used as the independent Loewy-length oracle for
/// p-groups and for fixed-point algebras.
struct GroupAlgebra {
  const PermGroup* G;
  FqFieldPtr F;
  std::vector<u64> mul(const std::vector<u64>& x, const std::vector<u64>& y) const;
  BilinearMap bilinear() const;
  /// dims of the powers of the augmentation ideal, [dim J^0, ..., 0]
  std::vector<int> augmentation_power_dims() const;
};

}  // namespace llzb
