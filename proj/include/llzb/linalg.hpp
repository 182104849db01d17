#pragma once

#include <functional>
#include <vector>

#include "llzb/field.hpp"

namespace llzb {

/// Dense matrix over an FqField. Vectors are rows; a subspace is the row span
/// of its basis matrix.
struct Matrix {
  FqFieldPtr F;
  int rows = 0, cols = 0;
  std::vector<u64> a;

  Matrix() = default;
  Matrix(FqFieldPtr f, int r, int c) : F(std::move(f)), rows(r), cols(c), a(size_t(r) * c, 0) {}
  u64& at(int r, int c) { return a[size_t(r) * cols + c]; }
  u64 at(int r, int c) const { return a[size_t(r) * cols + c]; }
  std::vector<u64> row(int r) const { return {a.begin() + size_t(r) * cols, a.begin() + size_t(r + 1) * cols}; }
  void set_row(int r, const std::vector<u64>& v) { std::copy(v.begin(), v.end(), a.begin() + size_t(r) * cols); }
};

Matrix matrix_from_rows(FqFieldPtr F, const std::vector<std::vector<u64>>& rows, int cols);
/// Reduced row echelon form in place; returns pivot column list.
std::vector<int> rref(Matrix& m);
/// Basis of {x : x * m = 0} as rows, canonicalized.
Matrix left_kernel(const Matrix& m);
Matrix mat_mul(const Matrix& a, const Matrix& b);
std::vector<u64> vec_mat(const std::vector<u64>& x, const Matrix& m);

/// Row span in canonical (rref) form; equality of subspaces is equality of
/// basis matrices.
class Subspace {
 public:
  Subspace() = default;
  Subspace(FqFieldPtr F, int ambient);                 // zero subspace
  static Subspace span(FqFieldPtr F, int ambient, const std::vector<std::vector<u64>>& vectors);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows; }
  const Matrix& basis() const { return basis_; }
  const FqFieldPtr& field() const { return F_; }

  bool contains(const std::vector<u64>& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_.a == o.basis_.a; }

  Subspace sum(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  /// Coordinates of v in the basis rows; fails if v is outside the span.
  std::vector<u64> coordinates(const std::vector<u64>& v) const;

 private:
  FqFieldPtr F_;
  int ambient_ = 0;
  Matrix basis_;
};

using BilinearMap = std::function<std::vector<u64>(const std::vector<u64>&, const std::vector<u64>&)>;

/// span{ u*v : u in basis(U), v in basis(V) } under the given product.
Subspace subspace_product(const BilinearMap& mult, const Subspace& U, const Subspace& V);

/// x -> (coordinatewise Frobenius^twist of x) * matrix
struct SemilinearMap {
  Matrix m;
  int twist = 1;
  std::vector<u64> apply(const std::vector<u64>& x) const;
};

/// Kernel of the m-fold composite, computed over the prime subfield and
/// returned as the F_q-span of the prime-field solution space.
Subspace semilinear_kernel(const SemilinearMap& phi, int iterations);

}  // namespace llzb
