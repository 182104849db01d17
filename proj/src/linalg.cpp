#include "llzb/linalg.hpp"

#include <algorithm>

namespace llzb {

Matrix matrix_from_rows(FqFieldPtr F, const std::vector<std::vector<u64>>& rows, int cols) {
  Matrix m(F, static_cast<int>(rows.size()), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    require(static_cast<int>(rows[r].size()) == cols, errc::dimension_mismatch, "row length");
    m.set_row(static_cast<int>(r), rows[r]);
  }
  return m;
}

std::vector<int> rref(Matrix& m) {
  const FqField& F = *m.F;
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    u64 s = F.inv(m.at(r, c));
    for (int j = c; j < m.cols; ++j) m.at(r, j) = F.mul(m.at(r, j), s);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      u64 f = m.at(i, c);
      for (int j = c; j < m.cols; ++j) m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  m.rows = r;
  m.a.resize(size_t(r) * m.cols);
  return pivots;
}

Matrix left_kernel(const Matrix& m) {
  // kernel of x -> x*m: equations sum_r x_r * m(r,c) = 0, one per column c
  const FqField& F = *m.F;
  Matrix eq(m.F, m.cols, m.rows);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) eq.at(c, r) = m.at(r, c);
  std::vector<int> piv = rref(eq);
  std::vector<bool> is_piv(m.rows, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<u64>> basis;
  for (int fc = 0; fc < m.rows; ++fc) {
    if (is_piv[fc]) continue;
    std::vector<u64> v(m.rows, 0);
    v[fc] = 1;
    for (size_t pr = 0; pr < piv.size(); ++pr) v[piv[pr]] = F.neg(eq.at(static_cast<int>(pr), fc));
    basis.push_back(std::move(v));
  }
  Matrix k = matrix_from_rows(m.F, basis, m.rows);
  rref(k);
  return k;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require(a.cols == b.rows, errc::dimension_mismatch, "matrix product");
  const FqField& F = *a.F;
  Matrix r(a.F, a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      u64 x = a.at(i, k);
      if (!x) continue;
      for (int j = 0; j < b.cols; ++j)
        if (b.at(k, j)) r.at(i, j) = F.add(r.at(i, j), F.mul(x, b.at(k, j)));
    }
  return r;
}

std::vector<u64> vec_mat(const std::vector<u64>& x, const Matrix& m) {
  require(static_cast<int>(x.size()) == m.rows, errc::dimension_mismatch, "vector-matrix product");
  const FqField& F = *m.F;
  std::vector<u64> r(m.cols, 0);
  for (int i = 0; i < m.rows; ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j)) r[j] = F.add(r[j], F.mul(x[i], m.at(i, j)));
  }
  return r;
}

Subspace::Subspace(FqFieldPtr F, int ambient) : F_(std::move(F)), ambient_(ambient), basis_(F_, 0, ambient) {}

Subspace Subspace::span(FqFieldPtr F, int ambient, const std::vector<std::vector<u64>>& vectors) {
  Subspace s(F, ambient);
  s.basis_ = matrix_from_rows(F, vectors, ambient);
  rref(s.basis_);
  return s;
}

bool Subspace::contains(const std::vector<u64>& v) const {
  require(static_cast<int>(v.size()) == ambient_, errc::dimension_mismatch, "membership test");
  const FqField& F = *F_;
  std::vector<u64> w = v;
  for (int r = 0; r < basis_.rows; ++r) {
    int lead = -1;
    for (int c = 0; c < ambient_; ++c)
      if (basis_.at(r, c) != 0) {
        lead = c;
        break;
      }
    if (lead < 0 || w[lead] == 0) continue;
    u64 f = w[lead];
    for (int c = lead; c < ambient_; ++c) w[c] = F.sub(w[c], F.mul(f, basis_.at(r, c)));
  }
  return std::all_of(w.begin(), w.end(), [](u64 x) { return x == 0; });
}

bool Subspace::contains(const Subspace& o) const {
  for (int r = 0; r < o.basis_.rows; ++r)
    if (!contains(o.basis_.row(r))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& o) const {
  require(ambient_ == o.ambient_ && F_->same_as(*o.F_), errc::dimension_mismatch, "subspace sum");
  std::vector<std::vector<u64>> rows;
  for (int r = 0; r < basis_.rows; ++r) rows.push_back(basis_.row(r));
  for (int r = 0; r < o.basis_.rows; ++r) rows.push_back(o.basis_.row(r));
  return span(F_, ambient_, rows);
}

Subspace Subspace::intersect(const Subspace& o) const {
  require(ambient_ == o.ambient_ && F_->same_as(*o.F_), errc::dimension_mismatch, "subspace intersection");
  // Zassenhaus: rref of [U | U; V | 0], intersection appears in the right
  // block of rows whose left block vanished.
  int n = ambient_;
  Matrix z(F_, basis_.rows + o.basis_.rows, 2 * n);
  for (int r = 0; r < basis_.rows; ++r)
    for (int c = 0; c < n; ++c) {
      z.at(r, c) = basis_.at(r, c);
      z.at(r, n + c) = basis_.at(r, c);
    }
  for (int r = 0; r < o.basis_.rows; ++r)
    for (int c = 0; c < n; ++c) z.at(basis_.rows + r, c) = o.basis_.at(r, c);
  rref(z);
  std::vector<std::vector<u64>> rows;
  for (int r = 0; r < z.rows; ++r) {
    bool left_zero = true;
    for (int c = 0; c < n && left_zero; ++c) left_zero = z.at(r, c) == 0;
    if (left_zero) {
      std::vector<u64> v(n);
      for (int c = 0; c < n; ++c) v[c] = z.at(r, n + c);
      rows.push_back(std::move(v));
    }
  }
  return span(F_, n, rows);
}

std::vector<u64> Subspace::coordinates(const std::vector<u64>& v) const {
  const FqField& F = *F_;
  std::vector<u64> w = v;
  std::vector<u64> coord(basis_.rows, 0);
  for (int r = 0; r < basis_.rows; ++r) {
    int lead = -1;
    for (int c = 0; c < ambient_; ++c)
      if (basis_.at(r, c) != 0) {
        lead = c;
        break;
      }
    if (lead < 0) continue;
    coord[r] = w[lead];
    if (w[lead] == 0) continue;
    u64 f = w[lead];
    for (int c = lead; c < ambient_; ++c) w[c] = F.sub(w[c], F.mul(f, basis_.at(r, c)));
  }
  require(std::all_of(w.begin(), w.end(), [](u64 x) { return x == 0; }),
          errc::internal_inconsistency, "vector outside subspace");
  return coord;
}

Subspace subspace_product(const BilinearMap& mult, const Subspace& U, const Subspace& V) {
  require(U.ambient() == V.ambient() && U.field()->same_as(*V.field()), errc::dimension_mismatch,
          "subspace product");
  std::vector<std::vector<u64>> rows;
  for (int i = 0; i < U.dim(); ++i) {
    std::vector<u64> u = U.basis().row(i);
    for (int j = 0; j < V.dim(); ++j) rows.push_back(mult(u, V.basis().row(j)));
  }
  return Subspace::span(U.field(), U.ambient(), rows);
}

std::vector<u64> SemilinearMap::apply(const std::vector<u64>& x) const {
  const FqField& F = *m.F;
  std::vector<u64> y(x.size());
  for (size_t i = 0; i < x.size(); ++i) y[i] = F.frobenius(x[i], twist);
  return vec_mat(y, m);
}

Subspace semilinear_kernel(const SemilinearMap& phi, int iterations) {
  require(iterations >= 1, errc::config_error, "iterations must be >= 1");
  const FqFieldPtr& F = phi.m.F;
  int dim = phi.m.rows;
  require(phi.m.cols == dim, errc::dimension_mismatch, "semilinear map must be square");
  int n = F->n();
  long p = F->p();
  FqFieldPtr Fp = (n == 1) ? F : make_field(p, 1);
  int N = dim * n;
  // prime-field matrix of x -> Frob^twist(x) * m, basis x^j e_i
  Matrix B(Fp, N, N);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < n; ++j) {
      // image of the basis vector x^j * e_i
      u64 lam = F->frobenius(F->from_digits([&] {
        std::vector<long> d(n, 0);
        d[j] = 1;
        return d;
      }()), phi.twist);
      for (int k = 0; k < dim; ++k) {
        u64 entry = F->mul(lam, phi.m.at(i, k));
        std::vector<long> d = F->digits(entry);
        for (int l = 0; l < n; ++l) B.at(i * n + j, k * n + l) = static_cast<u64>(d[l]);
      }
    }
  Matrix C = B;
  for (int it = 1; it < iterations; ++it) C = mat_mul(C, B);
  Matrix ker = left_kernel(C);
  // fold prime-field rows back into F_q vectors, then span over F_q
  std::vector<std::vector<u64>> rows;
  for (int r = 0; r < ker.rows; ++r) {
    std::vector<u64> v(dim, 0);
    for (int i = 0; i < dim; ++i) {
      std::vector<long> d(n, 0);
      for (int l = 0; l < n; ++l) d[l] = static_cast<long>(ker.at(r, i * n + l));
      v[i] = F->from_digits(d);
    }
    rows.push_back(std::move(v));
  }
  return Subspace::span(F, dim, rows);
}

}  // namespace llzb
