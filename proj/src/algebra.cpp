#include "llzb/algebra.hpp"

#include <algorithm>
#include <cmath>

namespace llzb {

std::vector<u64> CenterAlgebra::mul(const std::vector<u64>& x, const std::vector<u64>& y) const {
  std::vector<u64> r(dim, 0);
  for (int i = 0; i < dim; ++i) {
    if (!x[i]) continue;
    for (int j = 0; j < dim; ++j) {
      if (!y[j]) continue;
      u64 c = F->mul(x[i], y[j]);
      for (auto& [k, v] : sc[static_cast<size_t>(i) * dim + j]) r[k] = F->add(r[k], F->mul(c, v));
    }
  }
  return r;
}

std::vector<u64> CenterAlgebra::pow_int(const std::vector<u64>& x, long e) const {
  std::vector<u64> r = unit;
  std::vector<u64> base = x;
  while (e) {
    if (e & 1) r = mul(r, base);
    if (e >>= 1) base = mul(base, base);
  }
  return r;
}

BilinearMap CenterAlgebra::bilinear() const {
  return [this](const std::vector<u64>& a, const std::vector<u64>& b) { return mul(a, b); };
}

void CenterAlgebra::verify_axioms() const {
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < i; ++j)
      require(sc[static_cast<size_t>(i) * dim + j] == sc[static_cast<size_t>(j) * dim + i],
              errc::internal_inconsistency, "structure constants are not commutative");
  std::vector<u64> ei(dim, 0), ej(dim, 0), el(dim, 0);
  for (int i = 0; i < dim; ++i) {
    ei.assign(dim, 0);
    ei[i] = 1;
    for (int j = 0; j < dim; ++j) {
      ej.assign(dim, 0);
      ej[j] = 1;
      std::vector<u64> ij = mul(ei, ej);
      for (int l = 0; l < dim; ++l) {
        el.assign(dim, 0);
        el[l] = 1;
        if (mul(ij, el) != mul(ei, mul(ej, el)))
          fail(errc::internal_inconsistency, "structure constants are not associative");
      }
    }
  }
}

CenterAlgebra class_algebra(const PermGroup& G, const ConjData& cd, FqFieldPtr F) {
  CenterAlgebra A;
  A.F = F;
  A.p = F->p();
  A.dim = static_cast<int>(cd.classes.size());
  require(cd.class_of[0] == 0, errc::internal_inconsistency, "identity class must be first");
  A.unit.assign(A.dim, 0);
  A.unit[0] = 1;
  A.sc.assign(static_cast<size_t>(A.dim) * A.dim, {});
  long n = G.order();
  std::vector<i64> cnt(static_cast<size_t>(A.dim) * A.dim);
  for (int k = 0; k < A.dim; ++k) {
    std::fill(cnt.begin(), cnt.end(), 0);
    int z = cd.classes[k].representative;
    for (long x = 0; x < n; ++x) {
      int y = G.mul(G.inv(static_cast<int>(x)), z);
      ++cnt[static_cast<size_t>(cd.class_of[x]) * A.dim + cd.class_of[y]];
    }
    for (int i = 0; i < A.dim; ++i)
      for (int j = 0; j < A.dim; ++j) {
        u64 c = F->from_int(cnt[static_cast<size_t>(i) * A.dim + j]);
        if (c) A.sc[static_cast<size_t>(i) * A.dim + j].emplace_back(k, c);
      }
  }
  A.verify_axioms();
  return A;
}

Subspace radical(const CenterAlgebra& A) {
  if (A.dim == 0) return Subspace(A.F, 0);
  int m = 1;
  long pk = A.p;
  while (pk < A.dim) {
    pk *= A.p;
    ++m;
  }
  Matrix M(A.F, A.dim, A.dim);
  for (int i = 0; i < A.dim; ++i) {
    std::vector<u64> ei(A.dim, 0);
    ei[i] = 1;
    M.set_row(i, A.pow_int(ei, A.p));
  }
  return semilinear_kernel(SemilinearMap{M, 1}, m);
}

LoewySeries loewy_series(const CenterAlgebra& A, const Subspace& J) {
  LoewySeries ls;
  ls.dims.push_back(A.dim);
  if (A.dim == 0) {
    ls.loewy_length = 0;
    return ls;
  }
  Subspace cur = J;
  BilinearMap mult = A.bilinear();
  while (cur.dim() > 0) {
    ls.dims.push_back(cur.dim());
    Subspace next = subspace_product(mult, cur, J);
    require(!(next == cur), errc::not_nilpotent, "ideal power chain stabilized above zero");
    require(next.dim() < cur.dim(), errc::not_nilpotent, "ideal power chain is not decreasing");
    cur = next;
  }
  ls.dims.push_back(0);
  ls.loewy_length = static_cast<int>(ls.dims.size()) - 1;
  return ls;
}

CenterAlgebra extend_scalars(const CenterAlgebra& A, FqFieldPtr F2) {
  require(F2->p() == A.p, errc::field_mismatch, "characteristic changed under extension");
  require(A.F->n() == 1, errc::field_mismatch, "extension only from the prime field");
  CenterAlgebra B = A;
  B.F = F2;
  for (auto& row : B.sc)
    for (auto& [k, v] : row)
      require(F2->in_prime_field(v), errc::internal_inconsistency, "non-rational structure constant");
  return B;
}

MinPoly minpoly_and_roots(const CenterAlgebra& A, const std::vector<u64>& unit,
                          const std::vector<u64>& b) {
  // Krylov chain unit, b, b^2, ... with an augmented echelon to read off the
  // first linear dependency
  const FqField& F = *A.F;
  int n = A.dim;
  std::vector<std::vector<u64>> rows;      // echelon rows (length n + maxdeg+1)
  std::vector<int> leads;
  int maxdeg = n + 1;
  std::vector<u64> v = unit;
  std::vector<std::vector<u64>> aug;
  for (int k = 0;; ++k) {
    require(k <= maxdeg, errc::internal_inconsistency, "minimal polynomial not found");
    std::vector<u64> w(n + maxdeg + 1, 0);
    std::copy(v.begin(), v.end(), w.begin());
    w[n + k] = 1;
    // eliminate against existing rows (only the first n coordinates count)
    for (size_t r = 0; r < rows.size(); ++r) {
      int lead = leads[r];
      if (w[lead] == 0) continue;
      u64 f = F.mul(w[lead], F.inv(rows[r][lead]));
      for (size_t c = 0; c < w.size(); ++c) w[c] = F.sub(w[c], F.mul(f, rows[r][c]));
    }
    int lead = -1;
    for (int c = 0; c < n; ++c)
      if (w[c] != 0) {
        lead = c;
        break;
      }
    if (lead < 0) {
      // dependency: sum_j w[n+j] * b^j = 0, with w[n+k] = 1 (monic)
      std::vector<u64> coeffs(k + 1, 0);
      for (int j = 0; j <= k; ++j) coeffs[j] = w[n + j];
      MinPoly mp;
      mp.poly = poly_from(std::move(coeffs));
      mp.roots = poly_roots(F, mp.poly);
      return mp;
    }
    rows.push_back(w);
    leads.push_back(lead);
    v = A.mul(v, b);
  }
}

namespace {

// idempotents of F[b] <= (comp, unit e): squarefree CRT residues lifted by
// p-th powering, exact in commutative characteristic p
std::vector<std::vector<u64>> split_component(const CenterAlgebra& A, const std::vector<u64>& e,
                                              const std::vector<u64>& b, const Poly& minpoly) {
  const FqField& F = *A.F;
  auto factors = poly_factor(F, minpoly);
  if (factors.size() < 2) return {};
  Poly sqf = poly_const(1);
  for (auto& [f, m] : factors) sqf = poly_mul(F, sqf, f);
  int t = 0;
  long pk = 1;
  while (pk < A.dim) {
    pk *= A.p;
    ++t;
  }
  std::vector<std::vector<u64>> parts;
  for (auto& [f, m] : factors) {
    Poly g, x, y;
    Poly cof = poly_const(1);
    for (auto& [f2, m2] : factors)
      if (!poly_eq(f2, f)) cof = poly_mul(F, cof, f2);
    poly_ext_gcd(F, cof, f, x, y);  // cof*x + f*y = 1
    Poly u = poly_rem(F, poly_mul(F, cof, x), sqf);
    // evaluate u at b inside the component (b^0 = e), then lift
    std::vector<u64> val(A.dim, 0);
    std::vector<u64> bp = e;
    for (int j = 0; j <= u.deg(); ++j) {
      if (u.c[j]) {
        for (int c = 0; c < A.dim; ++c) val[c] = F.add(val[c], F.mul(u.c[j], bp[c]));
      }
      if (j < u.deg()) bp = A.mul(bp, b);
    }
    for (int i = 0; i < t; ++i) {
      std::vector<u64> w = val;
      for (long j = 1; j < A.p; ++j) w = A.mul(w, val);
      val = std::move(w);
    }
    parts.push_back(std::move(val));
  }
  return parts;
}

std::vector<std::vector<u64>> component_basis(const CenterAlgebra& A, const std::vector<u64>& e) {
  std::vector<std::vector<u64>> rows;
  for (int i = 0; i < A.dim; ++i) {
    std::vector<u64> ei(A.dim, 0);
    ei[i] = 1;
    rows.push_back(A.mul(e, ei));
  }
  Subspace s = Subspace::span(A.F, A.dim, rows);
  std::vector<std::vector<u64>> basis;
  for (int r = 0; r < s.dim(); ++r) basis.push_back(s.basis().row(r));
  return basis;
}

}  // namespace

std::vector<std::vector<u64>> central_idempotent_decomposition(const CenterAlgebra& A) {
  const FqField& F = *A.F;
  std::vector<std::vector<u64>> comps{A.unit};
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::vector<u64>> next;
    for (const auto& e : comps) {
      std::vector<std::vector<u64>> parts;
      for (const auto& b : component_basis(A, e)) {
        MinPoly mp = minpoly_and_roots(A, e, b);
        parts = split_component(A, e, b, mp.poly);
        if (!parts.empty()) break;
      }
      if (parts.empty()) {
        next.push_back(e);
      } else {
        for (auto& q : parts) next.push_back(std::move(q));
        changed = true;
      }
    }
    comps = std::move(next);
  }
  // consistency: orthogonal idempotents summing to the unit
  std::vector<u64> total(A.dim, 0);
  for (const auto& e : comps) {
    require(A.mul(e, e) == e, errc::internal_inconsistency, "central component not idempotent");
    for (int c = 0; c < A.dim; ++c) total[c] = F.add(total[c], e[c]);
  }
  require(total == A.unit, errc::internal_inconsistency, "central idempotents do not sum to 1");
  for (size_t a = 0; a < comps.size(); ++a)
    for (size_t b = a + 1; b < comps.size(); ++b) {
      std::vector<u64> prod = A.mul(comps[a], comps[b]);
      require(std::all_of(prod.begin(), prod.end(), [](u64 x) { return x == 0; }),
              errc::internal_inconsistency, "central idempotents are not orthogonal");
    }
  std::sort(comps.begin(), comps.end(), [](const std::vector<u64>& x, const std::vector<u64>& y) {
    auto first = [](const std::vector<u64>& v) {
      for (size_t i = 0; i < v.size(); ++i)
        if (v[i]) return i;
      return v.size();
    };
    size_t fx = first(x), fy = first(y);
    if (fx != fy) return fx < fy;
    return x < y;
  });
  return comps;
}

std::vector<std::vector<u64>> primitive_idempotents(const CenterAlgebra& A) {
  std::vector<std::vector<u64>> comps = central_idempotent_decomposition(A);
  Subspace J = radical(A);
  require(static_cast<int>(comps.size()) == A.dim - J.dim(), errc::field_too_small,
          "base field does not split the semisimple quotient");
  return comps;
}

std::vector<u64> SubalgebraView::to_parent(const std::vector<u64>& coords) const {
  return vec_mat(coords, basis);
}

std::vector<u64> SubalgebraView::from_parent(const std::vector<u64>& v) const {
  Subspace s = Subspace::span(basis.F, basis.cols, [&] {
    std::vector<std::vector<u64>> rows;
    for (int r = 0; r < basis.rows; ++r) rows.push_back(basis.row(r));
    return rows;
  }());
  // basis rows are already in rref, so coordinates() matches row order
  return s.coordinates(v);
}

SubalgebraView summand(const CenterAlgebra& A, const std::vector<u64>& e) {
  require(A.mul(e, e) == e, errc::not_idempotent, "summand of a non-idempotent");
  SubalgebraView V;
  std::vector<std::vector<u64>> rows;
  for (int i = 0; i < A.dim; ++i) {
    std::vector<u64> ei(A.dim, 0);
    ei[i] = 1;
    rows.push_back(A.mul(e, ei));
  }
  Subspace s = Subspace::span(A.F, A.dim, rows);
  V.basis = s.basis();
  V.alg.F = A.F;
  V.alg.p = A.p;
  V.alg.dim = s.dim();
  V.alg.unit = s.coordinates(e);
  V.alg.sc.assign(static_cast<size_t>(V.alg.dim) * V.alg.dim, {});
  for (int i = 0; i < V.alg.dim; ++i)
    for (int j = 0; j < V.alg.dim; ++j) {
      std::vector<u64> prod = A.mul(V.basis.row(i), V.basis.row(j));
      std::vector<u64> c = s.coordinates(prod);
      for (int k = 0; k < V.alg.dim; ++k)
        if (c[k]) V.alg.sc[static_cast<size_t>(i) * V.alg.dim + j].emplace_back(k, c[k]);
    }
  return V;
}

std::vector<u64> QuotientView::reduce(const std::vector<u64>& v) const {
  const FqField& F = *alg.F;
  std::vector<u64> w = v;
  const Matrix& b = ideal.basis();
  for (int r = 0; r < b.rows; ++r) {
    int lead = -1;
    for (int c = 0; c < b.cols; ++c)
      if (b.at(r, c) != 0) {
        lead = c;
        break;
      }
    if (lead < 0 || w[lead] == 0) continue;
    u64 f = w[lead];
    for (int c = lead; c < b.cols; ++c) w[c] = F.sub(w[c], F.mul(f, b.at(r, c)));
  }
  std::vector<u64> coords(complement.size());
  for (size_t i = 0; i < complement.size(); ++i) coords[i] = w[complement[i]];
  return coords;
}

std::vector<u64> QuotientView::lift(const std::vector<u64>& coords) const {
  std::vector<u64> v(ideal.ambient(), 0);
  for (size_t i = 0; i < complement.size(); ++i) v[complement[i]] = coords[i];
  return v;
}

QuotientView quotient_algebra(const CenterAlgebra& A, const Subspace& I) {
  require(I.ambient() == A.dim, errc::dimension_mismatch, "ideal lives elsewhere");
  for (int r = 0; r < I.dim(); ++r) {
    std::vector<u64> b = I.basis().row(r);
    for (int i = 0; i < A.dim; ++i) {
      std::vector<u64> ei(A.dim, 0);
      ei[i] = 1;
      require(I.contains(A.mul(ei, b)), errc::not_ideal, "subspace is not an ideal");
    }
  }
  QuotientView Q;
  Q.ideal = I;
  std::vector<bool> is_pivot(A.dim, false);
  for (int r = 0; r < I.dim(); ++r)
    for (int c = 0; c < A.dim; ++c)
      if (I.basis().at(r, c) != 0) {
        is_pivot[c] = true;
        break;
      }
  for (int c = 0; c < A.dim; ++c)
    if (!is_pivot[c]) Q.complement.push_back(c);
  Q.alg.F = A.F;
  Q.alg.p = A.p;
  Q.alg.dim = static_cast<int>(Q.complement.size());
  Q.alg.sc.assign(static_cast<size_t>(Q.alg.dim) * Q.alg.dim, {});
  Q.alg.unit = Q.reduce(A.unit);
  for (int i = 0; i < Q.alg.dim; ++i)
    for (int j = 0; j < Q.alg.dim; ++j) {
      std::vector<u64> a(A.dim, 0), b(A.dim, 0);
      a[Q.complement[i]] = 1;
      b[Q.complement[j]] = 1;
      std::vector<u64> c = Q.reduce(A.mul(a, b));
      for (int k = 0; k < Q.alg.dim; ++k)
        if (c[k]) Q.alg.sc[static_cast<size_t>(i) * Q.alg.dim + j].emplace_back(k, c[k]);
    }
  return Q;
}

std::vector<u64> solve_combination(const FqField& F, const std::vector<std::vector<u64>>& rows,
                                   const std::vector<u64>& v) {
  size_t m = rows.size(), n = v.size();
  // augmented rows [row_i | e_i]; elimination keeps first = combo * original
  std::vector<std::vector<u64>> work;
  std::vector<int> leads;
  auto reduce = [&](std::vector<u64>& w) {
    for (size_t r = 0; r < work.size(); ++r) {
      int lead = leads[r];
      if (w[lead] == 0) continue;
      u64 f = F.mul(w[lead], F.inv(work[r][lead]));
      for (size_t c = 0; c < w.size(); ++c) w[c] = F.sub(w[c], F.mul(f, work[r][c]));
    }
  };
  for (size_t i = 0; i < m; ++i) {
    std::vector<u64> w(n + m, 0);
    std::copy(rows[i].begin(), rows[i].end(), w.begin());
    w[n + i] = 1;
    reduce(w);
    for (size_t c = 0; c < n; ++c)
      if (w[c] != 0) {
        leads.push_back(static_cast<int>(c));
        work.push_back(std::move(w));
        break;
      }
  }
  std::vector<u64> w(n + m, 0);
  std::copy(v.begin(), v.end(), w.begin());
  reduce(w);
  for (size_t c = 0; c < n; ++c)
    require(w[c] == 0, errc::internal_inconsistency, "vector outside the row span");
  std::vector<u64> x(m, 0);
  for (size_t i = 0; i < m; ++i) x[i] = F.neg(w[n + i]);
  return x;
}

u64 residue_scalar(const CenterAlgebra& A, const Subspace& J, const std::vector<u64>& v) {
  std::vector<std::vector<u64>> rows;
  for (int r = 0; r < J.dim(); ++r) rows.push_back(J.basis().row(r));
  rows.push_back(A.unit);
  std::vector<u64> x = solve_combination(*A.F, rows, v);
  return x.back();
}

std::vector<std::vector<u64>> section_sum_vectors(const ConjData& cd, const FqField& F) {
  std::vector<std::vector<u64>> vecs;
  int k = static_cast<int>(cd.classes.size());
  for (size_t s = 0; s < cd.sections.sections.size(); ++s) {
    std::vector<u64> v(k, 0);
    for (int cls = 0; cls < k; ++cls)
      if (cd.sections.section_of[cd.classes[cls].representative] == static_cast<int>(s)) v[cls] = F.one();
    vecs.push_back(std::move(v));
  }
  return vecs;
}

Subspace reynolds_ideal(const CenterAlgebra& Z, const ConjData& cd, const std::vector<u64>* e) {
  std::vector<std::vector<u64>> vecs = section_sum_vectors(cd, *Z.F);
  if (!e) return Subspace::span(Z.F, Z.dim, vecs);
  require(Z.mul(*e, *e) == *e, errc::not_idempotent, "Reynolds projection needs an idempotent");
  std::vector<std::vector<u64>> rows;
  for (auto& v : vecs) rows.push_back(Z.mul(*e, v));
  return Subspace::span(Z.F, Z.dim, rows);
}

std::vector<u64> class_vector_to_elements(const ConjData& cd, const std::vector<u64>& v, long n) {
  std::vector<u64> w(n, 0);
  for (long g = 0; g < n; ++g) w[g] = v[cd.class_of[g]];
  return w;
}

std::vector<u64> elements_to_class_vector(const FqField& F, const ConjData& cd,
                                          const std::vector<u64>& w) {
  std::vector<u64> v(cd.classes.size(), 0);
  for (size_t cls = 0; cls < cd.classes.size(); ++cls) {
    u64 c = w[cd.classes[cls].members[0]];
    for (int m : cd.classes[cls].members)
      require(w[m] == c, errc::internal_inconsistency, "coefficient not constant on a class");
    v[cls] = c;
  }
  return v;
}

std::vector<u64> GroupAlgebra::mul(const std::vector<u64>& x, const std::vector<u64>& y) const {
  long n = G->order();
  std::vector<u64> r(n, 0);
  for (long a = 0; a < n; ++a) {
    if (!x[a]) continue;
    for (long b = 0; b < n; ++b) {
      if (!y[b]) continue;
      int c = G->mul(static_cast<int>(a), static_cast<int>(b));
      r[c] = F->add(r[c], F->mul(x[a], y[b]));
    }
  }
  return r;
}

BilinearMap GroupAlgebra::bilinear() const {
  return [this](const std::vector<u64>& a, const std::vector<u64>& b) { return mul(a, b); };
}

std::vector<int> GroupAlgebra::augmentation_power_dims() const {
  long n = G->order();
  std::vector<int> dims{static_cast<int>(n)};
  if (n == 1) {
    dims.push_back(0);
    return dims;
  }
  std::vector<std::vector<u64>> basis;
  for (long g = 1; g < n; ++g) {
    std::vector<u64> v(n, 0);
    v[g] = 1;
    v[0] = F->neg(F->one());
    basis.push_back(std::move(v));
  }
  Subspace cur = Subspace::span(F, static_cast<int>(n), basis);
  std::vector<int> gens = G->generator_indices();
  while (cur.dim() > 0) {
    dims.push_back(cur.dim());
    // J^(k+1) = span{ v*(g-1) : v in basis(J^k), g generator }; the powers of
    // the augmentation ideal are two-sided, so right translates suffice
    std::vector<std::vector<u64>> rows;
    for (int r = 0; r < cur.dim(); ++r) {
      std::vector<u64> v = cur.basis().row(r);
      for (int g : gens) {
        std::vector<u64> w(n, 0);
        for (long a = 0; a < n; ++a)
          if (v[a]) w[G->mul(static_cast<int>(a), g)] = v[a];
        for (long a = 0; a < n; ++a) w[a] = F->sub(w[a], v[a]);
        rows.push_back(std::move(w));
      }
    }
    Subspace next = Subspace::span(F, static_cast<int>(n), rows);
    require(next.dim() < cur.dim(), errc::not_nilpotent, "augmentation powers stalled");
    cur = next;
  }
  dims.push_back(0);
  return dims;
}

}  // namespace llzb
