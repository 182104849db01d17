#include "llzb/catalog.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "llzb/field.hpp"

#include "json.hpp"

namespace llzb {

namespace {

long ipow(long b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// order-statistics lookup on a fingerprint
long count_of_order(const Fingerprint& fp, long ord) {
  for (auto& [o, c] : fp.order_stats)
    if (o == ord) return c;
  return 0;
}

void certify(const PermGroup& G, const std::string& name, long order) {
  require(G.order() == order, errc::catalog_certification_failed,
          name + ": order " + std::to_string(G.order()) + " != " + std::to_string(order));
}

// elements x^i y^j with |x| = m, y^k = x^t, y^-1 x y = x^s
PermGroup metacyclic(long m, long k, long s, long t) {
  s = ((s % m) + m) % m;
  long deg = m * k;
  std::vector<long> spow(k + 1);
  spow[0] = 1;
  for (long j = 1; j <= k; ++j) spow[j] = (spow[j - 1] * s) % m;
  auto pt = [&](long i, long j) { return i * k + j; };
  Perm gx(deg), gy(deg);
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < k; ++j) {
      gx[pt(i, j)] = static_cast<std::uint16_t>(pt((i + spow[j]) % m, j));
      long jj = j + 1;
      long ii = i;
      if (jj >= k) {
        jj -= k;
        ii = (ii + t * spow[jj]) % m;
      }
      gy[pt(i, j)] = static_cast<std::uint16_t>(pt(ii, jj));
    }
  return PermGroup::from_generators(static_cast<int>(deg), {gx, gy});
}

// small matrices over F_q packed row-major
using Mat = std::vector<u64>;

Mat mmul(const FqField& F, int d, const Mat& a, const Mat& b) {
  Mat r(d * d, 0);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      u64 x = a[i * d + k];
      if (!x) continue;
      for (int j = 0; j < d; ++j) r[i * d + j] = F.add(r[i * d + j], F.mul(x, b[k * d + j]));
    }
  return r;
}

std::vector<u64> mapply(const FqField& F, int d, const Mat& m, const std::vector<u64>& v) {
  std::vector<u64> r(d, 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (m[i * d + j] && v[j]) r[i] = F.add(r[i], F.mul(m[i * d + j], v[j]));
  return r;
}

std::vector<std::vector<u64>> all_vectors(const FqField& F, int d, bool include_zero) {
  std::vector<std::vector<u64>> pts;
  u64 total = 1;
  for (int i = 0; i < d; ++i) total *= F.q();
  for (u64 code = 0; code < total; ++code) {
    std::vector<u64> v(d);
    u64 t = code;
    bool zero = true;
    for (int i = 0; i < d; ++i) {
      v[i] = t % F.q();
      t /= F.q();
      if (v[i]) zero = false;
    }
    if (zero && !include_zero) continue;
    pts.push_back(std::move(v));
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::vector<u64> projective_normalize(const FqField& F, std::vector<u64> v) {
  for (auto& x : v)
    if (x) {
      u64 s = F.inv(x);
      for (auto& y : v) y = F.mul(y, s);
      break;
    }
  return v;
}

std::vector<std::vector<u64>> projective_points(const FqField& F, int d) {
  std::vector<std::vector<u64>> pts;
  for (auto& v : all_vectors(F, d, false)) {
    auto n = projective_normalize(F, v);
    pts.push_back(n);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

Perm perm_from_matrix(const FqField& F, int d, const Mat& m,
                      const std::vector<std::vector<u64>>& pts, bool projective) {
  std::map<std::vector<u64>, int> idx;
  for (size_t i = 0; i < pts.size(); ++i) idx[pts[i]] = static_cast<int>(i);
  Perm p(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) {
    std::vector<u64> w = mapply(F, d, m, pts[i]);
    if (projective) w = projective_normalize(F, w);
    auto it = idx.find(w);
    require(it != idx.end(), errc::internal_inconsistency, "matrix action left the point set");
    p[i] = static_cast<std::uint16_t>(it->second);
  }
  return p;
}

u64 primitive_element(const FqField& F) {
  u64 qm1 = F.q() - 1;
  std::vector<u64> prime_divisors;
  u64 n = qm1;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      prime_divisors.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) prime_divisors.push_back(n);
  for (u64 g = 1; g < F.q(); ++g) {
    bool prim = true;
    for (u64 l : prime_divisors)
      if (F.pow(g, qm1 / l) == 1) {
        prim = false;
        break;
      }
    if (prim) return g;
  }
  fail(errc::internal_inconsistency, "no primitive element");
}

std::vector<Mat> transvection_gens(const FqField& F, int d) {
  std::vector<Mat> gens;
  for (int bi = 0; bi < F.n(); ++bi) {
    std::vector<long> dig(F.n(), 0);
    dig[bi] = 1;
    u64 lam = F.from_digits(dig);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        if (i == j) continue;
        if (d == 3 && !(i == j + 1 || j == i + 1)) continue;  // adjacent suffice
        Mat m(d * d, 0);
        for (int k = 0; k < d; ++k) m[k * d + k] = 1;
        m[i * d + j] = lam;
        gens.push_back(std::move(m));
      }
  }
  return gens;
}

PermGroup matrix_group(const FqField& F, int d, const std::vector<Mat>& gens, bool projective) {
  auto pts = projective ? projective_points(F, d) : all_vectors(F, d, false);
  std::vector<Perm> perms;
  for (const auto& m : gens) perms.push_back(perm_from_matrix(F, d, m, pts, projective));
  return PermGroup::from_generators(static_cast<int>(pts.size()), perms);
}

long parse_prime_power(long m, long& p) {
  for (long d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      p = d;
      long e = 0;
      while (m > 1) {
        require(m % d == 0, errc::unknown_catalog_entry, "not a prime power");
        m /= d;
        ++e;
      }
      return e;
    }
  p = m;
  return 1;
}

}  // namespace

PermGroup cyclic_group(long n) {
  require(n >= 1 && n <= kDefaultOrderCap, errc::unknown_catalog_entry, "cyclic order");
  if (n == 1) return PermGroup::from_generators(1, {});
  Perm c(n);
  for (long i = 0; i < n; ++i) c[i] = static_cast<std::uint16_t>((i + 1) % n);
  PermGroup G = PermGroup::from_generators(static_cast<int>(n), {c});
  certify(G, "C" + std::to_string(n), n);
  return G;
}

PermGroup abelian_group(const std::vector<long>& factors) {
  require(!factors.empty(), errc::unknown_catalog_entry, "empty abelian type");
  PermGroup G = cyclic_group(factors[0]);
  for (size_t i = 1; i < factors.size(); ++i) G = direct_product(G, cyclic_group(factors[i]));
  long expect = 1;
  for (long f : factors) expect *= f;
  certify(G, "Ab", expect);
  require(G.is_abelian(), errc::catalog_certification_failed, "Ab: not abelian");
  return G;
}

PermGroup symmetric_group(int n) {
  require(n >= 1, errc::unknown_catalog_entry, "Sn");
  if (n == 1) return PermGroup::from_generators(1, {});
  Perm t = perm_identity(n);
  t[0] = 1;
  t[1] = 0;
  Perm c(n);
  for (int i = 0; i < n; ++i) c[i] = static_cast<std::uint16_t>((i + 1) % n);
  PermGroup G = PermGroup::from_generators(n, n == 2 ? std::vector<Perm>{t} : std::vector<Perm>{t, c});
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  certify(G, "S" + std::to_string(n), f);
  return G;
}

PermGroup alternating_group(int n) {
  require(n >= 3, errc::unknown_catalog_entry, "An needs n >= 3");
  Perm a = perm_identity(n);  // (0 1 2)
  a[0] = 1;
  a[1] = 2;
  a[2] = 0;
  std::vector<Perm> gens{a};
  if (n > 3) {
    Perm b = perm_identity(n);
    if (n % 2 == 1) {
      for (int i = 0; i < n; ++i) b[i] = static_cast<std::uint16_t>((i + 1) % n);
    } else {
      for (int i = 1; i < n; ++i) b[i] = static_cast<std::uint16_t>(i % (n - 1) + 1);
    }
    gens.push_back(b);
  }
  PermGroup G = PermGroup::from_generators(n, gens);
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  certify(G, "A" + std::to_string(n), f / 2);
  return G;
}

PermGroup dihedral_group(long order) {
  require(order >= 8 && (order & (order - 1)) == 0, errc::unknown_catalog_entry, "D{2^n}");
  PermGroup G = metacyclic(order / 2, 2, order / 2 - 1, 0);
  certify(G, "D" + std::to_string(order), order);
  Fingerprint fp = fingerprint(G);
  require(fp.center_order == 2 && count_of_order(fp, 2) == order / 2 + 1 && fp.exponent == order / 2,
          errc::catalog_certification_failed, "dihedral fingerprint");
  return G;
}

PermGroup quaternion_group(long order) {
  require(order >= 8 && (order & (order - 1)) == 0, errc::unknown_catalog_entry, "Q{2^n}");
  PermGroup G = metacyclic(order / 2, 2, order / 2 - 1, order / 4);
  certify(G, "Q" + std::to_string(order), order);
  Fingerprint fp = fingerprint(G);
  require(fp.center_order == 2 && count_of_order(fp, 2) == 1 && fp.exponent == order / 2,
          errc::catalog_certification_failed, "quaternion fingerprint");
  return G;
}

PermGroup semidihedral_group(long order) {
  require(order >= 16 && (order & (order - 1)) == 0, errc::unknown_catalog_entry, "SD{2^n}");
  PermGroup G = metacyclic(order / 2, 2, order / 4 - 1, 0);
  certify(G, "SD" + std::to_string(order), order);
  Fingerprint fp = fingerprint(G);
  require(fp.center_order == 2 && count_of_order(fp, 2) == order / 4 + 1 && fp.exponent == order / 2,
          errc::catalog_certification_failed, "semidihedral fingerprint");
  return G;
}

PermGroup modular_group(long p, int d) {
  require(d >= 3 && !(p == 2 && d == 3), errc::unknown_catalog_entry, "M{p^d}");
  long m = ipow(p, d - 1);
  PermGroup G = metacyclic(m, p, 1 + ipow(p, d - 2), 0);
  certify(G, "M" + std::to_string(ipow(p, d)), ipow(p, d));
  Fingerprint fp = fingerprint(G);
  require(fp.exponent == m && fp.center_order == ipow(p, d - 2) &&
              fp.center_type == std::vector<long>{ipow(p, d - 2)},
          errc::catalog_certification_failed, "M{p^d} fingerprint");
  return G;
}

PermGroup central_product_w(long p, int d) {
  require(d >= 3, errc::unknown_catalog_entry, "W{p^d}");
  long m = ipow(p, d - 2);   // |<x>|
  long c = ipow(p, d - 3);   // [y,z] = x^c
  long deg = ipow(p, d);
  auto pt = [&](long i, long j, long l) { return (i * p + j) * p + l; };
  Perm gx(deg), gy(deg), gz(deg);
  for (long i = 0; i < m; ++i)
    for (long j = 0; j < p; ++j)
      for (long l = 0; l < p; ++l) {
        gx[pt(i, j, l)] = static_cast<std::uint16_t>(pt((i + 1) % m, j, l));
        gy[pt(i, j, l)] = static_cast<std::uint16_t>(pt(((i - c * l) % m + m) % m, (j + 1) % p, l));
        gz[pt(i, j, l)] = static_cast<std::uint16_t>(pt(i, j, (l + 1) % p));
      }
  PermGroup G = PermGroup::from_generators(static_cast<int>(deg), {gx, gy, gz});
  certify(G, "W" + std::to_string(ipow(p, d)), ipow(p, d));
  Fingerprint fp = fingerprint(G);
  long expected_exp = (p == 2) ? std::max<long>(m, 4) : m;
  require(fp.center_order == m && fp.center_type == std::vector<long>{m} && fp.exponent == expected_exp,
          errc::catalog_certification_failed, "W{p^d} fingerprint");
  return G;
}

PermGroup mna21_group() {
  // <x,y | x^4 = y^2 = [x,y]^2 = [[x,y],x] = [[x,y],y] = 1>, class-2 collection
  int deg = 16;
  auto pt = [](long i, long j, long k) { return static_cast<int>((i * 2 + j) * 2 + k); };
  Perm gx(deg), gy(deg);
  for (long i = 0; i < 4; ++i)
    for (long j = 0; j < 2; ++j)
      for (long k = 0; k < 2; ++k) {
        gx[pt(i, j, k)] = static_cast<std::uint16_t>(pt((i + 1) % 4, j, (k + j) % 2));
        gy[pt(i, j, k)] = static_cast<std::uint16_t>(pt(i, (j + 1) % 2, k));
      }
  PermGroup G = PermGroup::from_generators(deg, {gx, gy});
  certify(G, "MNA(2,1)", 16);
  Fingerprint fp = fingerprint(G);
  require(fp.exponent == 4 && fp.center_type == (std::vector<long>{2, 2}) && count_of_order(fp, 2) == 7,
          errc::catalog_certification_failed, "MNA(2,1) fingerprint");
  return G;
}

PermGroup c4_semi_c4_group() {
  PermGroup G = metacyclic(4, 4, 3, 0);
  certify(G, "C4:C4", 16);
  Fingerprint fp = fingerprint(G);
  require(fp.exponent == 4 && fp.center_type == (std::vector<long>{2, 2}) && count_of_order(fp, 2) == 3,
          errc::catalog_certification_failed, "C4:C4 fingerprint");
  return G;
}

PermGroup sl2(long q) {
  long p;
  int n = static_cast<int>(parse_prime_power(q, p));
  FqField F(p, n);
  PermGroup G = matrix_group(F, 2, transvection_gens(F, 2), false);
  certify(G, "SL(2," + std::to_string(q) + ")", q * (q * q - 1));
  return G;
}

PermGroup gl2(long q) {
  long p;
  int n = static_cast<int>(parse_prime_power(q, p));
  FqField F(p, n);
  std::vector<Mat> gens = transvection_gens(F, 2);
  gens.push_back(Mat{primitive_element(F), 0, 0, 1});
  PermGroup G = matrix_group(F, 2, gens, false);
  certify(G, "GL(2," + std::to_string(q) + ")", q * (q - 1) * (q * q - 1));
  return G;
}

PermGroup psl2(long q) {
  long p;
  int n = static_cast<int>(parse_prime_power(q, p));
  FqField F(p, n);
  PermGroup G = matrix_group(F, 2, transvection_gens(F, 2), true);
  long d = (q % 2 == 0) ? 1 : 2;
  certify(G, "PSL(2," + std::to_string(q) + ")", q * (q * q - 1) / d);
  return G;
}

PermGroup pgl2(long q) {
  long p;
  int n = static_cast<int>(parse_prime_power(q, p));
  FqField F(p, n);
  std::vector<Mat> gens = transvection_gens(F, 2);
  gens.push_back(Mat{primitive_element(F), 0, 0, 1});
  PermGroup G = matrix_group(F, 2, gens, true);
  certify(G, "PGL(2," + std::to_string(q) + ")", q * (q * q - 1));
  return G;
}

PermGroup gl32() {
  FqField F(2, 1);
  PermGroup G = matrix_group(F, 3, transvection_gens(F, 3), false);
  certify(G, "GL(3,2)", 168);
  return G;
}

PermGroup psl33() {
  FqField F(3, 1);
  PermGroup G = matrix_group(F, 3, transvection_gens(F, 3), true);
  certify(G, "PSL(3,3)", 5616);
  return G;
}

PermGroup mathieu10() {
  // M11 on 11 points, then the stabilizer of the last point on the rest
  Perm a(11), b(11);
  for (int i = 0; i < 11; ++i) a[i] = static_cast<std::uint16_t>((i + 1) % 11);
  b = perm_identity(11);
  // (3,7,11,8)(4,10,5,6) in 1-indexed cycle notation
  b[2] = 6;
  b[6] = 10;
  b[10] = 7;
  b[7] = 2;
  b[3] = 9;
  b[9] = 4;
  b[4] = 5;
  b[5] = 3;
  PermGroup M11 = PermGroup::from_generators(11, {a, b});
  certify(M11, "M11", 7920);
  std::vector<Perm> stab;
  for (const auto& e : M11.elements())
    if (e[10] == 10) stab.push_back(Perm(e.begin(), e.begin() + 10));
  PermGroup G = PermGroup::from_elements(10, std::move(stab));
  certify(G, "M10", 720);
  Fingerprint fp = fingerprint(G);
  require(fp.center_order == 1, errc::catalog_certification_failed, "M10 center");
  return G;
}

PermGroup double_cover_s5() {
  // the subgroup of SL(2,25) generated by SL(2,5) and diag(2t, t), t^2 = -2;
  // it maps onto PGL(2,5) = S5 in PSL(2,25) with kernel {+-1}
  FqField F(5, 2);
  require(F.modulus() == (std::vector<long>{2, 0, 1}), errc::internal_inconsistency,
          "unexpected F25 modulus");
  u64 t = F.from_digits({0, 1});
  u64 twot = F.from_digits({0, 2});
  std::vector<Mat> gens{{1, 1, 0, 1}, {1, 0, 1, 1}, {twot, 0, 0, t}};
  PermGroup G = matrix_group(F, 2, gens, false);
  certify(G, "2.S5", 240);
  Fingerprint fp = fingerprint(G);
  require(fp.center_order == 2 && count_of_order(fp, 2) == 1, errc::catalog_certification_failed,
          "2.S5 center / unique involution");
  std::vector<int> syl = sylow_subgroup(G, 2);
  Fingerprint sylfp = fingerprint(G.materialize(syl));
  Fingerprint q16 = fingerprint(quaternion_group(16));
  require(sylfp == q16, errc::catalog_certification_failed, "2.S5 Sylow-2 is not Q16");
  QuotientMap qm = quotient_group(G, G.center());
  Fingerprint s5 = fingerprint(symmetric_group(5));
  require(fingerprint(qm.image) == s5, errc::catalog_certification_failed, "2.S5 / Z is not S5");
  return G;
}

PermGroup agl1(long q) {
  long p;
  int n = static_cast<int>(parse_prime_power(q, p));
  FqField F(p, n);
  std::vector<u64> pts;
  for (u64 v = 0; v < F.q(); ++v) pts.push_back(v);
  std::vector<Perm> gens;
  for (int bi = 0; bi < n; ++bi) {
    std::vector<long> dig(n, 0);
    dig[bi] = 1;
    u64 sh = F.from_digits(dig);
    Perm t(q);
    for (u64 v = 0; v < F.q(); ++v) t[v] = static_cast<std::uint16_t>(F.add(v, sh));
    gens.push_back(std::move(t));
  }
  u64 g = primitive_element(F);
  Perm m(q);
  for (u64 v = 0; v < F.q(); ++v) m[v] = static_cast<std::uint16_t>(F.mul(v, g));
  gens.push_back(std::move(m));
  PermGroup G = PermGroup::from_generators(static_cast<int>(q), gens);
  certify(G, "AGL(1," + std::to_string(q) + ")", q * (q - 1));
  return G;
}

PermGroup c3c3_sd16() {
  FqField F(3, 1);
  // Sylow-2 of GL(2,3) acting naturally on the 9 affine points
  std::vector<Mat> glgens = transvection_gens(F, 2);
  glgens.push_back(Mat{2, 0, 0, 1});
  PermGroup GL23 = matrix_group(F, 2, glgens, false);
  certify(GL23, "GL(2,3)", 48);
  std::vector<int> syl = sylow_subgroup(GL23, 2);
  PermGroup S = GL23.materialize(syl);
  require(fingerprint(S) == fingerprint(semidihedral_group(16)), errc::catalog_certification_failed,
          "Sylow-2 of GL(2,3) is not SD16");
  auto pts9 = all_vectors(F, 2, true);
  std::map<std::vector<u64>, int> idx;
  for (size_t i = 0; i < pts9.size(); ++i) idx[pts9[i]] = static_cast<int>(i);
  auto vecpts = all_vectors(F, 2, false);  // point order used by matrix_group
  std::vector<Perm> gens;
  for (int gi : S.generator_indices()) {
    // recover the matrix from its action on the basis vectors
    const Perm& act = S.elements()[gi];
    auto find_image = [&](const std::vector<u64>& v) {
      int from = static_cast<int>(std::lower_bound(vecpts.begin(), vecpts.end(), v) - vecpts.begin());
      return vecpts[act[from]];
    };
    std::vector<u64> c1 = find_image({1, 0});
    std::vector<u64> c2 = find_image({0, 1});
    Mat m{c1[0], c2[0], c1[1], c2[1]};
    Perm p(9);
    for (size_t i = 0; i < pts9.size(); ++i) p[i] = static_cast<std::uint16_t>(idx[mapply(F, 2, m, pts9[i])]);
    gens.push_back(std::move(p));
  }
  for (int bi = 0; bi < 2; ++bi) {
    Perm t(9);
    for (size_t i = 0; i < pts9.size(); ++i) {
      std::vector<u64> w = pts9[i];
      w[bi] = F.add(w[bi], 1);
      t[i] = static_cast<std::uint16_t>(idx[w]);
    }
    gens.push_back(std::move(t));
  }
  PermGroup G = PermGroup::from_generators(9, gens);
  certify(G, "(C3xC3):SD16", 144);
  Fingerprint fp = fingerprint(G);
  require(fp.center_order == 1, errc::catalog_certification_failed, "(C3xC3):SD16 center");
  require(fingerprint(G.materialize(sylow_subgroup(G, 2))) == fingerprint(semidihedral_group(16)),
          errc::catalog_certification_failed, "(C3xC3):SD16 Sylow-2");
  return G;
}

PermGroup a4_c4() {
  PermGroup A4 = alternating_group(4);
  PermGroup C4 = cyclic_group(4);
  // C4 acts through the outer automorphism of A4: conjugation by (1 2)
  Perm t = perm_identity(4);
  t[0] = 1;
  t[1] = 0;
  std::vector<int> f(A4.order());
  for (long i = 0; i < A4.order(); ++i) {
    Perm img = perm_compose(perm_compose(t, A4.elements()[i]), t);
    int j = A4.index_of(img);
    require(j >= 0, errc::internal_inconsistency, "conjugation left A4");
    f[i] = j;
  }
  PermGroup G = semidirect_product(A4, C4, {f});
  certify(G, "A4:C4", 48);
  Fingerprint fp = fingerprint(G);
  require(fp.center_order == 2, errc::catalog_certification_failed, "A4:C4 center");
  require(fingerprint(G.materialize(sylow_subgroup(G, 2))) == fingerprint(mna21_group()),
          errc::catalog_certification_failed, "A4:C4 Sylow-2 is not MNA(2,1)");
  return G;
}

namespace {

bool parse_long(const std::string& s, long& v) {
  if (s.empty()) return false;
  v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    v = v * 10 + (c - '0');
  }
  return true;
}

}  // namespace

PermGroup catalog_group(const std::string& name) {
  long v = 0, p = 0;
  if (name == "MNA(2,1)") return mna21_group();
  if (name == "C4:C4") return c4_semi_c4_group();
  if (name == "GL(3,2)") return gl32();
  if (name == "PSL(3,3)") return psl33();
  if (name == "M10") return mathieu10();
  if (name == "2.S5") return double_cover_s5();
  if (name == "(C3xC3):SD16") return c3c3_sd16();
  if (name == "A4:C4") return a4_c4();
  if (name.size() > 2 && name.substr(0, 3) == "Ab[" && name.back() == ']') {
    std::vector<long> factors;
    std::stringstream ss(name.substr(3, name.size() - 4));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      require(parse_long(tok, v) && v >= 2, errc::unknown_catalog_entry, name);
      factors.push_back(v);
    }
    return abelian_group(factors);
  }
  auto numeric_suffix = [&](const std::string& prefix) {
    return name.size() > prefix.size() && name.compare(0, prefix.size(), prefix) == 0 &&
           parse_long(name.substr(prefix.size()), v);
  };
  auto paren_arg = [&](const std::string& prefix) {
    return name.size() > prefix.size() + 1 && name.compare(0, prefix.size(), prefix) == 0 &&
           name.back() == ')' && parse_long(name.substr(prefix.size(), name.size() - prefix.size() - 1), v);
  };
  if (numeric_suffix("SD")) return semidihedral_group(v);
  if (paren_arg("SL(2,")) return sl2(v);
  if (paren_arg("GL(2,")) return gl2(v);
  if (paren_arg("PSL(2,")) return psl2(v);
  if (paren_arg("PGL(2,")) return pgl2(v);
  if (paren_arg("AGL(1,")) return agl1(v);
  if (numeric_suffix("C")) return cyclic_group(v);
  if (numeric_suffix("D")) return dihedral_group(v);
  if (numeric_suffix("Q")) return quaternion_group(v);
  if (numeric_suffix("M")) {
    int d = static_cast<int>(parse_prime_power(v, p));
    return modular_group(p, d);
  }
  if (numeric_suffix("W")) {
    int d = static_cast<int>(parse_prime_power(v, p));
    return central_product_w(p, d);
  }
  if (numeric_suffix("S")) return symmetric_group(static_cast<int>(v));
  if (numeric_suffix("A")) return alternating_group(static_cast<int>(v));
  fail(errc::unknown_catalog_entry, name);
}

bool catalog_has(const std::string& name) {
  try {
    catalog_group(name);
    return true;
  } catch (const error&) {
    return false;
  }
}

std::vector<std::string> catalog_patterns() {
  return {"C{n}",      "Ab[{a1},{a2},...]", "D{2^n}",    "Q{2^n}",       "SD{2^n}",
          "M{p^d}",    "W{p^d}",            "MNA(2,1)",  "C4:C4",        "S{n}",
          "A{n}",      "SL(2,q)",           "GL(2,q)",   "GL(3,2)",      "PSL(2,q)",
          "PGL(2,q)",  "PSL(3,3)",          "M10",       "2.S5",         "AGL(1,q)",
          "(C3xC3):SD16", "A4:C4"};
}

PermGroup group_from_json_text(const std::string& text, std::string* name_out) {
  nlohmann::json j = nlohmann::json::parse(text);
  require(j.contains("degree") && j.contains("generators"), errc::config_error,
          "group file needs degree and generators");
  int degree = j["degree"].get<int>();
  std::vector<Perm> gens;
  for (const auto& arr : j["generators"]) {
    Perm p;
    for (const auto& x : arr) {
      long img = x.get<long>();
      require(img >= 1 && img <= degree, errc::invalid_generator, "image out of range");
      p.push_back(static_cast<std::uint16_t>(img - 1));
    }
    gens.push_back(std::move(p));
  }
  if (name_out) *name_out = j.value("name", "unnamed");
  return PermGroup::from_generators(degree, gens);
}

}  // namespace llzb
