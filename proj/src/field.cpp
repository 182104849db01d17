#include "llzb/field.hpp"

#include <algorithm>
#include <cassert>

namespace llzb {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// FqField

u64 FqField::from_int(i64 v) const {
  i64 r = v % p_;
  if (r < 0) r += p_;
  return static_cast<u64>(r);
}

std::vector<long> FqField::digits(u64 a) const {
  std::vector<long> d(n_, 0);
  for (int i = 0; i < n_; ++i) {
    d[i] = static_cast<long>(a % p_);
    a /= p_;
  }
  return d;
}

u64 FqField::from_digits(const std::vector<long>& d) const {
  u64 v = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) v = v * p_ + d[i];
  return v;
}

u64 FqField::add(u64 a, u64 b) const {
  if (p_ == 2) return a ^ b;
  if (n_ == 1) return (a + b) % p_;
  u64 r = 0, pw = 1;
  for (int i = 0; i < n_; ++i) {
    r += pw * ((a % p_ + b % p_) % p_);
    a /= p_;
    b /= p_;
    pw *= p_;
  }
  return r;
}

u64 FqField::neg(u64 a) const {
  if (p_ == 2) return a;
  if (n_ == 1) return a == 0 ? 0 : p_ - a;
  u64 r = 0, pw = 1;
  for (int i = 0; i < n_; ++i) {
    u64 d = a % p_;
    r += pw * (d == 0 ? 0 : p_ - d);
    a /= p_;
    pw *= p_;
  }
  return r;
}

u64 FqField::sub(u64 a, u64 b) const { return add(a, neg(b)); }

u64 FqField::mul(u64 a, u64 b) const {
  if (a == 0 || b == 0) return 0;
  if (n_ == 1) return (a * b) % p_;
  if (p_ == 2) {
    // carry-less multiply, reduce by the modulus bitmask on the fly
    u64 modmask = 0;
    for (int i = 0; i <= n_; ++i)
      if (mod_[i]) modmask |= (1ULL << i);
    u64 r = 0;
    u64 top = 1ULL << n_;
    while (b) {
      if (b & 1) r ^= a;
      b >>= 1;
      a <<= 1;
      if (a & top) a ^= modmask;
    }
    return r;
  }
  // schoolbook on digit vectors, then reduce by the monic modulus
  std::vector<long> da = digits(a), db = digits(b);
  std::vector<long> conv(2 * n_ - 1, 0);
  for (int i = 0; i < n_; ++i) {
    if (!da[i]) continue;
    for (int j = 0; j < n_; ++j) conv[i + j] = (conv[i + j] + da[i] * db[j]) % p_;
  }
  for (int k = 2 * n_ - 2; k >= n_; --k) {
    long t = conv[k] % p_;
    if (!t) continue;
    for (int j = 0; j < n_; ++j) conv[k - n_ + j] = (conv[k - n_ + j] + t * (p_ - mod_[j])) % p_;
    conv[k] = 0;
  }
  conv.resize(n_);
  return from_digits(conv);
}

u64 FqField::pow(u64 a, u64 e) const {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

u64 FqField::inv(u64 a) const {
  require(a != 0, errc::internal_inconsistency, "inverse of zero");
  return pow(a, q_ - 2);
}

u64 FqField::frobenius(u64 a, int k) const {
  for (int i = 0; i < k % n_ + (k % n_ < 0 ? n_ : 0); ++i) a = pow(a, static_cast<u64>(p_));
  return a;
}

namespace {

// Rabin irreducibility test for a monic polynomial over the prime field.
bool irreducible_over_prime(const FqField& Fp, const Poly& f) {
  int n = f.deg();
  Poly x = poly_x();
  u64 p = static_cast<u64>(Fp.p());
  // x^(p^n) mod f, computed by iterating p-th powers
  Poly h = x;
  for (int i = 0; i < n; ++i) h = poly_powmod(Fp, h, p, f);
  if (!poly_eq(h, poly_rem(Fp, x, f))) return false;
  for (int l = 2; l <= n; ++l) {
    if (n % l != 0 || !is_prime(l)) continue;
    Poly g = x;
    for (int i = 0; i < n / l; ++i) g = poly_powmod(Fp, g, p, f);
    Poly d = poly_gcd(Fp, poly_sub(Fp, g, x), f);
    if (d.deg() != 0) return false;
  }
  return true;
}

}  // namespace

FqField::FqField(long p, int n) : p_(p), n_(n) {
  require(is_prime(p), errc::not_prime, "p = " + std::to_string(p));
  require(n >= 1, errc::config_error, "extension degree must be positive");
  double qd = 1;
  for (int i = 0; i < n; ++i) qd *= static_cast<double>(p);
  require(qd <= 2147483648.0, errc::config_error, "p^n exceeds 2^31");
  q_ = 1;
  for (int i = 0; i < n; ++i) q_ *= static_cast<u64>(p);
  mod_.assign(n + 1, 0);
  mod_[n] = 1;
  if (n == 1) return;
  // least monic irreducible: scan tails in ascending integer encoding
  FqField prime(p, 1);
  for (u64 tail = 0;; ++tail) {
    std::vector<u64> c(n + 1, 0);
    u64 t = tail;
    for (int i = 0; i < n; ++i) {
      c[i] = t % p;
      t /= p;
    }
    require(t == 0, errc::internal_inconsistency, "no irreducible found");
    c[n] = 1;
    Poly f = poly_from(c);
    if (irreducible_over_prime(prime, f)) {
      for (int i = 0; i <= n; ++i) mod_[i] = static_cast<long>(c[i]);
      return;
    }
  }
}

FqFieldPtr make_field(long p, int n) { return std::make_shared<const FqField>(p, n); }

// ---------------------------------------------------------------------------
// polynomials

Poly poly_from(std::vector<u64> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return Poly{std::move(coeffs)};
}

Poly poly_x() { return Poly{{0, 1}}; }
Poly poly_const(u64 a) { return a ? Poly{{a}} : Poly{}; }

bool poly_eq(const Poly& a, const Poly& b) { return a.c == b.c; }

Poly poly_add(const FqField& F, const Poly& a, const Poly& b) {
  std::vector<u64> c(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) {
    u64 x = i < a.c.size() ? a.c[i] : 0;
    u64 y = i < b.c.size() ? b.c[i] : 0;
    c[i] = F.add(x, y);
  }
  return poly_from(std::move(c));
}

Poly poly_sub(const FqField& F, const Poly& a, const Poly& b) {
  std::vector<u64> c(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) {
    u64 x = i < a.c.size() ? a.c[i] : 0;
    u64 y = i < b.c.size() ? b.c[i] : 0;
    c[i] = F.sub(x, y);
  }
  return poly_from(std::move(c));
}

Poly poly_mul(const FqField& F, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  std::vector<u64> c(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (!a.c[i]) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      if (b.c[j]) c[i + j] = F.add(c[i + j], F.mul(a.c[i], b.c[j]));
  }
  return poly_from(std::move(c));
}

Poly poly_scale(const FqField& F, const Poly& a, u64 s) {
  if (s == 0) return Poly{};
  std::vector<u64> c(a.c.size());
  for (size_t i = 0; i < a.c.size(); ++i) c[i] = F.mul(a.c[i], s);
  return poly_from(std::move(c));
}

void poly_divmod(const FqField& F, const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
  require(!b.is_zero(), errc::internal_inconsistency, "division by zero polynomial");
  std::vector<u64> r = a.c;
  int db = b.deg();
  u64 lead_inv = F.inv(b.c.back());
  std::vector<u64> q(a.deg() >= db ? a.deg() - db + 1 : 0, 0);
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    if (!r[i]) continue;
    u64 f = F.mul(r[i], lead_inv);
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] = F.sub(r[i - db + j], F.mul(f, b.c[j]));
  }
  quo = poly_from(std::move(q));
  rem = poly_from(std::move(r));
}

Poly poly_rem(const FqField& F, const Poly& a, const Poly& b) {
  Poly q, r;
  poly_divmod(F, a, b, q, r);
  return r;
}

Poly poly_monic(const FqField& F, const Poly& a) {
  if (a.is_zero()) return a;
  return poly_scale(F, a, F.inv(a.c.back()));
}

Poly poly_gcd(const FqField& F, Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(F, a);
}

Poly poly_ext_gcd(const FqField& F, const Poly& a, const Poly& b, Poly& x, Poly& y) {
  Poly r0 = a, r1 = b;
  Poly x0 = poly_const(1), x1{};
  Poly y0{}, y1 = poly_const(1);
  while (!r1.is_zero()) {
    Poly q, r;
    poly_divmod(F, r0, r1, q, r);
    Poly x2 = poly_sub(F, x0, poly_mul(F, q, x1));
    Poly y2 = poly_sub(F, y0, poly_mul(F, q, y1));
    r0 = std::move(r1);
    r1 = std::move(r);
    x0 = std::move(x1);
    x1 = std::move(x2);
    y0 = std::move(y1);
    y1 = std::move(y2);
  }
  if (!r0.is_zero()) {
    u64 s = F.inv(r0.c.back());
    r0 = poly_scale(F, r0, s);
    x0 = poly_scale(F, x0, s);
    y0 = poly_scale(F, y0, s);
  }
  x = x0;
  y = y0;
  return r0;
}

Poly poly_derivative(const FqField& F, const Poly& a) {
  if (a.deg() < 1) return Poly{};
  std::vector<u64> c(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i) c[i - 1] = F.mul(a.c[i], F.from_int(static_cast<i64>(i)));
  return poly_from(std::move(c));
}

Poly poly_powmod(const FqField& F, Poly base, u64 e, const Poly& mod) {
  Poly r = poly_const(1);
  base = poly_rem(F, base, mod);
  while (e) {
    if (e & 1) r = poly_rem(F, poly_mul(F, r, base), mod);
    base = poly_rem(F, poly_mul(F, base, base), mod);
    e >>= 1;
  }
  return r;
}

u64 poly_eval(const FqField& F, const Poly& a, u64 x) {
  u64 r = 0;
  for (int i = a.deg(); i >= 0; --i) r = F.add(F.mul(r, x), a.c[i]);
  return r;
}

namespace {

bool poly_is_one(const Poly& a) { return a.deg() == 0 && a.c[0] == 1; }

Poly poly_quo(const FqField& F, const Poly& a, const Poly& b) {
  Poly q, r;
  poly_divmod(F, a, b, q, r);
  require(r.is_zero(), errc::internal_inconsistency, "inexact polynomial division");
  return q;
}

// coefficientwise p-th root, valid when f = u(x^p)
Poly poly_pth_root(const FqField& F, const Poly& f) {
  long p = F.p();
  std::vector<u64> c(f.deg() / p + 1, 0);
  for (int i = 0; i <= f.deg(); i += static_cast<int>(p))
    c[i / p] = F.frobenius(f.c[i], F.n() - 1);  // p-th root = Frobenius^(n-1)
  return poly_from(std::move(c));
}

void squarefree_decomposition(const FqField& F, const Poly& f,
                              std::vector<std::pair<Poly, int>>& out, int mult) {
  if (f.deg() <= 0) return;
  Poly d = poly_derivative(F, f);
  if (d.is_zero()) {
    squarefree_decomposition(F, poly_pth_root(F, f), out, mult * static_cast<int>(F.p()));
    return;
  }
  Poly c = poly_gcd(F, f, d);
  Poly w = poly_quo(F, f, c);
  int i = 1;
  while (w.deg() > 0) {
    Poly y = poly_gcd(F, w, c);
    Poly z = poly_quo(F, w, y);
    if (z.deg() > 0) out.emplace_back(poly_monic(F, z), mult * i);
    w = y;
    c = poly_quo(F, c, y);
    ++i;
  }
  if (c.deg() > 0) squarefree_decomposition(F, poly_pth_root(F, c), out, mult * static_cast<int>(F.p()));
}

// x^(q^k) mod f via iterated q-th powering
Poly frobenius_power(const FqField& F, Poly start, int k, const Poly& f) {
  for (int i = 0; i < k; ++i) start = poly_powmod(F, start, F.q(), f);
  return start;
}

// j-th trial polynomial of degree < bound, deterministic enumeration
Poly trial_poly(const FqField& F, u64 j, int bound) {
  std::vector<u64> c(bound, 0);
  u64 t = j;
  for (int i = 0; i < bound && t; ++i) {
    c[i] = t % F.q();
    t /= F.q();
  }
  return poly_from(std::move(c));
}

// equal-degree splitting of a squarefree product of degree-d irreducibles
void edf(const FqField& F, const Poly& f, int d, std::vector<Poly>& out) {
  if (f.deg() == d) {
    out.push_back(f);
    return;
  }
  for (u64 j = 1;; ++j) {
    Poly h = trial_poly(F, j, 2 * d);
    if (h.deg() < 1) continue;
    // trace-like map into a small subfield, then gcd
    Poly t;
    if (F.p() == 2) {
      int bits = 0;
      for (u64 v = F.q(); v > 1; v >>= 1) ++bits;
      t = h;
      Poly acc = h;
      for (int i = 1; i < bits * d; ++i) {
        acc = poly_rem(F, poly_mul(F, acc, acc), f);
        t = poly_add(F, t, acc);
      }
    } else {
      Poly tr = h;
      Poly acc = h;
      for (int i = 1; i < d; ++i) {
        acc = frobenius_power(F, acc, 1, f);
        tr = poly_add(F, tr, acc);
      }
      t = poly_sub(F, poly_powmod(F, tr, (F.q() - 1) / 2, f), poly_const(1));
    }
    Poly g = poly_gcd(F, t, f);
    if (g.deg() > 0 && g.deg() < f.deg()) {
      edf(F, g, d, out);
      edf(F, poly_quo(F, f, g), d, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<Poly, int>> poly_factor(const FqField& F, const Poly& f) {
  require(f.deg() >= 1, errc::internal_inconsistency, "factoring a constant");
  std::vector<std::pair<Poly, int>> sqf;
  squarefree_decomposition(F, poly_monic(F, f), sqf, 1);
  std::vector<std::pair<Poly, int>> out;
  for (auto& [g0, mult] : sqf) {
    Poly g = g0;
    Poly h = poly_rem(F, poly_x(), g);
    for (int d = 1; 2 * d <= g.deg(); ++d) {
      h = poly_powmod(F, h, F.q(), g);
      Poly r = poly_gcd(F, poly_sub(F, h, poly_x()), g);
      if (r.deg() > 0) {
        std::vector<Poly> irr;
        edf(F, r, d, irr);
        for (auto& q : irr) out.emplace_back(q, mult);
        g = poly_quo(F, g, r);
        h = poly_rem(F, h, g);
      }
    }
    if (g.deg() > 0) out.emplace_back(g, mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
    return std::lexicographical_compare(a.first.c.rbegin(), a.first.c.rend(),
                                        b.first.c.rbegin(), b.first.c.rend());
  });
  return out;
}

std::vector<u64> poly_roots(const FqField& F, const Poly& f) {
  std::vector<u64> roots;
  for (auto& [g, mult] : poly_factor(F, f))
    if (g.deg() == 1) roots.push_back(F.neg(g.c[0]));
  std::sort(roots.begin(), roots.end());
  return roots;
}

const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_generator: return "InvalidGenerator";
    case errc::group_too_large: return "GroupTooLarge";
    case errc::not_normal: return "NotNormal";
    case errc::invalid_action: return "InvalidAction";
    case errc::unknown_catalog_entry: return "UnknownCatalogEntry";
    case errc::catalog_certification_failed: return "CatalogCertificationFailed";
    case errc::not_prime: return "NotPrime";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::field_too_small: return "FieldTooSmall";
    case errc::not_nilpotent: return "NotNilpotent";
    case errc::not_idempotent: return "NotIdempotent";
    case errc::not_primitive: return "NotPrimitive";
    case errc::not_ideal: return "NotIdeal";
    case errc::not_p_group: return "NotPGroup";
    case errc::not_abelian: return "NotAbelian";
    case errc::not_coprime: return "NotCoprime";
    case errc::domination_failure: return "DominationFailure";
    case errc::correspondence_failure: return "CorrespondenceFailure";
    case errc::classification_violation: return "ClassificationViolation";
    case errc::internal_inconsistency: return "InternalInconsistency";
    case errc::config_error: return "ConfigError";
  }
  return "UnknownError";
}

}  // namespace llzb
