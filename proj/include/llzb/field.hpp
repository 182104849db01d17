#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "llzb/error.hpp"

namespace llzb {

using u64 = std::uint64_t;
using i64 = std::int64_t;

bool is_prime(long n);

/// F_{p^n} with a fixed monic irreducible modulus over F_p.
/// Elements are encoded as integers: value = sum_i digit_i * p^i where the
/// digits are the coefficients of the residue polynomial. The prime subfield
/// is encoded as 0..p-1, so prime-field values are portable across extensions.
class FqField {
 public:
  FqField(long p, int n);  // deterministic modulus: least monic irreducible

  long p() const { return p_; }
  int n() const { return n_; }
  u64 q() const { return q_; }
  const std::vector<long>& modulus() const { return mod_; }  // coeffs, degree n, monic

  u64 zero() const { return 0; }
  u64 one() const { return 1; }
  u64 from_int(i64 v) const;  // embed Z -> prime subfield
  bool in_prime_field(u64 a) const { return a < static_cast<u64>(p_); }

  u64 add(u64 a, u64 b) const;
  u64 sub(u64 a, u64 b) const;
  u64 neg(u64 a) const;
  u64 mul(u64 a, u64 b) const;
  u64 inv(u64 a) const;
  u64 pow(u64 a, u64 e) const;
  u64 frobenius(u64 a, int k = 1) const;  // a^(p^k)

  bool same_as(const FqField& o) const { return p_ == o.p_ && n_ == o.n_ && mod_ == o.mod_; }

  std::vector<long> digits(u64 a) const;
  u64 from_digits(const std::vector<long>& d) const;

 private:
  long p_;
  int n_;
  u64 q_;
  std::vector<long> mod_;  // modulus coefficients c0..cn (cn = 1)
};

using FqFieldPtr = std::shared_ptr<const FqField>;
FqFieldPtr make_field(long p, int n);

/// Dense polynomial over an FqField; c[i] is the coefficient of x^i.
struct Poly {
  std::vector<u64> c;
  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
};

Poly poly_from(std::vector<u64> coeffs);
Poly poly_x();
Poly poly_const(u64 a);
bool poly_eq(const Poly& a, const Poly& b);
Poly poly_add(const FqField& F, const Poly& a, const Poly& b);
Poly poly_sub(const FqField& F, const Poly& a, const Poly& b);
Poly poly_mul(const FqField& F, const Poly& a, const Poly& b);
Poly poly_scale(const FqField& F, const Poly& a, u64 s);
void poly_divmod(const FqField& F, const Poly& a, const Poly& b, Poly& quo, Poly& rem);
Poly poly_rem(const FqField& F, const Poly& a, const Poly& b);
Poly poly_monic(const FqField& F, const Poly& a);
Poly poly_gcd(const FqField& F, Poly a, Poly b);  // monic gcd
/// g = gcd(a,b) monic with g = x*a + y*b
Poly poly_ext_gcd(const FqField& F, const Poly& a, const Poly& b, Poly& x, Poly& y);
Poly poly_derivative(const FqField& F, const Poly& a);
Poly poly_powmod(const FqField& F, Poly base, u64 e, const Poly& mod);
u64 poly_eval(const FqField& F, const Poly& a, u64 x);

/// Monic irreducible factors with multiplicities, sorted by (degree, coeffs).
std::vector<std::pair<Poly, int>> poly_factor(const FqField& F, const Poly& f);
/// Distinct roots in F, ascending by encoding.
std::vector<u64> poly_roots(const FqField& F, const Poly& f);

}  // namespace llzb
