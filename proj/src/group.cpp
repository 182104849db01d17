#include "llzb/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_set>

namespace llzb {

Perm perm_identity(int degree) {
  Perm p(degree);
  for (int i = 0; i < degree; ++i) p[i] = static_cast<std::uint16_t>(i);
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint16_t>(i);
  return r;
}

bool perm_is_valid(const Perm& a) {
  std::vector<bool> seen(a.size(), false);
  for (auto v : a) {
    if (v >= a.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

namespace {
struct PermHash {
  size_t operator()(const Perm& p) const {
    size_t h = 1469598103934665603ULL;
    for (auto v : p) {
      h ^= v;
      h *= 1099511628211ULL;
    }
    return h;
  }
};
}  // namespace

PermGroup PermGroup::from_generators(int degree, std::vector<Perm> gens, long cap) {
  require(degree >= 1, errc::invalid_generator, "degree must be positive");
  for (const auto& g : gens) {
    require(static_cast<int>(g.size()) == degree && perm_is_valid(g), errc::invalid_generator,
            "generator is not a permutation of the points");
  }
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> todo;
  Perm id = perm_identity(degree);
  seen.insert(id);
  todo.push_back(id);
  for (size_t head = 0; head < todo.size(); ++head) {
    Perm cur = todo[head];
    for (const auto& g : gens) {
      Perm prod = perm_compose(cur, g);
      if (seen.insert(prod).second) {
        require(static_cast<long>(seen.size()) <= cap, errc::group_too_large,
                "order exceeds cap " + std::to_string(cap));
        todo.push_back(std::move(prod));
      }
    }
  }
  PermGroup G;
  G.degree_ = degree;
  G.gens_ = std::move(gens);
  G.elements_.assign(seen.begin(), seen.end());
  G.finish();
  return G;
}

PermGroup PermGroup::from_elements(int degree, std::vector<Perm> elements) {
  PermGroup G;
  G.degree_ = degree;
  G.elements_ = std::move(elements);
  G.finish();
  G.gens_.clear();
  for (int i : G.minimal_generators(G.whole())) G.gens_.push_back(G.elements_[i]);
  return G;
}

void PermGroup::finish() {
  std::sort(elements_.begin(), elements_.end());
  long n = order();
  inv_.resize(n);
  for (long i = 0; i < n; ++i) {
    int j = index_of(perm_inverse(elements_[i]));
    require(j >= 0, errc::internal_inconsistency, "element set not closed under inverse");
    inv_[i] = j;
  }
  if (n <= kMultTableCap) {
    mult_table_.resize(static_cast<size_t>(n) * n);
    for (long a = 0; a < n; ++a)
      for (long b = 0; b < n; ++b) {
        int c = index_of(perm_compose(elements_[a], elements_[b]));
        require(c >= 0, errc::internal_inconsistency, "element set not closed under product");
        mult_table_[static_cast<size_t>(a) * n + b] = static_cast<std::uint16_t>(c);
      }
  }
}

int PermGroup::mul(int a, int b) const {
  if (!mult_table_.empty()) return mult_table_[static_cast<size_t>(a) * order() + b];
  int c = index_of(perm_compose(elements_[a], elements_[b]));
  require(c >= 0, errc::internal_inconsistency, "product left the element set");
  return c;
}

int PermGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return -1;
  return static_cast<int>(it - elements_.begin());
}

int PermGroup::power(int a, long e) const {
  int r = 0;  // identity
  int base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

long PermGroup::element_order(int a) const {
  const Perm& p = elements_[a];
  std::vector<bool> seen(degree_, false);
  long ord = 1;
  for (int i = 0; i < degree_; ++i) {
    if (seen[i]) continue;
    long len = 0;
    int j = i;
    do {
      seen[j] = true;
      j = p[j];
      ++len;
    } while (j != i);
    ord = std::lcm(ord, len);
  }
  return ord;
}

long PermGroup::exponent() const {
  long e = 1;
  for (long i = 0; i < order(); ++i) e = std::lcm(e, element_order(static_cast<int>(i)));
  return e;
}

std::vector<int> PermGroup::generator_indices() const {
  std::vector<int> g;
  for (const auto& p : gens_) {
    int i = index_of(p);
    require(i >= 0, errc::internal_inconsistency, "generator missing from element list");
    g.push_back(i);
  }
  return g;
}

std::vector<int> PermGroup::closure(std::vector<int> seed) const {
  std::vector<bool> in(order(), false);
  std::vector<int> members{0};
  in[0] = true;
  std::vector<int> queue{0};
  std::vector<int> gens;
  for (int s : seed)
    if (!in[s]) {
      in[s] = true;
      members.push_back(s);
      queue.push_back(s);
      gens.push_back(s);
    }
  for (size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (int g : gens) {
      int y = mul(x, g);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
        queue.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<int> PermGroup::whole() const {
  std::vector<int> all(order());
  std::iota(all.begin(), all.end(), 0);
  return all;
}

std::vector<int> PermGroup::center() const {
  std::vector<int> gi = generator_indices();
  std::vector<int> z;
  for (long x = 0; x < order(); ++x) {
    bool central = true;
    for (int g : gi)
      if (mul(static_cast<int>(x), g) != mul(g, static_cast<int>(x))) {
        central = false;
        break;
      }
    if (central) z.push_back(static_cast<int>(x));
  }
  return z;
}

std::vector<int> PermGroup::derived_subgroup() const {
  // normal closure of the generator commutators
  std::vector<int> gi = generator_indices();
  std::vector<int> seed;
  for (int a : gi)
    for (int b : gi) seed.push_back(mul(mul(inv(a), inv(b)), mul(a, b)));
  std::vector<int> D = closure(seed);
  for (;;) {
    std::vector<int> grown = D;
    bool stable = true;
    for (int x : D)
      for (int g : gi) {
        int y = conjugate(x, g);
        if (!std::binary_search(D.begin(), D.end(), y)) {
          grown.push_back(y);
          stable = false;
        }
      }
    if (stable) return D;
    D = closure(grown);
  }
}

std::vector<int> PermGroup::centralizer(int x) const {
  std::vector<int> c;
  for (long g = 0; g < order(); ++g)
    if (mul(static_cast<int>(g), x) == mul(x, static_cast<int>(g))) c.push_back(static_cast<int>(g));
  return c;
}

std::vector<int> PermGroup::centralizer_of_set(const std::vector<int>& S) const {
  std::vector<int> gens = minimal_generators(S);
  std::vector<int> c;
  for (long g = 0; g < order(); ++g) {
    bool ok = true;
    for (int s : gens)
      if (mul(static_cast<int>(g), s) != mul(s, static_cast<int>(g))) {
        ok = false;
        break;
      }
    if (ok) c.push_back(static_cast<int>(g));
  }
  return c;
}

std::vector<int> PermGroup::normalizer_of_set(const std::vector<int>& S) const {
  std::vector<int> gens = minimal_generators(S);
  std::vector<int> n;
  for (long g = 0; g < order(); ++g) {
    bool ok = true;
    for (int s : gens)
      if (!std::binary_search(S.begin(), S.end(), conjugate(s, static_cast<int>(g)))) {
        ok = false;
        break;
      }
    if (ok) n.push_back(static_cast<int>(g));
  }
  return n;
}

std::vector<int> PermGroup::conjugate_set(const std::vector<int>& S, int g) const {
  std::vector<int> r;
  r.reserve(S.size());
  for (int s : S) r.push_back(conjugate(s, g));
  std::sort(r.begin(), r.end());
  return r;
}

std::vector<int> PermGroup::cyclic(int x) const {
  std::vector<int> r{0};
  int y = x;
  while (y != 0) {
    r.push_back(y);
    y = mul(y, x);
  }
  std::sort(r.begin(), r.end());
  return r;
}

std::vector<int> PermGroup::minimal_generators(const std::vector<int>& sub) const {
  std::vector<int> gens;
  std::vector<int> cur{0};
  while (cur.size() < sub.size()) {
    int next = -1;
    for (int s : sub)
      if (!std::binary_search(cur.begin(), cur.end(), s)) {
        next = s;
        break;
      }
    require(next >= 0, errc::internal_inconsistency, "subgroup closure mismatch");
    gens.push_back(next);
    cur = closure(gens);
  }
  return gens;
}

bool PermGroup::is_subgroup_normal(const std::vector<int>& N) const {
  std::vector<int> ngens = minimal_generators(N);
  for (int g : generator_indices())
    for (int n : ngens)
      if (!std::binary_search(N.begin(), N.end(), conjugate(n, g))) return false;
  return true;
}

bool PermGroup::is_abelian() const {
  std::vector<int> gi = generator_indices();
  for (int a : gi)
    for (int b : gi)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool PermGroup::is_p_group(long p) const {
  long n = order();
  while (n % p == 0) n /= p;
  return n == 1;
}

PermGroup PermGroup::materialize(const std::vector<int>& sub) const {
  std::vector<Perm> elems;
  elems.reserve(sub.size());
  for (int i : sub) elems.push_back(elements_[i]);
  return from_elements(degree_, std::move(elems));
}

// ---------------------------------------------------------------------------
// conjugacy classes, p-decomposition, sections

namespace {

void ext_gcd(long a, long b, long& x, long& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return;
  }
  long x1, y1;
  ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
}

long inv_mod(long a, long m) {
  if (m == 1) return 0;
  long x, y;
  ext_gcd(((a % m) + m) % m, m, x, y);
  return ((x % m) + m) % m;
}

}  // namespace

ConjData conjugacy_data(const PermGroup& G, long p) {
  require(is_prime(p), errc::not_prime, "p = " + std::to_string(p));
  long n = G.order();
  std::vector<int> gi = G.generator_indices();
  ConjData cd;
  cd.class_of.assign(n, -1);
  std::vector<std::vector<int>> raw;
  for (long i = 0; i < n; ++i) {
    if (cd.class_of[i] >= 0) continue;
    int cls = static_cast<int>(raw.size());
    std::vector<int> members{static_cast<int>(i)};
    cd.class_of[i] = cls;
    for (size_t head = 0; head < members.size(); ++head) {
      for (int g : gi) {
        int y = G.conjugate(members[head], g);
        if (cd.class_of[y] < 0) {
          cd.class_of[y] = cls;
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    raw.push_back(std::move(members));
  }
  std::vector<int> perm(raw.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (raw[a].size() != raw[b].size()) return raw[a].size() < raw[b].size();
    return raw[a][0] < raw[b][0];
  });
  std::vector<int> newid(raw.size());
  for (size_t k = 0; k < perm.size(); ++k) {
    newid[perm[k]] = static_cast<int>(k);
    ConjClass c;
    c.members = raw[perm[k]];
    c.representative = c.members[0];
    c.size = static_cast<long>(c.members.size());
    require(n % c.size == 0, errc::internal_inconsistency, "class size must divide order");
    c.centralizer_order = n / c.size;
    cd.classes.push_back(std::move(c));
  }
  for (long i = 0; i < n; ++i) cd.class_of[i] = newid[cd.class_of[i]];

  cd.p_part.resize(n);
  cd.p_prime_part.resize(n);
  for (long i = 0; i < n; ++i) {
    long ord = G.element_order(static_cast<int>(i));
    long pk = 1;
    while (ord % p == 0) {
      pk *= p;
      ord /= p;
    }
    long m = ord;  // p'-part of the order
    // CRT exponents: e_p = 1 mod pk, 0 mod m; e_p' = 0 mod pk, 1 mod m
    long full = pk * m;
    long ep = (m * inv_mod(m, pk)) % full;
    long epp = (pk * inv_mod(pk, m)) % full;
    cd.p_part[i] = G.power(static_cast<int>(i), ep);
    cd.p_prime_part[i] = G.power(static_cast<int>(i), epp);
  }

  cd.sections.prime = p;
  std::map<int, std::vector<int>> by_label;  // p'-class of p'-part -> members
  for (long i = 0; i < n; ++i) by_label[cd.class_of[cd.p_prime_part[i]]].push_back(static_cast<int>(i));
  cd.sections.section_of.assign(n, -1);
  for (auto& [label, members] : by_label) {
    int s = static_cast<int>(cd.sections.sections.size());
    std::sort(members.begin(), members.end());
    for (int m : members) cd.sections.section_of[m] = s;
    cd.sections.section_label.push_back(label);
    cd.sections.sections.push_back(std::move(members));
  }
  return cd;
}

std::vector<int> sylow_subgroup(const PermGroup& G, long p) {
  require(is_prime(p), errc::not_prime, "p = " + std::to_string(p));
  long ppart = 1;
  long n = G.order();
  while (n % p == 0) {
    ppart *= p;
    n /= p;
  }
  std::vector<int> pelems;
  for (long i = 1; i < G.order(); ++i) {
    long ord = G.element_order(static_cast<int>(i));
    bool ppow = true;
    while (ord > 1) {
      if (ord % p != 0) {
        ppow = false;
        break;
      }
      ord /= p;
    }
    if (ppow) pelems.push_back(static_cast<int>(i));
  }
  std::vector<int> H{0};
  std::vector<int> gens;
  while (static_cast<long>(H.size()) < ppart) {
    bool extended = false;
    for (int g : pelems) {
      if (std::binary_search(H.begin(), H.end(), g)) continue;
      std::vector<int> cand = gens;
      cand.push_back(g);
      std::vector<int> K = G.closure(cand);
      long k = static_cast<long>(K.size());
      if (ppart % k == 0) {  // p-power order <= ppart
        H = std::move(K);
        gens = std::move(cand);
        extended = true;
        break;
      }
    }
    require(extended, errc::internal_inconsistency, "sylow closure stalled");
  }
  return H;
}

QuotientMap quotient_group(const PermGroup& G, const std::vector<int>& N) {
  require(!N.empty() && N[0] == 0, errc::not_normal, "kernel must contain the identity");
  require(G.is_subgroup_normal(N), errc::not_normal, "subgroup is not normal");
  long n = G.order();
  if (N.size() == 1) {
    QuotientMap qm{G, {}, {0}};
    qm.element_map.resize(n);
    std::iota(qm.element_map.begin(), qm.element_map.end(), 0);
    return qm;
  }
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (long i = 0; i < n; ++i) {
    if (coset_of[i] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(static_cast<int>(i));
    for (int m : N) coset_of[G.mul(m, static_cast<int>(i))] = c;  // coset N*i
  }
  int k = static_cast<int>(reps.size());
  require(static_cast<long>(k) * static_cast<long>(N.size()) == n, errc::internal_inconsistency,
          "coset count mismatch");
  auto perm_of = [&](int e) {
    Perm p(k);
    for (int c = 0; c < k; ++c) p[c] = static_cast<std::uint16_t>(coset_of[G.mul(reps[c], e)]);
    return p;
  };
  std::vector<Perm> gens;
  for (int g : G.generator_indices()) gens.push_back(perm_of(g));
  QuotientMap qm;
  qm.image = PermGroup::from_generators(k, gens);
  require(qm.image.order() == static_cast<long>(k), errc::internal_inconsistency,
          "quotient action is not regular on cosets");
  qm.kernel = N;
  qm.element_map.resize(n);
  for (long e = 0; e < n; ++e) {
    int idx = qm.image.index_of(perm_of(static_cast<int>(e)));
    require(idx >= 0, errc::internal_inconsistency, "quotient element map failure");
    qm.element_map[e] = idx;
  }
  return qm;
}

// ---------------------------------------------------------------------------
// constructions

std::vector<int> automorphism_from_images(const PermGroup& N, const std::vector<int>& gen_images) {
  std::vector<int> gi = N.generator_indices();
  require(gi.size() == gen_images.size(), errc::invalid_action, "one image per generator");
  long n = N.order();
  std::vector<int> f(n, -1);
  f[0] = 0;
  std::vector<int> queue{0};
  for (size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (size_t j = 0; j < gi.size(); ++j) {
      int y = N.mul(x, gi[j]);
      int fy = N.mul(f[x], gen_images[j]);
      if (f[y] < 0) {
        f[y] = fy;
        queue.push_back(y);
      } else {
        require(f[y] == fy, errc::invalid_action, "generator images are inconsistent");
      }
    }
  }
  std::vector<bool> hit(n, false);
  for (long x = 0; x < n; ++x) {
    require(f[x] >= 0 && !hit[f[x]], errc::invalid_action, "image map is not a bijection");
    hit[f[x]] = true;
  }
  for (long x = 0; x < n; ++x)
    for (long y = 0; y < n; ++y)
      require(f[N.mul(static_cast<int>(x), static_cast<int>(y))] == N.mul(f[x], f[y]),
              errc::invalid_action, "image map is not multiplicative");
  return f;
}

std::vector<int> automorphism_from_conjugation(const PermGroup& ambient, const std::vector<int>& sub,
                                               int g) {
  std::vector<int> f(sub.size());
  for (size_t i = 0; i < sub.size(); ++i) {
    int y = ambient.conjugate(sub[i], g);
    auto it = std::lower_bound(sub.begin(), sub.end(), y);
    require(it != sub.end() && *it == y, errc::invalid_action, "conjugation leaves the subgroup");
    f[i] = static_cast<int>(it - sub.begin());
  }
  return f;
}

PermGroup semidirect_product(const PermGroup& N, const PermGroup& H,
                             const std::vector<std::vector<int>>& action) {
  std::vector<int> hgi = H.generator_indices();
  require(action.size() == hgi.size(), errc::invalid_action, "one automorphism per H generator");
  long nn = N.order(), nh = H.order();
  for (const auto& a : action)
    require(static_cast<long>(a.size()) == nn, errc::invalid_action, "automorphism size mismatch");
  // extend the action to all of H, checking consistency on the Cayley graph
  std::vector<std::vector<int>> phi(nh);
  std::vector<char> known(nh, 0);
  std::vector<int> idmap(nn);
  std::iota(idmap.begin(), idmap.end(), 0);
  phi[0] = idmap;
  known[0] = 1;
  std::vector<int> queue{0};
  for (size_t head = 0; head < queue.size(); ++head) {
    int b = queue[head];
    for (size_t j = 0; j < hgi.size(); ++j) {
      int b2 = H.mul(b, hgi[j]);
      std::vector<int> comp(nn);
      for (long x = 0; x < nn; ++x) comp[x] = phi[b][action[j][x]];
      if (!known[b2]) {
        phi[b2] = std::move(comp);
        known[b2] = 1;
        queue.push_back(b2);
      } else {
        require(phi[b2] == comp, errc::invalid_action, "action incompatible with H relations");
      }
    }
  }
  long degree = nn * nh;
  require(degree <= kDefaultOrderCap, errc::group_too_large, "semidirect product too large");
  std::vector<Perm> gens;
  for (int gn : N.generator_indices()) {
    Perm p(degree);
    for (long a = 0; a < nn; ++a)
      for (long b = 0; b < nh; ++b)
        p[a * nh + b] = static_cast<std::uint16_t>(N.mul(static_cast<int>(a), phi[b][gn]) * nh + b);
    gens.push_back(std::move(p));
  }
  for (int gh : hgi) {
    Perm p(degree);
    for (long a = 0; a < nn; ++a)
      for (long b = 0; b < nh; ++b)
        p[a * nh + b] = static_cast<std::uint16_t>(a * nh + H.mul(static_cast<int>(b), gh));
    gens.push_back(std::move(p));
  }
  PermGroup G = PermGroup::from_generators(static_cast<int>(degree), std::move(gens));
  require(G.order() == nn * nh, errc::invalid_action, "semidirect closure has wrong order");
  return G;
}

PermGroup direct_product(const PermGroup& A, const PermGroup& B) {
  int d = A.degree() + B.degree();
  std::vector<Perm> gens;
  for (const auto& g : A.generators()) {
    Perm p = perm_identity(d);
    for (int i = 0; i < A.degree(); ++i) p[i] = g[i];
    gens.push_back(std::move(p));
  }
  for (const auto& g : B.generators()) {
    Perm p = perm_identity(d);
    for (int i = 0; i < B.degree(); ++i) p[A.degree() + i] = static_cast<std::uint16_t>(A.degree() + g[i]);
    gens.push_back(std::move(p));
  }
  return PermGroup::from_generators(d, std::move(gens));
}

// ---------------------------------------------------------------------------
// abelian invariants and fingerprints

namespace {

std::vector<long> abelian_type_from_orders(const std::vector<long>& orders, long group_order) {
  std::vector<long> primes;
  long n = group_order;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      primes.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) primes.push_back(n);
  std::vector<long> type;
  for (long r : primes) {
    // #elements whose r-part of order divides r^k grows by r^(number of type
    // parts >= k) at each step, which reads off the conjugate partition
    auto count_rpart_dividing = [&](long rk) {
      long cnt = 0;
      for (long o : orders) {
        long q = o;
        while (q % r == 0) q /= r;
        if (o / q <= rk) ++cnt;
      }
      return cnt;
    };
    std::vector<int> conj;  // conj[k-1] = number of parts >= k
    long prev = count_rpart_dividing(1);
    for (long rk = r;; rk *= r) {
      long cnt = count_rpart_dividing(rk);
      if (cnt == prev) break;
      long ratio = cnt / prev;
      int e = 0;
      while (ratio > 1) {
        ratio /= r;
        ++e;
      }
      conj.push_back(e);
      prev = cnt;
    }
    int maxpart = static_cast<int>(conj.size());
    for (int part = 1; part <= maxpart; ++part) {
      // multiplicity of part size 'part' = conj[part-1] - conj[part]
      int here = conj[part - 1] - (part < maxpart ? conj[part] : 0);
      for (int c = 0; c < here; ++c) {
        long v = 1;
        for (int i = 0; i < part; ++i) v *= r;
        type.push_back(v);
      }
    }
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

}  // namespace

std::vector<long> abelian_type(const PermGroup& G) {
  require(G.is_abelian(), errc::not_abelian, "abelian type of a non-abelian group");
  std::vector<long> orders;
  for (long i = 0; i < G.order(); ++i) orders.push_back(G.element_order(static_cast<int>(i)));
  return abelian_type_from_orders(orders, G.order());
}

std::vector<long> abelian_type_of_subgroup(const PermGroup& G, const std::vector<int>& sub) {
  std::vector<long> orders;
  for (int i : sub) orders.push_back(G.element_order(i));
  for (int a : sub)
    for (int b : sub)
      require(G.mul(a, b) == G.mul(b, a), errc::not_abelian, "subgroup is not abelian");
  return abelian_type_from_orders(orders, static_cast<long>(sub.size()));
}

std::string Fingerprint::str() const {
  std::ostringstream os;
  os << "o" << order << ".e" << exponent << ".z" << center_order << "[";
  for (size_t i = 0; i < center_type.size(); ++i) os << (i ? "," : "") << center_type[i];
  os << "].d" << derived_order << ".ab[";
  for (size_t i = 0; i < ab_type.size(); ++i) os << (i ? "," : "") << ab_type[i];
  os << "].os{";
  for (size_t i = 0; i < order_stats.size(); ++i)
    os << (i ? "," : "") << order_stats[i].first << ":" << order_stats[i].second;
  os << "}";
  return os.str();
}

Fingerprint fingerprint(const PermGroup& G) {
  Fingerprint fp;
  fp.order = G.order();
  std::map<long, long> stats;
  long expo = 1;
  for (long i = 0; i < G.order(); ++i) {
    long o = G.element_order(static_cast<int>(i));
    ++stats[o];
    expo = std::lcm(expo, o);
  }
  fp.exponent = expo;
  fp.order_stats.assign(stats.begin(), stats.end());
  std::vector<int> z = G.center();
  fp.center_order = static_cast<long>(z.size());
  fp.center_type = abelian_type_of_subgroup(G, z);
  std::vector<int> d = G.derived_subgroup();
  fp.derived_order = static_cast<long>(d.size());
  if (d.size() == G.elements().size()) {
    fp.ab_type = {};  // perfect group
  } else if (d.size() == 1) {
    fp.ab_type = abelian_type(G);
  } else {
    QuotientMap qm = quotient_group(G, d);
    fp.ab_type = abelian_type(qm.image);
  }
  return fp;
}

std::vector<long> class_size_multiset(const PermGroup& G) {
  ConjData cd = conjugacy_data(G, 2);
  std::vector<long> sizes;
  for (const auto& c : cd.classes) sizes.push_back(c.size);
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

}  // namespace llzb
