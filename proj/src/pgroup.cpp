#include "llzb/pgroup.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "llzb/catalog.hpp"

namespace llzb {

namespace {

bool is_power_of(long n, long p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

int log_base(long n, long p) {
  int e = 0;
  while (n > 1) {
    n /= p;
    ++e;
  }
  return e;
}

long ipow(long b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

long abelian_ll_of_type(const std::vector<long>& type) {
  long s = 1;
  for (long f : type) s += f - 1;
  return s;
}

long abelian_ll(const PermGroup& P, long p) {
  require(is_power_of(P.order(), p), errc::not_p_group, "abelian_ll needs a p-group");
  require(P.is_abelian(), errc::not_abelian, "abelian_ll needs an abelian group");
  return abelian_ll_of_type(abelian_type(P));
}

JenningsData jennings_data(const PermGroup& P, long p) {
  require(is_power_of(P.order(), p), errc::not_p_group, "Jennings series needs a p-group");
  JenningsData jd;
  jd.dimension_subgroups.push_back(P.whole());
  std::vector<int> gi = P.generator_indices();
  while (jd.dimension_subgroups.back().size() > 1) {
    int i = static_cast<int>(jd.dimension_subgroups.size()) + 1;  // computing D_i
    const std::vector<int>& prev = jd.dimension_subgroups.back();
    const std::vector<int>& pow_src = jd.dimension_subgroups[(i + static_cast<int>(p) - 1) / p - 1];
    std::vector<int> seed;
    for (int x : prev)
      for (int g : gi) seed.push_back(P.mul(P.mul(P.inv(x), P.inv(g)), P.mul(x, g)));
    for (int x : pow_src) seed.push_back(P.power(x, p));
    std::vector<int> Di = P.closure(seed);
    // normal closure under P (commutator/power subgroups are normal, but the
    // generating set above is not closed under conjugation a priori)
    for (;;) {
      std::vector<int> grow = Di;
      bool stable = true;
      for (int x : Di)
        for (int g : gi)
          if (!std::binary_search(Di.begin(), Di.end(), P.conjugate(x, g))) {
            grow.push_back(P.conjugate(x, g));
            stable = false;
          }
      if (stable) break;
      Di = P.closure(grow);
    }
    jd.dimension_subgroups.push_back(Di);
  }
  // chain axioms: [D_i, D_j] <= D_{i+j}, (D_i)^p <= D_{ip}
  auto sub_at = [&](size_t idx) -> const std::vector<int>& {
    static const std::vector<int> trivial{0};
    if (idx - 1 < jd.dimension_subgroups.size()) return jd.dimension_subgroups[idx - 1];
    return trivial;
  };
  size_t depth = jd.dimension_subgroups.size();
  for (size_t i = 1; i <= depth; ++i)
    for (size_t j = 1; j <= depth; ++j) {
      const auto& A = sub_at(i);
      const auto& Bv = sub_at(j);
      const auto& target = sub_at(std::min(i + j, depth + 1));
      for (int a : A)
        for (int b : Bv) {
          int c = P.mul(P.mul(P.inv(a), P.inv(b)), P.mul(a, b));
          require(std::binary_search(target.begin(), target.end(), c), errc::internal_inconsistency,
                  "Jennings chain violates [D_i,D_j] <= D_{i+j}");
        }
    }
  for (size_t i = 1; i <= depth; ++i) {
    const auto& A = sub_at(i);
    size_t ip = i * static_cast<size_t>(p);
    const auto& target = sub_at(std::min(ip, depth + 1));
    for (int a : A)
      require(std::binary_search(target.begin(), target.end(), P.power(a, p)),
              errc::internal_inconsistency, "Jennings chain violates (D_i)^p <= D_{ip}");
  }
  for (size_t i = 0; i + 1 < jd.dimension_subgroups.size(); ++i)
    jd.d.push_back(log_base(static_cast<long>(jd.dimension_subgroups[i].size()) /
                                static_cast<long>(jd.dimension_subgroups[i + 1].size()),
                            p));
  return jd;
}

long jennings_ll(const PermGroup& P, long p) {
  JenningsData jd = jennings_data(P, p);
  long s = 0;
  for (size_t i = 0; i < jd.d.size(); ++i) s += static_cast<long>(i + 1) * jd.d[i];
  return 1 + (p - 1) * s;
}

const char* pgroup_tag_name(PGroupTag t) {
  switch (t) {
    case PGroupTag::Abelian: return "abelian";
    case PGroupTag::M: return "M";
    case PGroupTag::W: return "W";
    case PGroupTag::Dihedral: return "dihedral";
    case PGroupTag::Quaternion: return "quaternion";
    case PGroupTag::Semidihedral: return "semidihedral";
    case PGroupTag::C4SemiC4: return "C4:C4";
    case PGroupTag::MNA21: return "MNA(2,1)";
    case PGroupTag::D8xC2: return "D8xC2";
    case PGroupTag::Q8xC2: return "Q8xC2";
    case PGroupTag::Other: return "other";
  }
  return "other";
}

namespace {

// one-time sanity check: the recognizer separates all 14 groups of order 16
void validate_order16_recognizers();

PGroupClass recognize_impl(const PermGroup& P) {
  PGroupClass pc;
  long n = P.order();
  long p = 2;
  for (long d = 2; d <= n; ++d)
    if (n % d == 0) {
      p = d;
      break;
    }
  require(n == 1 || is_power_of(n, p), errc::not_p_group, "recognizer needs a p-group");
  pc.p = p;
  pc.d = log_base(n, p);
  if (P.is_abelian()) {
    pc.tag = PGroupTag::Abelian;
    pc.abelian = n == 1 ? std::vector<long>{} : abelian_type(P);
    return pc;
  }
  Fingerprint fp = fingerprint(P);
  auto involutions = [&]() {
    for (auto& [o, c] : fp.order_stats)
      if (o == 2) return c;
    return 0L;
  }();
  long half = n / 2, quarter = n / 4;
  if (p == 2) {
    if (fp.exponent == half && fp.center_order == 2 && involutions == half + 1) {
      pc.tag = PGroupTag::Dihedral;
      return pc;
    }
    if (involutions == 1) {
      pc.tag = PGroupTag::Quaternion;
      return pc;
    }
    if (pc.d >= 4 && fp.exponent == half && fp.center_order == 2 && involutions == quarter + 1) {
      pc.tag = PGroupTag::Semidihedral;
      return pc;
    }
  }
  long zsize = ipow(p, pc.d - 2);
  bool z_cyclic = fp.center_type.size() == 1;
  if (pc.d >= 3 && fp.exponent == ipow(p, pc.d - 1) && fp.center_order == zsize && z_cyclic) {
    pc.tag = PGroupTag::M;
    return pc;
  }
  long wexp = (p == 2) ? std::max<long>(zsize, 4) : zsize;
  if (pc.d >= 3 && fp.center_order == zsize && z_cyclic && fp.exponent == wexp &&
      fp.derived_order == p) {
    pc.tag = PGroupTag::W;
    return pc;
  }
  if (n == 16) {
    validate_order16_recognizers();
    if (involutions == 7) {
      pc.tag = PGroupTag::MNA21;
      return pc;
    }
    if (involutions == 11) {
      pc.tag = PGroupTag::D8xC2;
      return pc;
    }
    if (involutions == 3 && fp.ab_type == std::vector<long>{4, 2}) {
      pc.tag = PGroupTag::C4SemiC4;
      return pc;
    }
    if (involutions == 3 && fp.ab_type == std::vector<long>{2, 2, 2}) {
      pc.tag = PGroupTag::Q8xC2;
      return pc;
    }
  }
  pc.tag = PGroupTag::Other;
  return pc;
}

void validate_order16_recognizers() {
  static std::once_flag flag;
  std::call_once(flag, [] {
    struct Entry {
      PermGroup g;
      PGroupTag expect;
    };
    std::vector<Entry> entries;
    entries.push_back({cyclic_group(16), PGroupTag::Abelian});
    entries.push_back({abelian_group({8, 2}), PGroupTag::Abelian});
    entries.push_back({abelian_group({4, 4}), PGroupTag::Abelian});
    entries.push_back({abelian_group({4, 2, 2}), PGroupTag::Abelian});
    entries.push_back({abelian_group({2, 2, 2, 2}), PGroupTag::Abelian});
    entries.push_back({dihedral_group(16), PGroupTag::Dihedral});
    entries.push_back({quaternion_group(16), PGroupTag::Quaternion});
    entries.push_back({semidihedral_group(16), PGroupTag::Semidihedral});
    entries.push_back({modular_group(2, 4), PGroupTag::M});
    entries.push_back({central_product_w(2, 4), PGroupTag::W});
    entries.push_back({direct_product(dihedral_group(8), cyclic_group(2)), PGroupTag::D8xC2});
    entries.push_back({direct_product(quaternion_group(8), cyclic_group(2)), PGroupTag::Q8xC2});
    entries.push_back({mna21_group(), PGroupTag::MNA21});
    entries.push_back({c4_semi_c4_group(), PGroupTag::C4SemiC4});
    std::vector<std::string> fps;
    for (auto& e : entries) {
      require(recognize_impl(e.g).tag == e.expect, errc::internal_inconsistency,
              "order-16 recognizer certification failed");
      fps.push_back(fingerprint(e.g).str());
    }
    std::sort(fps.begin(), fps.end());
    require(std::adjacent_find(fps.begin(), fps.end()) == fps.end(), errc::internal_inconsistency,
            "order-16 fingerprints collide");
  });
}

}  // namespace

PGroupClass recognize(const PermGroup& P) { return recognize_impl(P); }

namespace {

struct ScriptLEntry {
  std::vector<long> class_sizes;
  long value;
};

std::map<std::string, std::vector<ScriptLEntry>>& script_l_cache() {
  static std::map<std::string, std::vector<ScriptLEntry>> cache;
  return cache;
}
std::mutex script_l_mutex;

}  // namespace

long script_l(const PermGroup& P) {
  PGroupClass pc = recognize(P);
  long p = pc.p;
  if (pc.tag == PGroupTag::Abelian) return abelian_ll_of_type(pc.abelian);
  long n = P.order();
  if (pc.tag == PGroupTag::M && n != 8) return ipow(p, pc.d - 2);
  if (pc.tag == PGroupTag::W && n != 16 && n != 8) return ipow(p, pc.d - 1) - p + 1;
  if (n == 8) return 3;  // D8, Q8 (M8/W8 coincide with D8)
  if (n == 16) {
    switch (pc.tag) {
      case PGroupTag::C4SemiC4: return 3;
      case PGroupTag::MNA21:
      case PGroupTag::D8xC2:
      case PGroupTag::Q8xC2: return 4;
      case PGroupTag::Dihedral:
      case PGroupTag::Quaternion:
      case PGroupTag::Semidihedral:
      case PGroupTag::W: return 5;
      default: break;
    }
  }
  Fingerprint fp = fingerprint(P);
  std::string key = fp.str();
  std::vector<long> sizes = class_size_multiset(P);
  {
    std::lock_guard<std::mutex> lock(script_l_mutex);
    auto it = script_l_cache().find(key);
    if (it != script_l_cache().end())
      for (auto& e : it->second)
        if (e.class_sizes == sizes) return e.value;
  }
  ConjData cd = conjugacy_data(P, p);
  long best = 0;
  for (const auto& cls : cd.classes) {
    int u = cls.representative;
    if (u == 0) continue;
    long u_order = P.element_order(u);
    std::vector<int> cyc = P.cyclic(u);
    std::vector<int> cent = P.centralizer(u);
    PermGroup C = P.materialize(cent);
    std::vector<int> cyc_local;
    for (int x : cyc)
      cyc_local.push_back(static_cast<int>(std::lower_bound(cent.begin(), cent.end(), x) - cent.begin()));
    std::sort(cyc_local.begin(), cyc_local.end());
    QuotientMap qm = quotient_group(C, cyc_local);
    best = std::max(best, (u_order - 1) * script_l(qm.image));
  }
  long value = best + 1;
  {
    std::lock_guard<std::mutex> lock(script_l_mutex);
    script_l_cache()[key].push_back({sizes, value});
  }
  return value;
}

FixedPointData fixed_point_data(const PermGroup& P, const PermGroup& I, long p) {
  require(is_power_of(P.order(), p), errc::not_p_group, "fixed points need a p-group");
  require(P.is_abelian(), errc::not_abelian, "fixed points implemented for abelian P");
  require(I.degree() == P.order(), errc::dimension_mismatch, "I must act on the elements of P");
  require(I.order() % p != 0, errc::not_coprime, "|I| must be coprime to p");
  long n = P.order();
  FqFieldPtr F = make_field(p, 1);
  FixedPointData fd;
  // orbits of I on the points 0..n-1
  std::vector<int> orbit_of(n, -1);
  std::vector<std::vector<int>> orbits;
  std::vector<int> igens = I.generator_indices();
  for (long x = 0; x < n; ++x) {
    if (orbit_of[x] >= 0) continue;
    int id = static_cast<int>(orbits.size());
    std::vector<int> orb{static_cast<int>(x)};
    orbit_of[x] = id;
    for (size_t head = 0; head < orb.size(); ++head)
      for (int g : igens) {
        int y = I.elements()[g][orb[head]];
        if (orbit_of[y] < 0) {
          orbit_of[y] = id;
          orb.push_back(y);
        }
      }
    std::sort(orb.begin(), orb.end());
    orbits.push_back(std::move(orb));
  }
  fd.dim = static_cast<int>(orbits.size());
  GroupAlgebra FP{&P, F};
  std::vector<std::vector<u64>> orbit_sums;
  for (const auto& orb : orbits) {
    std::vector<u64> v(n, 0);
    for (int x : orb) v[x] = 1;
    orbit_sums.push_back(std::move(v));
  }
  Subspace FPI = Subspace::span(F, static_cast<int>(n), orbit_sums);
  std::vector<std::vector<u64>> aug;
  for (long g = 1; g < n; ++g) {
    std::vector<u64> v(n, 0);
    v[g] = 1;
    v[0] = F->neg(1);
    aug.push_back(std::move(v));
  }
  Subspace JFP = Subspace::span(F, static_cast<int>(n), aug);
  Subspace JI = FPI.intersect(JFP);
  require(JI.dim() == fd.dim - 1, errc::internal_inconsistency, "fixed-point algebra is not local");
  Subspace cur = JI;
  int positive_powers = 0;
  BilinearMap mult = FP.bilinear();
  while (cur.dim() > 0) {
    ++positive_powers;
    Subspace next = subspace_product(mult, cur, JI);
    require(next.dim() < cur.dim(), errc::not_nilpotent, "fixed-point powers stalled");
    cur = next;
  }
  fd.ll = positive_powers + 1;
  // C_P(I) and [P, I]
  for (long x = 0; x < n; ++x) {
    bool fixed = true;
    for (int g : igens)
      if (I.elements()[g][x] != x) {
        fixed = false;
        break;
      }
    if (fixed) fd.centralizer.push_back(static_cast<int>(x));
  }
  std::vector<int> seed;
  for (long x = 0; x < n; ++x)
    for (int g : igens) seed.push_back(P.mul(P.inv(static_cast<int>(x)), I.elements()[g][x]));
  fd.commutator = P.closure(seed);
  // semiregularity on [P,I] \ {1}
  fd.semiregular = true;
  for (int x : fd.commutator) {
    if (x == 0) continue;
    if (static_cast<long>(orbits[orbit_of[x]].size()) != I.order()) {
      fd.semiregular = false;
      break;
    }
  }
  fd.ll_centralizer = abelian_ll_of_type(abelian_type_of_subgroup(P, fd.centralizer));
  fd.ll_commutator = abelian_ll_of_type(abelian_type_of_subgroup(P, fd.commutator));
  fd.bound_holds = 2 * (fd.ll - fd.ll_centralizer) <= fd.ll_commutator - 1;
  fd.bound_equality = 2 * (fd.ll - fd.ll_centralizer) == fd.ll_commutator - 1;
  return fd;
}

}  // namespace llzb
