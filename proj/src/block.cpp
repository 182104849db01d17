#include "llzb/block.hpp"

#include <algorithm>
#include <numeric>

#include "llzb/pgroup.hpp"

namespace llzb {

long nu_p(long n, long p) {
  long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::vector<int> sylow_of_subgroup(const PermGroup& G, const std::vector<int>& elems, long p) {
  PermGroup H = G.materialize(elems);
  std::vector<int> local = sylow_subgroup(H, p);
  std::vector<int> out;
  out.reserve(local.size());
  for (int i : local) out.push_back(elems[i]);
  return out;
}

int splitting_degree(const PermGroup& G, long p) {
  long e = G.exponent();
  while (e % p == 0) e /= p;
  if (e == 1) return 1;
  long cur = p % e;
  int m = 1;
  while (cur != 1) {
    cur = (cur * p) % e;
    ++m;
  }
  return m;
}

namespace {

bool is_p_power_order(const PermGroup& G, int x, long p) {
  long o = G.element_order(x);
  while (o % p == 0) o /= p;
  return o == 1;
}

std::vector<u64> unit_vec(int dim, int i) {
  std::vector<u64> v(dim, 0);
  v[i] = 1;
  return v;
}

bool all_zero(const std::vector<u64>& v) {
  return std::all_of(v.begin(), v.end(), [](u64 x) { return x == 0; });
}

}  // namespace

BlockSet compute_blocks(PermGroupPtr G, long p, FqFieldPtr field_override) {
  require(is_prime(p), errc::not_prime, "p = " + std::to_string(p));
  BlockSet BS;
  BS.G = G;
  BS.p = p;
  BS.cd = conjugacy_data(*G, p);
  if (field_override) {
    require(field_override->p() == p, errc::field_mismatch, "override field has wrong characteristic");
    BS.Fsplit = field_override;
  } else {
    BS.Fsplit = make_field(p, splitting_degree(*G, p));
  }
  BS.Fp = BS.Fsplit->n() == 1 ? BS.Fsplit : make_field(p, 1);
  BS.Zp = class_algebra(*G, BS.cd, BS.Fp);
  BS.rad_p = radical(BS.Zp);
  BS.Z = extend_scalars(BS.Zp, BS.Fsplit);
  {
    std::vector<std::vector<u64>> rows;
    for (int r = 0; r < BS.rad_p.dim(); ++r) rows.push_back(BS.rad_p.basis().row(r));
    BS.rad = Subspace::span(BS.Fsplit, BS.Z.dim, rows);
    require(BS.rad.dim() == BS.rad_p.dim(), errc::internal_inconsistency,
            "radical dimension changed under scalar extension");
  }
  std::vector<std::vector<u64>> idems = primitive_idempotents(BS.Z);
  long n = G->order();
  long nup = nu_p(n, p);
  int k_total = 0, l_total = 0, principal_count = 0;
  for (size_t idx = 0; idx < idems.size(); ++idx) {
    Block B;
    B.index = static_cast<int>(idx);
    B.idempotent = idems[idx];
    B.center = summand(BS.Z, B.idempotent);
    B.k = B.center.alg.dim;
    B.center_radical = radical(B.center.alg);
    require(B.k - B.center_radical.dim() == 1, errc::internal_inconsistency,
            "block center is not local over the splitting field");
    B.omega.resize(BS.Z.dim);
    bool principal = true;
    for (int i = 0; i < BS.Z.dim; ++i) {
      std::vector<u64> v = BS.Z.mul(unit_vec(BS.Z.dim, i), B.idempotent);
      std::vector<u64> coords = B.center.from_parent(v);
      B.omega[i] = residue_scalar(B.center.alg, B.center_radical, coords);
      if (B.omega[i] != BS.Fsplit->from_int(BS.cd.classes[i].size)) principal = false;
    }
    B.principal = principal;
    principal_count += principal ? 1 : 0;
    long best = -1;
    for (int i = 0; i < BS.Z.dim; ++i)
      if (B.omega[i] != 0) best = std::max(best, nu_p(BS.cd.classes[i].size, p));
    B.defect = static_cast<int>(nup - best);
    for (int i = 0; i < BS.Z.dim; ++i)
      if (B.omega[i] != 0 && B.idempotent[i] != 0) {
        require(nu_p(BS.cd.classes[i].size, p) == best, errc::internal_inconsistency,
                "support class does not attain the defect");
        B.defect_class = i;
        break;
      }
    require(B.defect_class >= 0, errc::internal_inconsistency, "no defect class found");
    std::vector<int> cent = G->centralizer(BS.cd.classes[B.defect_class].representative);
    B.defect_group = sylow_of_subgroup(*G, cent, p);
    require(static_cast<long>(B.defect_group.size()) == [&] {
              long v = 1;
              for (int i = 0; i < B.defect; ++i) v *= p;
              return v;
            }(),
            errc::internal_inconsistency, "defect group order mismatch");
    B.defect_fingerprint = fingerprint(G->materialize(B.defect_group));
    B.reynolds_in_z = reynolds_ideal(BS.Z, BS.cd, &B.idempotent);
    B.l = B.reynolds_in_z.dim();
    require(B.l >= 1, errc::internal_inconsistency, "block without Brauer characters");
    B.loewy = loewy_series(B.center.alg, B.center_radical);
    B.ll_zb = B.loewy.loewy_length;
    {
      std::vector<std::vector<u64>> rrows;
      for (int r = 0; r < B.reynolds_in_z.dim(); ++r)
        rrows.push_back(B.center.from_parent(B.reynolds_in_z.basis().row(r)));
      Subspace R = Subspace::span(BS.Fsplit, B.k, rrows);
      require(R.dim() == B.l, errc::internal_inconsistency, "Reynolds rank changed in the summand");
      B.mod_reynolds = quotient_algebra(B.center.alg, R);
      if (B.mod_reynolds.alg.dim == 0) {
        B.ll_zb_mod_rb = 0;
      } else {
        Subspace rq = radical(B.mod_reynolds.alg);
        B.ll_zb_mod_rb = loewy_series(B.mod_reynolds.alg, rq).loewy_length;
      }
    }
    k_total += B.k;
    l_total += B.l;
    BS.blocks.push_back(std::move(B));
  }
  require(k_total == BS.Z.dim, errc::internal_inconsistency, "sum of k(B) misses the class count");
  require(l_total == static_cast<int>(BS.cd.sections.sections.size()), errc::internal_inconsistency,
          "sum of l(B) misses the section count");
  require(principal_count == 1, errc::internal_inconsistency, "principal block not unique");
  return BS;
}

CentralizerContext centralizer_context(const PermGroup& G, long p, const std::vector<int>& Q) {
  CentralizerContext C;
  C.elems_in_g = G.centralizer_of_set(Q);
  C.group = std::make_shared<const PermGroup>(G.materialize(C.elems_in_g));
  C.cd = conjugacy_data(*C.group, p);
  return C;
}

std::vector<u64> brauer_hom(const PermGroup& G, const ConjData& gcd, long p,
                            const std::vector<u64>& z, const std::vector<int>& Q,
                            const CentralizerContext& C) {
  for (int x : Q)
    require(is_p_power_order(G, x, p), errc::not_p_group, "Brauer homomorphism needs a p-subgroup");
  std::vector<u64> out(C.cd.classes.size(), 0);
  for (size_t cl = 0; cl < C.cd.classes.size(); ++cl) {
    int parent = C.elems_in_g[C.cd.classes[cl].representative];
    out[cl] = z[gcd.class_of[parent]];
  }
  return out;
}

std::vector<u64> induced_character(const BlockSet& GB, const BlockSet& HB,
                                   const std::vector<int>& h_elems, int hblock) {
  require(GB.Fsplit->same_as(*HB.Fsplit), errc::field_mismatch, "induction across fields");
  std::vector<u64> out(GB.cd.classes.size(), 0);
  const Block& b = HB.blocks[hblock];
  for (size_t cl = 0; cl < HB.cd.classes.size(); ++cl) {
    int parent = h_elems[HB.cd.classes[cl].representative];
    int gclass = GB.cd.class_of[parent];
    out[gclass] = GB.Fsplit->add(out[gclass], b.omega[cl]);
  }
  return out;
}

bool induced_block_is(const BlockSet& GB, int gblock, const BlockSet& HB,
                      const std::vector<int>& h_elems, int hblock) {
  return induced_character(GB, HB, h_elems, hblock) == GB.blocks[gblock].omega;
}

LocalData compute_local_data(const BlockSet& BS) {
  LocalData LD;
  const PermGroup& G = *BS.G;
  for (size_t cls = 0; cls < BS.cd.classes.size(); ++cls) {
    int u = BS.cd.classes[cls].representative;
    if (u == 0 || !is_p_power_order(G, u, BS.p)) continue;
    LocalDatum d;
    d.u_class = static_cast<int>(cls);
    d.u_order = G.element_order(u);
    std::vector<int> ucyc = G.cyclic(u);
    d.C = centralizer_context(G, BS.p, ucyc);
    d.blocks = compute_blocks(d.C.group, BS.p, BS.Fsplit);
    for (size_t b = 0; b < d.blocks.blocks.size(); ++b)
      d.induced_omega.push_back(induced_character(BS, d.blocks, d.C.elems_in_g, static_cast<int>(b)));
    std::vector<int> ucyc_local;
    for (int x : ucyc) {
      auto it = std::lower_bound(d.C.elems_in_g.begin(), d.C.elems_in_g.end(), x);
      require(it != d.C.elems_in_g.end() && *it == x, errc::internal_inconsistency,
              "u missing from its centralizer");
      ucyc_local.push_back(static_cast<int>(it - d.C.elems_in_g.begin()));
    }
    std::sort(ucyc_local.begin(), ucyc_local.end());
    d.quot = quotient_group(*d.C.group, ucyc_local);
    d.qblocks = compute_blocks(std::make_shared<const PermGroup>(d.quot.image), BS.p, BS.Fsplit);
    for (size_t b = 0; b < d.blocks.blocks.size(); ++b)
      d.dominated.push_back(
          dominated_block(d.blocks, static_cast<int>(b), ucyc_local, d.quot, d.qblocks).quotient_block);
    LD.data.push_back(std::move(d));
  }
  return LD;
}

std::vector<Subsection> subsections(const BlockSet& BS, const LocalData& LD, int block) {
  std::vector<Subsection> subs;
  const std::vector<u64>& target = BS.blocks[block].omega;
  for (size_t di = 0; di < LD.data.size(); ++di) {
    const LocalDatum& d = LD.data[di];
    std::vector<int> found;
    for (size_t b = 0; b < d.blocks.blocks.size(); ++b)
      if (d.induced_omega[b] == target) found.push_back(static_cast<int>(b));
    // Fusion under N_G(<u>): conjugation fixing the representative u lies in
    // C_G(u) and fixes every block, so the orbits are singletons; verify.
    const PermGroup& G = *BS.G;
    int u = BS.cd.classes[d.u_class].representative;
    std::vector<int> norm = G.normalizer_of_set(G.cyclic(u));
    for (int g : G.minimal_generators(norm)) {
      if (G.conjugate(u, g) != u) continue;
      for (int b : found) {
        std::vector<u64> w =
            class_vector_to_elements(d.blocks.cd, d.blocks.blocks[b].idempotent, d.C.group->order());
        std::vector<u64> w2(w.size(), 0);
        for (size_t x = 0; x < w.size(); ++x) {
          int px = d.C.elems_in_g[x];
          int py = G.conjugate(px, g);
          auto it = std::lower_bound(d.C.elems_in_g.begin(), d.C.elems_in_g.end(), py);
          require(it != d.C.elems_in_g.end() && *it == py, errc::internal_inconsistency,
                  "conjugation left the centralizer");
          w2[it - d.C.elems_in_g.begin()] = w[x];
        }
        std::vector<u64> conj_idem = elements_to_class_vector(*d.blocks.Fsplit, d.blocks.cd, w2);
        require(conj_idem == d.blocks.blocks[b].idempotent, errc::internal_inconsistency,
                "subsection fusion merged distinct pairs");
      }
    }
    for (int b : found) subs.push_back(Subsection{static_cast<int>(di), b});
  }
  return subs;
}

DominationResult dominated_block(const BlockSet& HB, int hblock, const std::vector<int>& N,
                                 const QuotientMap& qm, const BlockSet& QB) {
  const PermGroup& H = *HB.G;
  for (int x : N) {
    require(is_p_power_order(H, x, HB.p), errc::not_p_group, "domination needs a central p-subgroup");
    for (int g : H.generator_indices())
      require(H.mul(x, g) == H.mul(g, x), errc::internal_inconsistency,
              "domination needs a central subgroup");
  }
  const FqField& F = *HB.Fsplit;
  std::vector<u64> w = class_vector_to_elements(HB.cd, HB.blocks[hblock].idempotent, H.order());
  std::vector<u64> w2(qm.image.order(), 0);
  for (long x = 0; x < H.order(); ++x)
    w2[qm.element_map[x]] = F.add(w2[qm.element_map[x]], w[x]);
  DominationResult res;
  res.image = elements_to_class_vector(F, QB.cd, w2);
  require(QB.Z.mul(res.image, res.image) == res.image, errc::domination_failure,
          "image of the block idempotent is not idempotent");
  for (size_t qb = 0; qb < QB.blocks.size(); ++qb)
    if (QB.blocks[qb].idempotent == res.image) {
      res.quotient_block = static_cast<int>(qb);
      return res;
    }
  fail(errc::domination_failure, "image idempotent is not primitive");
}

InertialData inertial_quotient(const BlockSet& BS, int block) {
  const PermGroup& G = *BS.G;
  const Block& B = BS.blocks[block];
  InertialData id;
  id.defect_group = B.defect_group;
  PermGroup D = G.materialize(B.defect_group);
  std::vector<int> zd_local = D.center();
  std::vector<int> zd;  // in G
  for (int i : zd_local) zd.push_back(B.defect_group[i]);
  id.center_of_d = G.materialize(zd);
  if (B.defect_group.size() == 1) {
    id.order = 1;
    id.action_on_d = PermGroup::from_generators(1, {});
    id.action_on_z = PermGroup::from_generators(1, {});
    id.c = 1;
    id.z = 1;
    return id;
  }
  CentralizerContext C = centralizer_context(G, BS.p, B.defect_group);
  BlockSet CDB = compute_blocks(C.group, BS.p, BS.Fsplit);
  int bD = -1;
  for (size_t cb = 0; cb < CDB.blocks.size(); ++cb)
    if (induced_block_is(BS, block, CDB, C.elems_in_g, static_cast<int>(cb))) {
      bD = static_cast<int>(cb);
      break;
    }
  require(bD >= 0, errc::correspondence_failure, "no Brauer correspondent in C_G(D)");
  std::vector<int> norm = G.normalizer_of_set(B.defect_group);
  std::vector<u64> wD =
      class_vector_to_elements(CDB.cd, CDB.blocks[bD].idempotent, C.group->order());
  std::vector<int> T;
  for (int g : norm) {
    std::vector<u64> w2(wD.size(), 0);
    bool inside = true;
    for (size_t x = 0; x < wD.size() && inside; ++x) {
      if (!wD[x]) continue;
      int py = G.conjugate(C.elems_in_g[x], g);
      auto it = std::lower_bound(C.elems_in_g.begin(), C.elems_in_g.end(), py);
      if (it == C.elems_in_g.end() || *it != py)
        inside = false;
      else
        w2[it - C.elems_in_g.begin()] = wD[x];
    }
    if (inside && w2 == wD) T.push_back(g);
  }
  // |D C_G(D)| = |D| |C| / |Z(D)|
  long dc = static_cast<long>(B.defect_group.size()) * C.group->order() /
            static_cast<long>(zd.size());
  require(static_cast<long>(T.size()) % dc == 0, errc::internal_inconsistency,
          "stabilizer order not divisible by |D C_G(D)|");
  id.order = static_cast<long>(T.size()) / dc;
  require(id.order % BS.p != 0, errc::internal_inconsistency, "inertial quotient not a p'-group");
  std::vector<int> tgens = G.minimal_generators(T);
  std::vector<Perm> on_d, on_z;
  for (int g : tgens) {
    std::vector<int> fd = automorphism_from_conjugation(G, B.defect_group, g);
    on_d.push_back(Perm(fd.begin(), fd.end()));
    std::vector<int> fz = automorphism_from_conjugation(G, zd, g);
    on_z.push_back(Perm(fz.begin(), fz.end()));
  }
  id.action_on_d = PermGroup::from_generators(static_cast<int>(B.defect_group.size()), on_d);
  id.action_on_z = PermGroup::from_generators(static_cast<int>(zd.size()), on_z);
  require(id.action_on_d.order() * C.group->order() == static_cast<long>(T.size()),
          errc::internal_inconsistency, "Aut(D) image order mismatch");
  if (D.is_abelian())
    require(id.action_on_d.order() == id.order, errc::internal_inconsistency,
            "abelian defect: image must equal I(B)");
  require(id.action_on_z.order() % BS.p != 0, errc::internal_inconsistency,
          "action on Z(D) must be a p'-group");
  FixedPointData fd = fixed_point_data(id.center_of_d, id.action_on_z, BS.p);
  id.c = fd.dim;
  id.z = fd.ll;
  return id;
}

std::pair<int, int> cz_invariants(const InertialData& id) { return {id.c, id.z}; }

EmbeddingReport embedding_check(const BlockSet& BS, const LocalData& LD, int block) {
  const Block& B = BS.blocks[block];
  std::vector<Subsection> subs = subsections(BS, LD, block);
  EmbeddingReport rep;
  rep.dim_lhs = B.mod_reynolds.alg.dim;
  for (const auto& s : subs) {
    const Block& lb = LD.data[s.datum].blocks.blocks[s.local_block];
    rep.dim_rhs += lb.mod_reynolds.alg.dim;
    rep.max_local_ll_mod = std::max(rep.max_local_ll_mod, lb.ll_zb_mod_rb);
  }
  // phi(z) = sum Br_{<u_i>}(z) 1_{b_i} mod Rb_i, assembled per subsection
  auto component_map = [&](const std::vector<u64>& z_in_classes) {
    std::vector<u64> out;
    for (const auto& s : subs) {
      const LocalDatum& d = LD.data[s.datum];
      const Block& lb = d.blocks.blocks[s.local_block];
      std::vector<u64> zc(d.blocks.cd.classes.size(), 0);
      for (size_t cl = 0; cl < d.blocks.cd.classes.size(); ++cl) {
        int parent = d.C.elems_in_g[d.blocks.cd.classes[cl].representative];
        zc[cl] = z_in_classes[BS.cd.class_of[parent]];
      }
      std::vector<u64> v = d.blocks.Z.mul(zc, lb.idempotent);
      std::vector<u64> coords = lb.center.from_parent(v);
      std::vector<u64> q = lb.mod_reynolds.reduce(coords);
      out.insert(out.end(), q.begin(), q.end());
    }
    return out;
  };
  std::vector<std::vector<u64>> lhs_basis_z;
  for (int a = 0; a < B.mod_reynolds.alg.dim; ++a) {
    std::vector<u64> coords = unit_vec(B.mod_reynolds.alg.dim, a);
    std::vector<u64> in_center = B.mod_reynolds.lift(coords);
    lhs_basis_z.push_back(B.center.to_parent(in_center));
  }
  std::vector<std::vector<u64>> rows;
  for (const auto& z : lhs_basis_z) rows.push_back(component_map(z));
  if (rep.dim_lhs == 0) {
    rep.injective = true;
  } else if (rep.dim_rhs == 0) {
    rep.injective = false;
  } else {
    Matrix m = matrix_from_rows(BS.Fsplit, rows, rep.dim_rhs);
    rep.injective = left_kernel(m).rows == 0;
  }
  rep.reynolds_vanishes = true;
  for (int r = 0; r < B.reynolds_in_z.dim(); ++r)
    if (!all_zero(component_map(B.reynolds_in_z.basis().row(r)))) rep.reynolds_vanishes = false;
  rep.multiplicative = true;
  for (int a = 0; a < B.mod_reynolds.alg.dim && rep.multiplicative; ++a)
    for (int b = 0; b < B.mod_reynolds.alg.dim && rep.multiplicative; ++b) {
      std::vector<u64> prod_coords =
          B.mod_reynolds.alg.mul(unit_vec(B.mod_reynolds.alg.dim, a), unit_vec(B.mod_reynolds.alg.dim, b));
      std::vector<u64> lhs_image = component_map(B.center.to_parent(B.mod_reynolds.lift(prod_coords)));
      // componentwise product of the images
      std::vector<u64> rhs_image;
      size_t off = 0;
      std::vector<u64> fa = rows[a], fb = rows[b];
      for (const auto& s : subs) {
        const Block& lb = LD.data[s.datum].blocks.blocks[s.local_block];
        int dq = lb.mod_reynolds.alg.dim;
        std::vector<u64> xa(fa.begin() + off, fa.begin() + off + dq);
        std::vector<u64> xb(fb.begin() + off, fb.begin() + off + dq);
        std::vector<u64> prod = lb.mod_reynolds.alg.mul(xa, xb);
        rhs_image.insert(rhs_image.end(), prod.begin(), prod.end());
        off += dq;
      }
      if (lhs_image != rhs_image) rep.multiplicative = false;
    }
  return rep;
}

}  // namespace llzb
