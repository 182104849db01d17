#include "llzb/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "llzb/catalog.hpp"

namespace llzb {

namespace {

long ipow(long b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

bool radical_double_oracle(const BlockSet& BS) {
  // p-power-map kernel vs intersection of central character kernels
  Matrix M(BS.Fsplit, BS.Z.dim, static_cast<int>(BS.blocks.size()));
  for (int i = 0; i < BS.Z.dim; ++i)
    for (size_t b = 0; b < BS.blocks.size(); ++b) M.at(i, static_cast<int>(b)) = BS.blocks[b].omega[i];
  Matrix K = left_kernel(M);
  std::vector<std::vector<u64>> rows;
  for (int r = 0; r < K.rows; ++r) rows.push_back(K.row(r));
  Subspace char_kernel = Subspace::span(BS.Fsplit, BS.Z.dim, rows);
  return char_kernel == BS.rad;
}

bool field_stability(const BlockSet& BS) {
  // every F_p-central idempotent is a Galois orbit sum of splitting-field
  // blocks; its summand must have the same Loewy length as each of them
  std::vector<std::vector<u64>> comps = central_idempotent_decomposition(BS.Zp);
  for (const auto& ehat : comps) {
    SubalgebraView V = summand(BS.Zp, ehat);
    int llp = loewy_series(V.alg, radical(V.alg)).loewy_length;
    bool covered = false;
    for (const auto& B : BS.blocks) {
      std::vector<u64> prod = BS.Z.mul(ehat, B.idempotent);  // prime-field coords embed as-is
      if (prod == B.idempotent) {
        covered = true;
        if (B.ll_zb != llp) return false;
      }
    }
    if (!covered) return false;
  }
  // whole-center Loewy length over both fields
  int ll_p = loewy_series(BS.Zp, BS.rad_p).loewy_length;
  int ll_split = loewy_series(BS.Z, BS.rad).loewy_length;
  return ll_p == ll_split;
}

bool brauer_principal_nonzero(const BlockSet& BS) {
  const Block* principal = nullptr;
  for (const auto& B : BS.blocks)
    if (B.principal) principal = &B;
  require(principal != nullptr, errc::internal_inconsistency, "no principal block");
  std::vector<int> syl = sylow_subgroup(*BS.G, BS.p);
  CentralizerContext C = centralizer_context(*BS.G, BS.p, syl);
  std::vector<u64> img = brauer_hom(*BS.G, BS.cd, BS.p, principal->idempotent, syl, C);
  return !std::all_of(img.begin(), img.end(), [](u64 x) { return x == 0; });
}

std::vector<BoundRecord> bound_suite(const BlockSet& BS, const LocalData& LD, int bidx,
                                     const std::vector<Subsection>& subs, const PGroupClass& pc,
                                     const PermGroup& D, int c, int z) {
  const Block& B = BS.blocks[bidx];
  long p = BS.p;
  long dorder = D.order();
  int d = 0;
  for (long v = dorder; v > 1; v /= p) ++d;
  std::vector<BoundRecord> out;
  auto add = [&](const std::string& name, bool applicable, long bound, bool holds_when, long observed) {
    BoundRecord r;
    r.name = name;
    r.applicable = applicable;
    r.bound_value = bound;
    r.observed = observed;
    r.holds = !applicable || holds_when;
    out.push_back(r);
  };
  long ll = B.ll_zb;
  add("okuyama", true, dorder, ll <= dorder, ll);
  long otokita = dorder - dorder / D.exponent() + 1;
  add("otokita", true, otokita, ll <= otokita, ll);
  bool abelian = pc.tag == PGroupTag::Abelian;
  long llfd = abelian ? abelian_ll_of_type(pc.abelian) : 0;
  add("abelianThm", abelian, llfd, ll <= llfd && B.ll_zb_mod_rb <= llfd - 1, ll);
  bool cyclic = abelian && pc.abelian.size() <= 1;
  long cyc_bound = cyclic && B.l > 0 && (dorder - 1) % B.l == 0 ? (dorder - 1) / B.l + 1 : 0;
  add("cyclicFormula", cyclic, cyc_bound, cyc_bound != 0 && ll == cyc_bound, ll);
  add("czBound", true, B.k - B.l + z - c + 1, ll <= B.k - B.l + z - c + 1, ll);
  bool p3minus = pc.tag == PGroupTag::M ||
                 (dorder == 8 && (pc.tag == PGroupTag::Dihedral || pc.tag == PGroupTag::Quaternion));
  if (p3minus && dorder == 8) {
    add("p3minus", true, 3, ll <= 3, ll);
  } else if (p3minus) {
    long bound = ipow(p, d - 2);
    bool equality = B.l > 0 && (bound - 1) % B.l == 0 && ll == (bound - 1) / B.l + 1;
    add("p3minus", true, bound, ll <= bound && equality, ll);
  } else {
    add("p3minus", false, 0, true, ll);
  }
  add("p3plus", pc.tag == PGroupTag::W, pc.tag == PGroupTag::W ? ipow(p, d - 1) - p + 1 : 0,
      ll <= ipow(p, d - 1) - p + 1, ll);
  bool nonabel = !abelian;
  long nonabel_bound = nonabel ? ipow(p, d - 1) + ipow(p, d - 2) - ipow(p, d - 3) : 0;
  add("nonabelThm", nonabel, nonabel_bound, ll <= nonabel_bound, ll);
  bool l2 = nonabel && p == 2;
  add("large2", l2, l2 ? ipow(2, d - 1) - 1 : 0, ll <= ipow(2, d - 1) - 1, ll);
  long oto = 1;
  for (const auto& s : subs) {
    const LocalDatum& ld = LD.data[s.datum];
    long llbar = ld.qblocks.blocks[ld.dominated[s.local_block]].ll_zb;
    oto = std::max(oto, (ld.u_order - 1) * llbar + 1);
  }
  add("otometh", true, oto, ll <= oto, ll);
  long sl = script_l(D);
  add("scriptL", true, sl, ll <= sl, ll);
  return out;
}

ClassificationResult classify_large(const BlockSet& BS, int bidx, const PGroupClass& pc,
                                    long dorder, bool nilpotent) {
  const Block& B = BS.blocks[bidx];
  ClassificationResult res;
  res.qualifies = 2L * B.ll_zb >= dorder;
  bool abelian = pc.tag == PGroupTag::Abelian;
  std::string matched = "none";
  if (abelian && pc.abelian.size() <= 1 && B.l <= 2) {
    matched = "i";
  } else if (BS.p == 2 && abelian && pc.abelian.size() == 2 && pc.abelian[1] == 2) {
    matched = "ii";
  } else if (abelian && pc.abelian == std::vector<long>{2, 2, 2} && nilpotent) {
    matched = "iii";
  } else if (abelian && pc.abelian == std::vector<long>{3, 3} && nilpotent) {
    matched = "iv";
  }
  res.matched_case = matched;
  res.consistent = res.qualifies == (matched != "none");
  return res;
}

}  // namespace

GroupAnalysis analyze_group(const std::string& name, PermGroupPtr G, long p,
                            long embedding_order_limit) {
  GroupAnalysis row;
  row.name = name;
  row.order = G->order();
  row.prime = p;
  BlockSet BS = compute_blocks(G, p);
  LocalData LD = compute_local_data(BS);
  row.radical_oracle_ok = radical_double_oracle(BS);
  row.field_stability_ok = field_stability(BS);
  row.brauer_principal_nonzero = brauer_principal_nonzero(BS);
  for (size_t b = 0; b < BS.blocks.size(); ++b) {
    const Block& B = BS.blocks[b];
    BlockAnalysis ba;
    ba.block_index = static_cast<int>(b);
    ba.principal = B.principal;
    ba.k = B.k;
    ba.l = B.l;
    ba.defect = B.defect;
    ba.defect_group_order = static_cast<long>(B.defect_group.size());
    ba.defect_fingerprint = B.defect_fingerprint.str();
    ba.loewy_dims = B.loewy.dims;
    ba.ll_zb = B.ll_zb;
    ba.ll_zb_mod_rb = B.ll_zb_mod_rb;
    PermGroup D = G->materialize(B.defect_group);
    PGroupClass pc = recognize(D);
    ba.defect_tag = pgroup_tag_name(pc.tag);
    std::vector<Subsection> subs = subsections(BS, LD, static_cast<int>(b));
    ba.subsection_count = static_cast<int>(subs.size());
    long sum_l = 0;
    bool all_local_l_one = true;
    for (const auto& s : subs) {
      int lb = LD.data[s.datum].blocks.blocks[s.local_block].l;
      sum_l += lb;
      if (lb != 1) all_local_l_one = false;
    }
    ba.subsection_sum_ok = (B.k - B.l == sum_l);
    InertialData id = inertial_quotient(BS, static_cast<int>(b));
    ba.inertial_order = id.order;
    ba.c = id.c;
    ba.z = id.z;
    ba.nilpotent = (id.order == 1) && all_local_l_one;
    if (pc.tag == PGroupTag::Abelian) {
      FixedPointData fd = fixed_point_data(D, id.action_on_d, p);
      ba.dim_fixed_points = fd.dim;
    } else {
      ba.dim_fixed_points = id.c;
    }
    ba.bounds = bound_suite(BS, LD, static_cast<int>(b), subs, pc, D, id.c, id.z);
    ba.classification = classify_large(BS, static_cast<int>(b), pc, D.order(), ba.nilpotent);
    if (G->order() <= embedding_order_limit) {
      ba.embedding_checked = true;
      ba.embedding = embedding_check(BS, LD, static_cast<int>(b));
    }
    row.blocks.push_back(std::move(ba));
  }
  return row;
}

CorpusConfig paper_corpus(long max_order) {
  static const char* names[] = {
      "C2",       "C3",       "C4",        "C5",     "C6",     "C7",     "C8",     "C9",
      "C16",      "C32",      "Ab[2,2]",   "Ab[4,2]", "Ab[4,4]", "Ab[8,2]", "Ab[16,2]",
      "Ab[2,2,2]", "Ab[4,2,2]", "Ab[3,3]", "Ab[9,3]", "Ab[3,3,3]", "Ab[5,5]",
      "D8",       "D16",      "D32",       "Q8",     "Q16",    "Q32",    "SD16",   "SD32",
      "M16",      "M32",      "M27",       "M81",    "W16",    "W32",    "W27",    "W81",
      "MNA(2,1)", "C4:C4",    "S3",        "A4",     "S4",     "A5",     "S5",     "A6",
      "S6",       "A7",       "S7",        "SL(2,3)", "SL(2,5)", "GL(2,3)", "SL(2,7)",
      "GL(2,4)",  "GL(2,5)",  "GL(3,2)",   "PSL(2,8)", "PSL(2,11)", "PGL(2,5)", "PGL(2,7)",
      "PSL(2,17)", "PSL(3,3)", "M10",      "2.S5",   "AGL(1,4)", "AGL(1,5)", "AGL(1,7)",
      "AGL(1,8)", "AGL(1,9)", "(C3xC3):SD16", "A4:C4",
  };
  CorpusConfig cfg;
  cfg.description = "paper";
  for (const char* name : names) {
    PermGroup G = catalog_group(name);
    if (G.order() > max_order) continue;
    long n = G.order();
    std::set<long> primes;
    for (long d = 2; d <= n; ++d)
      if (n % d == 0 && is_prime(d)) {
        while (n % d == 0) n /= d;
        primes.insert(d);
      }
    for (long p : primes) cfg.entries.emplace_back(name, p);
  }
  return cfg;
}

CorpusResult run_corpus(const CorpusConfig& config) {
  CorpusResult result;
  for (const auto& [name, p] : config.entries) {
    GroupAnalysis row;
    try {
      PermGroupPtr G = std::make_shared<const PermGroup>(catalog_group(name));
      row = analyze_group(name, G, p, config.embedding_order_limit);
    } catch (const error& e) {
      row.name = name;
      row.prime = p;
      row.error = e.what();
    }
    result.rows.push_back(std::move(row));
  }
  std::sort(result.rows.begin(), result.rows.end(), [](const GroupAnalysis& a, const GroupAnalysis& b) {
    if (a.order != b.order) return a.order < b.order;
    if (a.name != b.name) return a.name < b.name;
    return a.prime < b.prime;
  });
  for (const auto& row : result.rows) {
    if (!row.error.empty()) continue;
    if (!row.radical_oracle_ok || !row.field_stability_ok || !row.brauer_principal_nonzero)
      ++result.summary.violations;
    for (const auto& ba : row.blocks) {
      ++result.summary.blocks;
      for (const auto& rec : ba.bounds) {
        if (!rec.applicable) continue;
        ++result.summary.bounds_checked;
        if (!rec.holds) ++result.summary.violations;
      }
      if (!ba.classification.consistent) ++result.summary.violations;
      if (!ba.subsection_sum_ok) ++result.summary.violations;
      if (ba.embedding_checked &&
          !(ba.embedding.injective && ba.embedding.multiplicative && ba.embedding.reynolds_vanishes))
        ++result.summary.violations;
    }
  }
  return result;
}

nlohmann::json analysis_json(const GroupAnalysis& row) {
  nlohmann::json j;
  j["group"] = row.name;
  j["order"] = row.order;
  j["prime"] = row.prime;
  if (!row.error.empty()) {
    j["error"] = row.error;
    return j;
  }
  j["radicalOracle"] = row.radical_oracle_ok;
  j["fieldStability"] = row.field_stability_ok;
  j["brauerPrincipalNonzero"] = row.brauer_principal_nonzero;
  j["blocks"] = nlohmann::json::array();
  for (const auto& ba : row.blocks) {
    nlohmann::json b;
    b["index"] = ba.block_index;
    b["principal"] = ba.principal;
    b["k"] = ba.k;
    b["l"] = ba.l;
    b["defect"] = ba.defect;
    b["defectGroupOrder"] = ba.defect_group_order;
    b["defectFingerprint"] = ba.defect_fingerprint;
    b["defectTag"] = ba.defect_tag;
    b["loewyDims"] = ba.loewy_dims;
    b["llZB"] = ba.ll_zb;
    b["llZBmodRB"] = ba.ll_zb_mod_rb;
    b["inertialOrder"] = ba.inertial_order;
    b["c"] = ba.c;
    b["z"] = ba.z;
    b["dimFixedPoints"] = ba.dim_fixed_points;
    b["nilpotent"] = ba.nilpotent;
    b["subsections"] = ba.subsection_count;
    b["subsectionSumOk"] = ba.subsection_sum_ok;
    b["bounds"] = nlohmann::json::object();
    for (const auto& rec : ba.bounds) {
      nlohmann::json r;
      r["applicable"] = rec.applicable;
      r["bound"] = rec.bound_value;
      r["observed"] = rec.observed;
      r["holds"] = rec.holds;
      b["bounds"][rec.name] = r;
    }
    b["classification"] = {{"qualifies", ba.classification.qualifies},
                           {"matchedCase", ba.classification.matched_case},
                           {"consistent", ba.classification.consistent}};
    if (ba.embedding_checked) {
      b["embedding"] = {{"injective", ba.embedding.injective},
                        {"multiplicative", ba.embedding.multiplicative},
                        {"reynoldsVanishes", ba.embedding.reynolds_vanishes},
                        {"dimLHS", ba.embedding.dim_lhs},
                        {"dimRHS", ba.embedding.dim_rhs}};
    }
    j["blocks"].push_back(b);
  }
  return j;
}

namespace {

std::string fnv_hash(const std::string& s) {
  u64 h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

}  // namespace

nlohmann::json report_json(const CorpusResult& result, const CorpusConfig& config) {
  nlohmann::json j;
  std::string cfg = config.description;
  for (const auto& [name, p] : config.entries) cfg += ";" + name + ":" + std::to_string(p);
  j["meta"] = {{"version", "llzb 1.0.0"}, {"config-hash", fnv_hash(cfg)}};
  j["rows"] = nlohmann::json::array();
  for (const auto& row : result.rows) j["rows"].push_back(analysis_json(row));
  j["summary"] = {{"blocks", result.summary.blocks},
                  {"boundsChecked", result.summary.bounds_checked},
                  {"violations", result.summary.violations}};
  return j;
}

std::string report_csv(const CorpusResult& result) {
  std::ostringstream os;
  os << "group,order,p,blockIdx,k,l,defect,D-fingerprint,LLZB,bounds-failed\n";
  for (const auto& row : result.rows) {
    if (!row.error.empty()) {
      os << row.name << "," << row.order << "," << row.prime << ",,,,,,,ERROR\n";
      continue;
    }
    for (const auto& ba : row.blocks) {
      std::string failed;
      for (const auto& rec : ba.bounds)
        if (rec.applicable && !rec.holds) failed += (failed.empty() ? "" : ";") + rec.name;
      os << row.name << "," << row.order << "," << row.prime << "," << ba.block_index << "," << ba.k
         << "," << ba.l << "," << ba.defect << "," << ba.defect_fingerprint << "," << ba.ll_zb << ","
         << failed << "\n";
    }
  }
  return os.str();
}

}  // namespace llzb
