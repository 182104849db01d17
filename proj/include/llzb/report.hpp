#pragma once

#include <string>
#include <vector>

#include "llzb/block.hpp"
#include "llzb/pgroup.hpp"

#include "json.hpp"

namespace llzb {

struct BoundRecord {
  std::string name;
  bool applicable = false;
  long bound_value = 0;
  long observed = 0;
  bool holds = true;
};

struct ClassificationResult {
  bool qualifies = false;
  std::string matched_case = "none";  // i / ii / iii / iv / none
  bool consistent = true;             // qualifies <=> matched
};

struct BlockAnalysis {
  int block_index = 0;
  bool principal = false;
  int k = 0, l = 0, defect = 0;
  std::string defect_fingerprint;
  std::string defect_tag;
  long defect_group_order = 1;
  std::vector<int> loewy_dims;
  int ll_zb = 1, ll_zb_mod_rb = 0;
  long inertial_order = 1;
  int c = 1, z = 1;
  int dim_fixed_points = 1;  // dim F D^{I(B)} (for abelian D; else dim F Z(D)^{I(B)})
  bool nilpotent = false;
  int subsection_count = 0;
  bool subsection_sum_ok = true;  // k - l == sum l(b_i)
  std::vector<BoundRecord> bounds;
  ClassificationResult classification;
  bool embedding_checked = false;
  EmbeddingReport embedding;
};

struct GroupAnalysis {
  std::string name;
  long order = 0;
  long prime = 0;
  std::string error;  // nonempty when the row failed outright
  bool radical_oracle_ok = true;
  bool field_stability_ok = true;
  bool brauer_principal_nonzero = true;
  std::vector<BlockAnalysis> blocks;
};

GroupAnalysis analyze_group(const std::string& name, PermGroupPtr G, long p,
                            long embedding_order_limit = 500);

struct CorpusConfig {
  std::vector<std::pair<std::string, long>> entries;  // (catalog name, prime)
  long embedding_order_limit = 500;
  std::string description = "custom";
};

/// Built-in corpus: catalog groups with |G| <= max_order, one entry per prime
/// dividing the order.
CorpusConfig paper_corpus(long max_order = 6000);

struct CorpusSummary {
  long blocks = 0;
  long bounds_checked = 0;
  long violations = 0;
};

struct CorpusResult {
  std::vector<GroupAnalysis> rows;
  CorpusSummary summary;
};

CorpusResult run_corpus(const CorpusConfig& config);

nlohmann::json analysis_json(const GroupAnalysis& row);
nlohmann::json report_json(const CorpusResult& result, const CorpusConfig& config);
std::string report_csv(const CorpusResult& result);

}  // namespace llzb
