#ifndef WRL_CENSUS_CENSUS_HPP
#define WRL_CENSUS_CENSUS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wrl/rankcert/certify.hpp"

namespace wrl::census {

using binaryforms::BinaryRankCertificate;
using rankcert::MultiRankCertificate;

enum class SampleMode { uniform, perturbed };

/*
 * One experiment: sample points of the listed (e, a) strata of the
 * border-rank-b locus in degree-d forms on P^m, compute certified ranks,
 * and aggregate the empirical rank distribution per stratum.  Everything
 * is replayable from (spec, seed): per-sample seeds are derived by a
 * counter scheme, so any single record can be recomputed alone.
 */
struct CensusSpec {
  int m = 1;
  int d = 0;
  int b = 0;
  std::vector<std::pair<int, int>> types;  // (e, a), e + 2a = b
  bool include_tangential = false;         // extra stratum, border rank 2 only
  int samples_per_type = 0;
  std::uint64_t seed = 0;
  long point_height = 10;
  long coeff_height = 100;
  SampleMode mode = SampleMode::uniform;

  void validate() const;
};

struct CensusRecord {
  int type_index = 0;  // index into spec.types; -1 for the tangential stratum
  int e = 0, a = 0;
  bool tangential = false;
  int sample_index = 0;
  std::uint64_t sample_seed = 0;
  int resamples = 0;
  bool failed = false;
  std::string error;
  std::optional<veronese::PointConfiguration> config;
  std::optional<BinaryRankCertificate> binary_cert;   // m = 1
  std::optional<MultiRankCertificate> multi_cert;     // m >= 2
  long wall_ms = 0;  // diagnostics only; excluded from serialized output

  bool resolved() const;
  int rank_value() const;  // only when resolved()
  std::pair<int, int> bounds() const;
};

struct StratumSummary {
  int e = 0, a = 0;
  bool tangential = false;
  int total = 0;
  int failed = 0;
  int unresolved = 0;
  std::map<int, int> rank_counts;  // resolved rank -> count
};

struct CensusResult {
  CensusSpec spec;
  std::vector<CensusRecord> records;
  std::vector<StratumSummary> summaries;
};

CensusResult run_census(const CensusSpec& spec);

// The sampled form behind a record, recomputed from its seed chain.
veronese::SymmetricForm replay_form(const CensusSpec& spec, const CensusRecord& rec);

// Deterministic serialization: JSON-lines records plus a CSV summary.
// Identical (spec, seed) produce byte-identical strings.
std::string records_jsonl(const CensusResult& result);
std::string summary_csv(const CensusResult& result);

struct WrittenFiles {
  std::string jsonl_path;
  std::string csv_path;
};
// Writes census_m{m}_d{d}_b{b}_s{seed-hex}.{jsonl,csv} under `directory`.
WrittenFiles write_results(const CensusResult& result, const std::string& directory);

struct TheoremCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct TheoremReport {
  std::string id;
  bool applicable = false;  // parameters satisfy the statement's hypotheses
  bool pass = false;
  std::string detail;
  std::vector<TheoremCheck> checks;
  std::vector<CensusResult> censuses;
};

struct TheoremParams {
  int m = 0;
  int d = 0;
  int b = 0;                 // used by u1, u2, w8
  int samples = 0;           // 0: per-theorem default
  std::uint64_t seed = 0x57524C2D43454Eull;
  long point_height = 10;
  long coeff_height = 100;
};

// Supported ids: u1, u2, w2, w3, w4, w5, w6, w7, w8.  Parameters outside a
// statement's hypotheses make the report inapplicable (no extrapolation).
TheoremReport verify_theorem(const std::string& id, const TheoremParams& params);

// expected typical-rank set of w{b} at (m, d), e.g. w6 -> {6, d+4, 2d+2, 3d}
std::vector<int> predicted_typical_ranks(int b, int d);

}  // namespace wrl::census

#endif  // WRL_CENSUS_CENSUS_HPP
