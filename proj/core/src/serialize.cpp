#include "wrl/serialize.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace wrl::exactmath {

using nlohmann::json;

void to_json(json& j, const Rational& x) { j = x.str(); }
void from_json(const json& j, Rational& x) { x = Rational::parse(j.get<std::string>()); }

void to_json(json& j, const GaussianRational& z) {
  j = json{{"re", z.re()}, {"im", z.im()}};
}
void from_json(const json& j, GaussianRational& z) {
  z = GaussianRational(j.at("re").get<Rational>(), j.at("im").get<Rational>());
}

void to_json(json& j, const UniPoly<Rational>& p) { j = p.coeffs(); }

}  // namespace wrl::exactmath

namespace wrl::binaryforms {

using nlohmann::json;

void to_json(json& j, const BinaryForm& f) {
  j = json{{"d", f.degree()}, {"weighted_coeffs", f.weighted()}};
}

BinaryForm binary_form_from_json(const json& j) {
  auto coeffs = j.at("weighted_coeffs").get<std::vector<exactmath::Rational>>();
  return BinaryForm(j.at("d").get<int>(), std::move(coeffs));
}

void to_json(json& j, const ApolarForm<exactmath::Rational>& g) {
  j = json{{"form_degree", g.form_degree}, {"univ_coeffs", g.univ}};
}

void to_json(json& j, const DecompositionTerm& t) {
  j = json{{"c", t.coeff}, {"u", t.u}, {"v", t.v}};
}

void to_json(json& j, const Decomposition& dec) {
  j = json{{"exact", dec.exact()}, {"terms", dec.terms}};
  if (!dec.exact()) {
    json sym;
    sym["witness"] = dec.symbolic->witness;
    json intervals = json::array();
    for (const auto& [lo, hi] : dec.symbolic->isolating_intervals)
      intervals.push_back(json::array({lo.str(), hi.str()}));
    sym["isolating_intervals"] = intervals;
    sym["infinity_root"] = dec.symbolic->infinity_root;
    j["symbolic"] = sym;
  }
}

void to_json(json& j, const BinaryRankCertificate& cert) {
  j = json{{"kind", "binary"},
           {"d", cert.d},
           {"border_rank", cert.border_rank},
           {"complex_rank", cert.complex_rank},
           {"lower", cert.lower},
           {"upper", cert.upper},
           {"status", cert.status == CertStatus::exact ? "exact" : "bounded"},
           {"lower_rule", cert.lower_rule}};
  if (cert.witness_apolar) j["witness_apolar"] = *cert.witness_apolar;
  if (cert.witness_decomposition) j["decomposition"] = *cert.witness_decomposition;
}

void to_json(json& j, const WitnessResult& w) {
  j = json{{"form", w.form},
           {"distinct_real_roots", w.distinct_real_roots},
           {"halvings", w.halvings},
           {"perturbation_scale", w.scale_applied}};
}

}  // namespace wrl::binaryforms

namespace wrl::veronese {

using nlohmann::json;

void to_json(json& j, const ProjectivePoint& p) { j = p.coords(); }

ProjectivePoint point_from_json(const json& j) {
  return ProjectivePoint(j.get<std::vector<exactmath::GaussianRational>>());
}

void to_json(json& j, const PointConfiguration& a) {
  j = json{{"m", a.m}, {"e", a.e()}, {"a", a.a()}, {"reals", a.reals}, {"pairs", a.pairs}};
}

PointConfiguration configuration_from_json(const json& j) {
  PointConfiguration a;
  a.m = j.at("m").get<int>();
  for (const auto& p : j.at("reals")) a.reals.push_back(point_from_json(p));
  for (const auto& p : j.at("pairs")) a.pairs.push_back(point_from_json(p));
  a.validate();
  return a;
}

void to_json(json& j, const SymmetricForm& f) {
  j = json{{"m", f.m()}, {"d", f.d()}, {"weighted_coeffs", f.weighted()}};
}

SymmetricForm symmetric_form_from_json(const json& j) {
  auto coeffs = j.at("weighted_coeffs").get<std::vector<exactmath::Rational>>();
  return SymmetricForm(j.at("m").get<int>(), j.at("d").get<int>(), std::move(coeffs));
}

void to_json(json& j, const RealLine& line) {
  j = json{{"v0", line.v0}, {"v1", line.v1}};
}

}  // namespace wrl::veronese

namespace wrl::rankcert {

using nlohmann::json;

void to_json(json& j, const AmbientTerm& t) { j = json{{"c", t.coeff}, {"point", t.point}}; }

void to_json(json& j, const RealPiece& p) { j = json{{"c", p.coeff}, {"point", p.point}}; }

void to_json(json& j, const LinePiece& p) {
  j = json{{"line", p.line},
           {"o_binary", p.o_binary},
           {"o_decomposition", p.o_decomposition},
           {"o_certificate", p.o_certificate},
           {"ambient_terms", p.ambient_terms}};
  if (p.pair_coefficient) j["pair_coefficient"] = *p.pair_coefficient;
}

void to_json(json& j, const LineDecomposition& dec) {
  j = json{{"m", dec.m},
           {"d", dec.d},
           {"pieces", dec.pieces},
           {"reals", dec.reals},
           {"total_terms", dec.total_terms()}};
}

void to_json(json& j, const MultiRankCertificate& cert) {
  j = json{{"kind", "multi"},
           {"m", cert.m},
           {"d", cert.d},
           {"b", cert.b},
           {"type", json::array({cert.type_e, cert.type_a})},
           {"border_lower", cert.border_lower},
           {"upper", cert.upper},
           {"status", cert.exact() ? "certified-exact" : "bounds-only"},
           {"theorem", cert.theorem},
           {"reconstruction_verified", cert.reconstruction_verified},
           {"decomposition", cert.decomposition}};
  if (cert.certified_value) j["certified_value"] = *cert.certified_value;
  if (cert.sigma2_class) {
    switch (*cert.sigma2_class) {
      case veronese::Sigma2Class::real_pair: j["sigma2_class"] = "real-pair"; break;
      case veronese::Sigma2Class::conj_pair: j["sigma2_class"] = "conj-pair"; break;
      case veronese::Sigma2Class::tangential: j["sigma2_class"] = "tangential"; break;
    }
  }
  if (!cert.note.empty()) j["note"] = cert.note;
}

}  // namespace wrl::rankcert

namespace wrl::census {

using nlohmann::json;

void to_json(json& j, const CensusSpec& spec) {
  json types = json::array();
  for (const auto& [e, a] : spec.types) types.push_back(json::array({e, a}));
  j = json{{"m", spec.m},
           {"d", spec.d},
           {"b", spec.b},
           {"types", types},
           {"include_tangential", spec.include_tangential},
           {"samples_per_type", spec.samples_per_type},
           {"seed", spec.seed},
           {"point_height", spec.point_height},
           {"coeff_height", spec.coeff_height},
           {"mode", spec.mode == SampleMode::uniform ? "uniform" : "perturbed"}};
}

CensusSpec spec_from_json(const json& j) {
  CensusSpec spec;
  spec.m = j.at("m").get<int>();
  spec.d = j.at("d").get<int>();
  spec.b = j.at("b").get<int>();
  for (const auto& t : j.at("types"))
    spec.types.emplace_back(t.at(0).get<int>(), t.at(1).get<int>());
  spec.include_tangential = j.value("include_tangential", false);
  spec.samples_per_type = j.at("samples_per_type").get<int>();
  spec.seed = j.value("seed", std::uint64_t{0});
  spec.point_height = j.value("point_height", 10L);
  spec.coeff_height = j.value("coeff_height", 100L);
  std::string mode = j.value("mode", "uniform");
  if (mode == "uniform") {
    spec.mode = SampleMode::uniform;
  } else if (mode == "perturbed") {
    spec.mode = SampleMode::perturbed;
  } else {
    throw std::invalid_argument("census spec: mode must be uniform or perturbed");
  }
  spec.validate();
  return spec;
}

void to_json(json& j, const CensusRecord& rec) {
  j = json{{"type_index", rec.type_index},
           {"type", json::array({rec.e, rec.a})},
           {"tangential", rec.tangential},
           {"sample_index", rec.sample_index},
           {"sample_seed", rec.sample_seed},
           {"resamples", rec.resamples},
           {"failed", rec.failed}};
  if (rec.failed) j["error"] = rec.error;
  if (rec.config) j["config"] = *rec.config;
  if (rec.binary_cert) j["certificate"] = *rec.binary_cert;
  if (rec.multi_cert) j["certificate"] = *rec.multi_cert;
  // wall time is intentionally not serialized: outputs must be
  // byte-identical across reruns with the same seed
}

void to_json(json& j, const TheoremReport& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j = json{{"id", rep.id},
           {"applicable", rep.applicable},
           {"pass", rep.pass},
           {"detail", rep.detail},
           {"checks", checks}};
}

std::string records_jsonl(const CensusResult& result) {
  std::ostringstream out;
  for (const auto& rec : result.records) {
    json j = rec;
    out << j.dump() << "\n";
  }
  return out.str();
}

namespace {

std::string frequency_string(int count, int total) {
  if (total == 0) return "0";
  exactmath::Rational f(count, total);
  return f.str();
}

}  // namespace

std::string summary_csv(const CensusResult& result) {
  std::ostringstream out;
  out << "m,d,b,stratum_e,stratum_a,tangential,mode,rank,count,total,frequency,status\n";
  const auto& spec = result.spec;
  const char* mode = spec.mode == SampleMode::uniform ? "uniform" : "perturbed";
  for (const auto& s : result.summaries) {
    std::string prefix = std::to_string(spec.m) + "," + std::to_string(spec.d) + "," +
                         std::to_string(spec.b) + "," + std::to_string(s.e) + "," +
                         std::to_string(s.a) + "," + (s.tangential ? "1" : "0") + "," + mode;
    for (const auto& [rank, count] : s.rank_counts) {
      out << prefix << "," << rank << "," << count << "," << s.total << ","
          << frequency_string(count, s.total) << ",certified\n";
    }
    if (s.unresolved > 0)
      out << prefix << ",," << s.unresolved << "," << s.total << ","
          << frequency_string(s.unresolved, s.total) << ",unresolved\n";
    if (s.failed > 0)
      out << prefix << ",," << s.failed << "," << s.total << ","
          << frequency_string(s.failed, s.total) << ",failed\n";
  }
  return out.str();
}

WrittenFiles write_results(const CensusResult& result, const std::string& directory) {
  namespace fs = std::filesystem;
  fs::path dir(directory.empty() ? "." : directory);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("write_results: cannot create directory " + dir.string());

  std::ostringstream tag;
  tag << "census_m" << result.spec.m << "_d" << result.spec.d << "_b" << result.spec.b << "_s"
      << std::hex << result.spec.seed;
  WrittenFiles files;
  files.jsonl_path = (dir / (tag.str() + ".jsonl")).string();
  files.csv_path = (dir / (tag.str() + ".csv")).string();

  std::ofstream jf(files.jsonl_path, std::ios::binary);
  if (!jf) throw std::runtime_error("write_results: cannot open " + files.jsonl_path);
  jf << records_jsonl(result);
  jf.close();
  std::ofstream cf(files.csv_path, std::ios::binary);
  if (!cf) throw std::runtime_error("write_results: cannot open " + files.csv_path);
  cf << summary_csv(result);
  cf.close();
  return files;
}

}  // namespace wrl::census
