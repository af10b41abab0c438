// wrl: exact Waring rank computations, witness constructions and
// typical-rank censuses over the rationals.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "wrl/serialize.hpp"

namespace {

using nlohmann::json;
using wrl::exactmath::GaussianRational;
using wrl::exactmath::Rational;

constexpr std::uint64_t kDefaultSeed = 0x57524C2D534545ull;

enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 1,
  exit_bounds_only = 2,
  exit_mismatch = 3,
};

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  if (out.empty()) throw std::invalid_argument("empty coefficient list");
  return out;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return j;
}

// storage order: the entry at index i multiplies x0^(d-i) x1^i, so an
// inline list reads as z-coefficients from z^d down to the constant
wrl::binaryforms::BinaryForm binary_from_inline(const std::string& text, bool weighted) {
  auto coeffs = parse_rational_list(text);
  const int d = static_cast<int>(coeffs.size()) - 1;
  if (weighted) return wrl::binaryforms::BinaryForm(d, std::move(coeffs));
  return wrl::binaryforms::BinaryForm::from_plain(d, coeffs);
}

GaussianRational parse_gaussian(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) return GaussianRational(Rational::parse(text));
  return GaussianRational(Rational::parse(text.substr(0, comma)),
                          Rational::parse(text.substr(comma + 1)));
}

// slots "alpha_re,alpha_im,c_re,c_im" separated by ';'
std::vector<wrl::binaryforms::PerturbationTerm> parse_perturbation(const std::string& text) {
  std::vector<wrl::binaryforms::PerturbationTerm> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string slot;
  while (std::getline(ss, slot, ';')) {
    std::vector<Rational> parts = parse_rational_list(slot);
    if (parts.size() != 4)
      throw std::invalid_argument("perturbation slot needs alpha_re,alpha_im,c_re,c_im");
    out.push_back({GaussianRational(parts[0], parts[1]), GaussianRational(parts[2], parts[3])});
  }
  return out;
}

std::vector<std::pair<int, int>> parse_types(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    auto comma = item.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("type must be e,a");
    out.emplace_back(std::stoi(item.substr(0, comma)), std::stoi(item.substr(comma + 1)));
  }
  return out;
}

int run_rank(const std::string& inline_coeffs, const std::string& form_path, bool weighted,
             std::uint64_t seed) {
  wrl::binaryforms::RankSearchOptions opts;
  opts.seed = seed;

  std::optional<wrl::veronese::SymmetricForm> multi;
  std::optional<wrl::binaryforms::BinaryForm> binary;
  if (!inline_coeffs.empty()) {
    binary = binary_from_inline(inline_coeffs, weighted);
  } else {
    json j = load_json_file(form_path);
    if (j.contains("m") && j.at("m").get<int>() >= 2)
      multi = wrl::veronese::symmetric_form_from_json(j);
    else
      binary = wrl::binaryforms::binary_form_from_json(j);
  }

  json out;
  out["seed"] = seed;
  bool exact = false;
  if (binary) {
    auto cert = wrl::binaryforms::real_rank(*binary, opts);
    out["certificate"] = cert;
    exact = cert.exact();
  } else {
    auto cert = wrl::rankcert::certified_rank_sigma2(*multi, opts);
    out["certificate"] = cert;
    exact = cert.exact();
  }
  std::cout << out.dump(2) << "\n";
  return exact ? exit_ok : exit_bounds_only;
}

int run_decompose(const std::string& inline_coeffs, const std::string& form_path, bool weighted,
                  std::uint64_t seed) {
  wrl::binaryforms::RankSearchOptions opts;
  opts.seed = seed;
  wrl::binaryforms::BinaryForm f =
      !inline_coeffs.empty() ? binary_from_inline(inline_coeffs, weighted)
                             : wrl::binaryforms::binary_form_from_json(load_json_file(form_path));
  auto cert = wrl::binaryforms::real_rank(f, opts);
  json out;
  out["seed"] = seed;
  out["certificate"] = cert;
  std::cout << out.dump(2) << "\n";
  if (!cert.exact()) return exit_bounds_only;
  if (cert.witness_decomposition && !cert.witness_decomposition->exact()) return exit_bounds_only;
  return exit_ok;
}

int run_witness(int d, const std::string& c_text, const std::string& pert_text,
                std::uint64_t seed) {
  (void)seed;
  GaussianRational c = parse_gaussian(c_text);
  auto pert = parse_perturbation(pert_text);
  auto w = wrl::binaryforms::witness_rank_d(d, c, std::move(pert));
  auto cert = wrl::binaryforms::real_rank(w.form);
  json out;
  out["witness"] = w;
  out["certificate"] = cert;
  std::cout << out.dump(2) << "\n";
  return cert.exact() && cert.rank() == d ? exit_ok : exit_bounds_only;
}

int run_census_cmd(const std::string& spec_path, int m, int d, int b, const std::string& types,
                   bool tangential, int samples, const std::string& mode, std::uint64_t seed,
                   long height, long coeff_height, const std::string& out_dir) {
  wrl::census::CensusSpec spec;
  if (!spec_path.empty()) {
    spec = wrl::census::spec_from_json(load_json_file(spec_path));
    if (seed != kDefaultSeed) spec.seed = seed;
  } else {
    spec.m = m;
    spec.d = d;
    spec.b = b;
    spec.types = parse_types(types);
    spec.include_tangential = tangential;
    spec.samples_per_type = samples;
    spec.seed = seed;
    spec.point_height = height;
    spec.coeff_height = coeff_height;
    spec.mode = mode == "perturbed" ? wrl::census::SampleMode::perturbed
                                    : wrl::census::SampleMode::uniform;
    spec.validate();
  }
  auto result = wrl::census::run_census(spec);
  auto files = wrl::census::write_results(result, out_dir);
  std::cout << wrl::census::summary_csv(result);
  std::cerr << "records: " << files.jsonl_path << "\nsummary: " << files.csv_path << "\n";
  return exit_ok;
}

int run_verify(const std::string& id, int m, int d, int b, int samples, std::uint64_t seed,
               const std::string& out_dir) {
  wrl::census::TheoremParams params;
  params.m = m;
  params.d = d;
  params.b = b;
  params.samples = samples;
  params.seed = seed;
  auto rep = wrl::census::verify_theorem(id, params);
  json out = rep;
  std::cout << out.dump(2) << "\n";
  if (!rep.applicable) {
    std::cerr << "not applicable: " << rep.detail << "\n";
    return exit_usage;
  }
  if (!out_dir.empty())
    for (const auto& census : rep.censuses) wrl::census::write_results(census, out_dir);
  if (!rep.pass) {
    std::cerr << "prediction mismatch:\n";
    for (const auto& c : rep.checks)
      if (!c.pass) std::cerr << "  " << c.name << ": " << c.detail << "\n";
    return exit_mismatch;
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Waring rank computations over the rationals"};
  app.require_subcommand(1);

  std::uint64_t seed = kDefaultSeed;
  app.add_option("--seed", seed, "master seed (echoed in all outputs)")->capture_default_str();

  std::string inline_coeffs, form_path;
  bool weighted = false;

  auto* rank = app.add_subcommand("rank", "certified real Waring rank of a form");
  rank->add_option("--binary", inline_coeffs,
                   "inline coefficients c_d,...,c_0 of a binary form, as p/q");
  rank->add_option("--form", form_path, "JSON file with a binary or symmetric form");
  rank->add_flag("--weighted,!--no-weighted", weighted,
                 "inline coefficients already carry binomial weights");

  auto* dec = app.add_subcommand("decompose", "real rank with an explicit decomposition");
  dec->add_option("--binary", inline_coeffs, "inline coefficients, as in rank");
  dec->add_option("--form", form_path, "JSON file with a binary form");
  dec->add_flag("--weighted,!--no-weighted", weighted, "inline coefficients carry weights");

  int wd = 0;
  std::string c_text = "1", pert_text;
  auto* wit = app.add_subcommand("witness", "rank-d binary form from a conjugate pair");
  wit->add_option("-d,--degree", wd, "degree d >= 2")->required();
  wit->add_option("-c,--coefficient", c_text, "pair coefficient, re[,im]")
      ->capture_default_str();
  wit->add_option("--pert", pert_text,
                  "perturbation slots alpha_re,alpha_im,c_re,c_im separated by ';'");

  int cm = 1, cd = 0, cb = 0, samples = 20;
  std::string types_text, mode = "uniform", spec_path, out_dir = ".";
  bool tangential = false;
  long height = 10, coeff_height = 100;
  auto* cen = app.add_subcommand("census", "stratified rank census over seeded samples");
  cen->add_option("--spec", spec_path, "census spec JSON file");
  cen->add_option("--m", cm, "ambient projective dimension");
  cen->add_option("--d", cd, "degree");
  cen->add_option("--b", cb, "border rank");
  cen->add_option("--types", types_text, "strata e,a separated by ';'");
  cen->add_flag("--tangential", tangential, "include the tangential stratum (b = 2)");
  cen->add_option("--samples", samples, "samples per stratum")->capture_default_str();
  cen->add_option("--mode", mode, "uniform | perturbed")->capture_default_str();
  cen->add_option("--height", height, "point coordinate height bound")->capture_default_str();
  cen->add_option("--coeff-height", coeff_height, "span coefficient height bound")
      ->capture_default_str();
  cen->add_option("--out", out_dir, "output directory")->capture_default_str();

  std::string verify_id;
  int vsamples = 0;
  std::string verify_out;
  auto* ver = app.add_subcommand("verify", "check a typical-rank prediction empirically");
  ver->add_option("id", verify_id, "one of u1 u2 w2 w3 w4 w5 w6 w7 w8")->required();
  ver->add_option("--m", cm, "ambient projective dimension");
  ver->add_option("--d", cd, "degree");
  ver->add_option("--b", cb, "border rank (u1, u2, w8)");
  ver->add_option("--samples", vsamples, "samples per stratum (0 = default)");
  ver->add_option("--out", verify_out, "directory for the underlying census files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (rank->parsed()) {
      if (inline_coeffs.empty() == form_path.empty())
        throw std::invalid_argument("rank: pass exactly one of --binary or --form");
      return run_rank(inline_coeffs, form_path, weighted, seed);
    }
    if (dec->parsed()) {
      if (inline_coeffs.empty() == form_path.empty())
        throw std::invalid_argument("decompose: pass exactly one of --binary or --form");
      return run_decompose(inline_coeffs, form_path, weighted, seed);
    }
    if (wit->parsed()) return run_witness(wd, c_text, pert_text, seed);
    if (cen->parsed())
      return run_census_cmd(spec_path, cm, cd, cb, types_text, tangential, samples, mode, seed,
                            height, coeff_height, out_dir);
    if (ver->parsed()) return run_verify(verify_id, cm, cd, cb, vsamples, seed, verify_out);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
