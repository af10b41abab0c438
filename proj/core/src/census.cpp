#include "wrl/census/census.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "wrl/binaryforms/witness.hpp"
#include "wrl/exactmath/rng.hpp"

namespace wrl::census {

using binaryforms::PerturbationTerm;
using binaryforms::RankSearchOptions;
using exactmath::derive_seed;
using exactmath::GaussianRational;
using exactmath::Rational;
using exactmath::Rng;
using veronese::ConfigRequirements;
using veronese::PointConfiguration;
using veronese::ProjectivePoint;
using veronese::SymmetricForm;

void CensusSpec::validate() const {
  if (m < 1) throw std::invalid_argument("census: m must be >= 1");
  if (d < 2) throw std::invalid_argument("census: d must be >= 2");
  if (b < 1) throw std::invalid_argument("census: b must be >= 1");
  if (types.empty() && !include_tangential)
    throw std::invalid_argument("census: no strata listed");
  for (const auto& [e, a] : types) {
    if (e < 0 || a < 0 || e + 2 * a != b)
      throw std::invalid_argument("census: stratum (e, a) must satisfy e + 2a = b");
  }
  if (samples_per_type < 1) throw std::invalid_argument("census: samples_per_type must be >= 1");
  if (point_height < 1 || coeff_height < 1)
    throw std::invalid_argument("census: height bounds must be >= 1");
  if (m == 1 && (b < 2 || 2 * b > d + 2))
    throw std::invalid_argument("census: the bivariate case needs 2 <= b <= (d+2)/2");
  if (mode == SampleMode::perturbed) {
    if (m != 1)
      throw std::invalid_argument("census: perturbed sampling is a bivariate construction");
    for (const auto& [e, a] : types)
      if (a < 1)
        throw std::invalid_argument("census: perturbed sampling needs a conjugate pair (a >= 1)");
  }
  if (include_tangential && (b != 2 || d < 3))
    throw std::invalid_argument("census: the tangential stratum lives on border rank 2, d >= 3");
}

bool CensusRecord::resolved() const {
  if (failed) return false;
  if (binary_cert) return binary_cert->exact();
  if (multi_cert) return multi_cert->exact();
  return false;
}

int CensusRecord::rank_value() const {
  if (!resolved()) throw std::logic_error("CensusRecord: rank undecided");
  if (binary_cert) return binary_cert->rank();
  return *multi_cert->certified_value;
}

std::pair<int, int> CensusRecord::bounds() const {
  if (binary_cert) return {binary_cert->lower, binary_cert->upper};
  if (multi_cert) return {multi_cert->border_lower, multi_cert->upper};
  return {0, 0};
}

namespace {

unsigned census_threads() {
  if (const char* env = std::getenv("WRL_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && v <= 256) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  return std::min(hw, 8u);
}

bool all_points_affine(const PointConfiguration& A) {
  for (const auto& p : A.all_points())
    if (!p.coords()[0].is_one()) return false;
  return true;
}

// configuration on P^1 with every point affine (the perturbation slots
// need affine representatives z - alpha)
std::pair<PointConfiguration, int> affine_configuration(int e, int a, std::uint64_t seed,
                                                        long height, int budget = 32) {
  for (int attempt = 0; attempt < budget; ++attempt) {
    auto A = veronese::sample_configuration(1, e, a, derive_seed(seed, 1, attempt), height);
    if (all_points_affine(A)) return {std::move(A), attempt};
  }
  throw std::runtime_error("census: no fully affine configuration found");
}

GaussianRational random_gaussian_nonzero(Rng& rng, long height) {
  for (;;) {
    GaussianRational z(Rational(rng.uniform(-height, height)),
                       Rational(rng.uniform(-height, height)));
    if (!z.is_zero()) return z;
  }
}

// f = l_u^(d-1) l_v for random distinct real points: a tangential sample
SymmetricForm sample_tangential(int m, int d, std::uint64_t seed, long height) {
  Rng rng(seed);
  for (;;) {
    std::vector<Rational> u(m + 1), v(m + 1);
    bool nzu = false, nzv = false;
    for (auto& x : u) {
      x = Rational(rng.uniform(-height, height));
      nzu = nzu || !x.is_zero();
    }
    for (auto& x : v) {
      x = Rational(rng.uniform(-height, height));
      nzv = nzv || !x.is_zero();
    }
    if (!nzu || !nzv) continue;
    // u, v must not be proportional
    std::vector<std::vector<Rational>> rows{u, v};
    if (exactmath::row_rank(rows) != 2) continue;
    std::vector<std::vector<Rational>> linears(d - 1, u);
    linears.push_back(v);
    return veronese::product_of_linear_forms(m, linears);
  }
}

struct Task {
  int type_index = 0;
  int e = 0, a = 0;
  bool tangential = false;
  int sample_index = 0;
  std::uint64_t seed = 0;
};

struct SampledForm {
  SymmetricForm f;
  std::optional<PointConfiguration> config;
  int resamples = 0;
};

// The sampled form of one census cell: pure in (spec stratum, seed), so a
// record can be replayed later from its stored sample seed alone.
SampledForm sample_stratum_form(const CensusSpec& spec, int e, int a, bool tangential,
                                std::uint64_t seed) {
  if (tangential) {
    return {sample_tangential(spec.m, spec.d, derive_seed(seed, 1, 0), spec.point_height),
            std::nullopt, 0};
  }
  if (spec.m == 1 && spec.mode == SampleMode::perturbed) {
    // base pair of the sampled configuration, remaining slots shrunk by
    // the halving schedule until totally real
    auto [A, attempt] = affine_configuration(e, a, seed, spec.point_height);
    Rng rng(derive_seed(seed, 2, 0));
    GaussianRational c = random_gaussian_nonzero(rng, spec.coeff_height);
    GaussianRational alpha = A.pairs[0].coords()[1];
    std::vector<PerturbationTerm> pert;
    for (int j = 1; j < a; ++j)
      pert.push_back({A.pairs[j].coords()[1], random_gaussian_nonzero(rng, spec.coeff_height)});
    for (int h = 0; h < e; ++h)
      pert.push_back({A.reals[h].coords()[1],
                      GaussianRational(Rational(rng.uniform_nonzero(spec.coeff_height)))});
    auto w = binaryforms::witness_rank_d_at(spec.d, c, alpha, std::move(pert));
    return {SymmetricForm::from_binary(w.form), std::move(A), attempt};
  }
  ConfigRequirements req;
  if (spec.m >= 2) {
    req.no_three_collinear = spec.b >= 3;
    req.independent_conditions = true;
  }
  auto A = veronese::sample_configuration(spec.m, e, a, derive_seed(seed, 1, 0),
                                          spec.point_height, req);
  veronese::SampleInfo info;
  auto f = veronese::sample_in_span(A, spec.d, derive_seed(seed, 2, 0), spec.coeff_height, &info);
  return {std::move(f), std::move(A), info.resamples};
}

CensusRecord evaluate_sample(const CensusSpec& spec, const Task& task) {
  CensusRecord rec;
  rec.type_index = task.type_index;
  rec.e = task.e;
  rec.a = task.a;
  rec.tangential = task.tangential;
  rec.sample_index = task.sample_index;
  rec.sample_seed = task.seed;
  const auto t0 = std::chrono::steady_clock::now();

  try {
    auto sample = sample_stratum_form(spec, task.e, task.a, task.tangential, task.seed);
    rec.config = sample.config;
    rec.resamples = sample.resamples;
    const SymmetricForm& f = sample.f;
    if (spec.m == 1) {
      rec.binary_cert = binaryforms::real_rank(f.to_binary());
    } else if (task.tangential) {
      rec.multi_cert = rankcert::certified_rank_sigma2(f);
    } else if (spec.b == 2) {
      // independent routes: the split certificate and the classification
      // certificate must agree
      auto split_cert = rankcert::certified_rank_multi(f, *sample.config);
      auto class_cert = rankcert::certified_rank_sigma2(f);
      if (split_cert.certified_value != class_cert.certified_value)
        throw std::logic_error("census: sigma2 routes disagree on the certified value");
      rec.multi_cert = std::move(class_cert);
    } else {
      rec.multi_cert = rankcert::certified_rank_multi(f, *sample.config);
    }
    // the census re-verifies the reconstruction before counting a record
    if (rec.multi_cert &&
        !rankcert::verify_reconstruction(f, rec.multi_cert->decomposition))
      throw std::logic_error("census: reconstruction re-verification failed");
    if (rec.binary_cert && rec.binary_cert->witness_decomposition &&
        !binaryforms::verify_decomposition(f.to_binary(),
                                           *rec.binary_cert->witness_decomposition))
      throw std::logic_error("census: reconstruction re-verification failed");
  } catch (const std::exception& ex) {
    rec.failed = true;
    rec.error = ex.what();
  }

  rec.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return rec;
}

}  // namespace

SymmetricForm replay_form(const CensusSpec& spec, const CensusRecord& rec) {
  return sample_stratum_form(spec, rec.e, rec.a, rec.tangential, rec.sample_seed).f;
}

CensusResult run_census(const CensusSpec& spec) {
  spec.validate();

  std::vector<Task> tasks;
  for (std::size_t ti = 0; ti < spec.types.size(); ++ti) {
    for (int s = 0; s < spec.samples_per_type; ++s)
      tasks.push_back({static_cast<int>(ti), spec.types[ti].first, spec.types[ti].second, false,
                       s, derive_seed(spec.seed, ti, s)});
  }
  if (spec.include_tangential) {
    const std::size_t stream = spec.types.size();
    for (int s = 0; s < spec.samples_per_type; ++s)
      tasks.push_back({-1, 0, 0, true, s, derive_seed(spec.seed, stream, s)});
  }

  CensusResult result;
  result.spec = spec;
  result.records.resize(tasks.size());

  const unsigned nthreads = std::min<std::size_t>(census_threads(), tasks.size());
  if (nthreads <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i)
      result.records[i] = evaluate_sample(spec, tasks[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(nthreads);
    for (unsigned w = 0; w < nthreads; ++w) {
      workers.emplace_back([&]() {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= tasks.size()) return;
          result.records[i] = evaluate_sample(spec, tasks[i]);
        }
      });
    }
    for (auto& w : workers) w.join();
  }

  // aggregate per stratum, in listing order, tangential last
  auto summarize = [&](int type_index, int e, int a, bool tangential) {
    StratumSummary s;
    s.e = e;
    s.a = a;
    s.tangential = tangential;
    for (const auto& rec : result.records) {
      if (rec.type_index != type_index) continue;
      ++s.total;
      if (rec.failed) {
        ++s.failed;
      } else if (rec.resolved()) {
        ++s.rank_counts[rec.rank_value()];
      } else {
        ++s.unresolved;
      }
    }
    return s;
  };
  for (std::size_t ti = 0; ti < spec.types.size(); ++ti)
    result.summaries.push_back(
        summarize(static_cast<int>(ti), spec.types[ti].first, spec.types[ti].second, false));
  if (spec.include_tangential) result.summaries.push_back(summarize(-1, 0, 0, true));
  return result;
}

std::vector<int> predicted_typical_ranks(int b, int d) {
  std::vector<int> out;
  for (int a = 0; 2 * a <= b; ++a) out.push_back(a * d + (b - 2 * a));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

CensusSpec base_spec(const TheoremParams& p) {
  CensusSpec spec;
  spec.m = p.m;
  spec.d = p.d;
  spec.seed = p.seed;
  spec.point_height = p.point_height;
  spec.coeff_height = p.coeff_height;
  return spec;
}

void add_check(TheoremReport& rep, const std::string& name, bool pass, std::string detail) {
  rep.checks.push_back({name, pass, std::move(detail)});
}

std::string stratum_name(int e, int a) {
  return "(" + std::to_string(e) + "," + std::to_string(a) + ")";
}

// fraction of records with certified rank == want, over all records
void check_all_rank(TheoremReport& rep, const CensusResult& res, int type_index, int want,
                    const std::string& name) {
  int total = 0, good = 0;
  for (const auto& rec : res.records) {
    if (rec.type_index != type_index) continue;
    ++total;
    if (rec.resolved() && rec.rank_value() == want) ++good;
  }
  add_check(rep, name, total > 0 && good == total,
            std::to_string(good) + "/" + std::to_string(total) + " certified rank " +
                std::to_string(want));
}

}  // namespace

TheoremReport verify_theorem(const std::string& id, const TheoremParams& p) {
  TheoremReport rep;
  rep.id = id;

  if (id == "u1" || id == "u2") {
    const int d = p.d, b = p.b;
    if (p.m > 1) {
      rep.detail = "bivariate statement: m must be 1";
      return rep;
    }
    if (id == "u1") {
      if (!(b >= 2 && 2 * b <= d + 2)) {
        rep.detail = "hypotheses need 2 <= b <= (d+2)/2";
        return rep;
      }
      rep.applicable = true;
      const int n_pert = p.samples > 0 ? p.samples : 50;
      const int n_unif = p.samples > 0 ? 4 * p.samples : 200;
      for (int a = 0; 2 * a <= b; ++a) {
        const int e = b - 2 * a;
        CensusSpec spec = base_spec(p);
        spec.m = 1;
        spec.b = b;
        spec.types = {{e, a}};
        if (a == 0) {
          spec.samples_per_type = n_pert;
          auto res = run_census(spec);
          check_all_rank(rep, res, 0, b, "stratum " + stratum_name(e, a) + ": rank b");
          rep.censuses.push_back(std::move(res));
          continue;
        }
        spec.mode = SampleMode::perturbed;
        spec.samples_per_type = n_pert;
        auto pert = run_census(spec);
        int good = 0;
        for (const auto& rec : pert.records)
          if (rec.resolved() && rec.rank_value() == d) ++good;
        bool freq_ok = 10 * good >= 9 * n_pert;  // frequency >= 0.9
        add_check(rep, "stratum " + stratum_name(e, a) + ": perturbed rank-d frequency",
                  freq_ok, std::to_string(good) + "/" + std::to_string(n_pert));
        rep.censuses.push_back(std::move(pert));

        spec.mode = SampleMode::uniform;
        spec.samples_per_type = n_unif;
        spec.seed = derive_seed(p.seed, 0xAB, a);
        auto unif = run_census(spec);
        int hits = 0;
        for (const auto& rec : unif.records)
          if (rec.resolved() && rec.rank_value() == d) ++hits;
        add_check(rep, "stratum " + stratum_name(e, a) + ": uniform samples reach rank d",
                  hits > 0, std::to_string(hits) + "/" + std::to_string(n_unif));
        rep.censuses.push_back(std::move(unif));
      }
    } else {  // u2
      if (!(b >= 2 && d >= 2 * b - 1)) {
        rep.detail = "hypotheses need b >= 2 and d >= 2b-1";
        return rep;
      }
      rep.applicable = true;
      const int n = p.samples > 0 ? p.samples : 10;
      for (int a = 1; 2 * a <= b; ++a) {
        const int e = b - 2 * a;
        int good = 0;
        for (int s = 0; s < n; ++s) {
          std::uint64_t seed = derive_seed(p.seed, 0x1000 + a, s);
          try {
            auto [A, attempts] = affine_configuration(e, a, seed, p.point_height);
            (void)attempts;
            Rng rng(derive_seed(seed, 2, 0));
            GaussianRational c = random_gaussian_nonzero(rng, p.coeff_height);
            std::vector<PerturbationTerm> pert;
            for (int j = 1; j < a; ++j)
              pert.push_back({A.pairs[j].coords()[1],
                              random_gaussian_nonzero(rng, p.coeff_height)});
            for (int h = 0; h < e; ++h)
              pert.push_back({A.reals[h].coords()[1],
                              GaussianRational(Rational(rng.uniform_nonzero(p.coeff_height)))});
            auto w = binaryforms::witness_rank_d_at(d, c, A.pairs[0].coords()[1], pert);
            if (w.distinct_real_roots != d) continue;
            auto cert = binaryforms::real_rank(w.form);
            if (cert.exact() && cert.rank() == d) ++good;
          } catch (const std::exception&) {
            // counted as a miss
          }
        }
        add_check(rep, "stratum " + stratum_name(e, a) + ": witnesses have real rank d",
                  good == n, std::to_string(good) + "/" + std::to_string(n));
      }
    }
  } else if (id == "w2") {
    if (!(p.m >= 1 && p.d >= 3)) {
      rep.detail = "hypotheses need m >= 1 and d >= 3";
      return rep;
    }
    rep.applicable = true;
    CensusSpec spec = base_spec(p);
    spec.b = 2;
    spec.types = {{2, 0}, {0, 1}};
    spec.include_tangential = true;
    spec.samples_per_type = p.samples > 0 ? p.samples : 50;
    auto res = run_census(spec);
    check_all_rank(rep, res, 0, 2, "stratum (2,0): rank 2");
    check_all_rank(rep, res, 1, p.d, "stratum (0,1): rank d");
    check_all_rank(rep, res, -1, p.d, "tangential: rank d");
    if (p.m >= 2) {
      bool classes_ok = true;
      for (const auto& rec : res.records) {
        if (rec.failed || !rec.multi_cert || !rec.multi_cert->sigma2_class) {
          classes_ok = false;
          break;
        }
        auto cls = *rec.multi_cert->sigma2_class;
        auto want = rec.tangential           ? veronese::Sigma2Class::tangential
                    : rec.type_index == 0    ? veronese::Sigma2Class::real_pair
                                             : veronese::Sigma2Class::conj_pair;
        if (cls != want) {
          classes_ok = false;
          break;
        }
      }
      add_check(rep, "three-way classification matches the sampled strata", classes_ok, "");
    }
    rep.censuses.push_back(std::move(res));
  } else if (id.size() == 2 && id[0] == 'w' && id[1] >= '3' && id[1] <= '7') {
    const int b = id[1] - '0';
    if (!(p.m >= std::max(2, b - 1) && p.d >= 2 * b)) {
      rep.detail = "hypotheses need m >= max(2, b-1) and d >= 2b";
      return rep;
    }
    rep.applicable = true;
    CensusSpec spec = base_spec(p);
    spec.b = b;
    for (int a = 0; 2 * a <= b; ++a) spec.types.push_back({b - 2 * a, a});
    spec.samples_per_type = p.samples > 0 ? p.samples : 10;
    auto res = run_census(spec);
    std::set<int> observed;
    for (std::size_t ti = 0; ti < spec.types.size(); ++ti) {
      const auto [e, a] = spec.types[ti];
      const int want = a * p.d + e;
      check_all_rank(rep, res, static_cast<int>(ti),
                     want, "stratum " + stratum_name(e, a) + ": certified " + std::to_string(want));
      for (const auto& rec : res.records)
        if (rec.type_index == static_cast<int>(ti) && rec.resolved())
          observed.insert(rec.rank_value());
    }
    auto predicted = predicted_typical_ranks(b, p.d);
    bool set_ok = observed == std::set<int>(predicted.begin(), predicted.end());
    std::ostringstream oss;
    oss << "observed {";
    for (int v : observed) oss << " " << v;
    oss << " } expected {";
    for (int v : predicted) oss << " " << v;
    oss << " }";
    add_check(rep, "certified set equals the typical-rank list", set_ok, oss.str());
    rep.censuses.push_back(std::move(res));
  } else if (id == "w8") {
    const int b = p.b;
    if (!(p.m >= 2 && b >= 2 && p.d >= 2 * b - 1)) {
      rep.detail = "hypotheses need m >= 2, b >= 2, d >= 2b-1";
      return rep;
    }
    rep.applicable = true;
    CensusSpec spec = base_spec(p);
    spec.b = b;
    spec.types = {{b, 0}, {b - 2, 1}};
    spec.samples_per_type = p.samples > 0 ? p.samples : 20;
    auto res = run_census(spec);
    check_all_rank(rep, res, 0, b, "stratum " + stratum_name(b, 0) + ": certified b");
    check_all_rank(rep, res, 1, p.d + b - 2,
                   "stratum " + stratum_name(b - 2, 1) + ": certified b+d-2");
    bool border_ok = true, recon_ok = true;
    for (const auto& rec : res.records) {
      if (rec.failed || !rec.multi_cert) {
        border_ok = recon_ok = false;
        break;
      }
      border_ok = border_ok && rec.multi_cert->border_lower == b;
      recon_ok = recon_ok && rec.multi_cert->reconstruction_verified;
    }
    add_check(rep, "catalecticant border rank = b on every sample", border_ok, "");
    add_check(rep, "reconstruction verified on every sample", recon_ok, "");
    rep.censuses.push_back(std::move(res));
  } else {
    rep.detail = "unknown statement id";
    return rep;
  }

  rep.pass = rep.applicable;
  for (const auto& c : rep.checks) rep.pass = rep.pass && c.pass;
  return rep;
}

}  // namespace wrl::census
