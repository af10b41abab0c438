#include "criteria.hpp"

#include <sstream>

#include "wrl/binaryforms/witness.hpp"
#include "wrl/census/census.hpp"
#include "wrl/exactmath/rng.hpp"

namespace acceptance {

using wrl::binaryforms::BinaryForm;
using wrl::census::CensusResult;
using wrl::census::TheoremParams;
using wrl::census::TheoremReport;
using wrl::exactmath::GaussianRational;
using wrl::exactmath::Matrix;
using wrl::exactmath::Rational;
using wrl::exactmath::Rng;
using wrl::exactmath::UniPoly;

namespace {

constexpr std::uint64_t kSeedBase = 0x57524C2D414343ull;

Rational Q(long n, long d = 1) { return Rational(n, d); }

void note_checks(CriterionResult& r, const TheoremReport& rep, const std::string& prefix) {
  if (!rep.applicable) {
    r.pass = false;
    r.lines.push_back(prefix + " NOT APPLICABLE: " + rep.detail);
    return;
  }
  for (const auto& c : rep.checks) {
    r.lines.push_back(prefix + (c.pass ? " ok  " : " FAIL ") + c.name +
                      (c.detail.empty() ? "" : " [" + c.detail + "]"));
    r.pass = r.pass && c.pass;
  }
}

// ---------------------------------------------------------------- criterion 1
CriterionResult criterion1() {
  CriterionResult r{1, "sigma_2 classification census (m = 1 and m = 2, d = 7)", true, {}};
  for (int m : {1, 2}) {
    TheoremParams p;
    p.m = m;
    p.d = 7;
    p.samples = 50;
    p.seed = wrl::exactmath::derive_seed(kSeedBase, 1, m);
    auto rep = wrl::census::verify_theorem("w2", p);
    note_checks(r, rep, "m=" + std::to_string(m) + ":");
  }
  return r;
}

// ---------------------------------------------------------------- criterion 2
CriterionResult criterion2() {
  CriterionResult r{2, "witness construction certifies rank d for d = 3..12", true, {}};
  Rng rng(wrl::exactmath::derive_seed(kSeedBase, 2, 0));
  for (int d = 3; d <= 12; ++d) {
    int good = 0;
    const int n = 10;
    for (int t = 0; t < n; ++t) {
      GaussianRational c(Q(rng.uniform(-10, 10)), Q(rng.uniform(-10, 10)));
      if (c.is_zero()) c = GaussianRational(Q(1), Q(1));
      auto w = wrl::binaryforms::witness_rank_d(d, c);
      if (w.distinct_real_roots != d) continue;
      auto cert = wrl::binaryforms::real_rank(w.form);
      if (cert.exact() && cert.rank() == d) ++good;
    }
    r.lines.push_back("d=" + std::to_string(d) + ": " + std::to_string(good) + "/" +
                      std::to_string(n) + " certified rank d");
    r.pass = r.pass && good == n;
  }
  return r;
}

// ---------------------------------------------------------------- criterion 3
CriterionResult criterion3() {
  CriterionResult r{3, "bivariate census at d = 9: rank 9 typical on every pair stratum", true, {}};
  for (int b = 2; b <= 5; ++b) {
    TheoremParams p;
    p.m = 1;
    p.d = 9;
    p.b = b;
    p.samples = 50;  // 50 perturbed, 200 uniform per stratum
    p.seed = wrl::exactmath::derive_seed(kSeedBase, 3, b);
    auto rep = wrl::census::verify_theorem("u1", p);
    note_checks(r, rep, "b=" + std::to_string(b) + ":");
  }
  return r;
}

// ---------------------------------------------------------------- criterion 4
CriterionResult criterion4() {
  CriterionResult r{4, "first nontrivial typical rank b+d-2 at (m=2, d=7, b=4)", true, {}};
  TheoremParams p;
  p.m = 2;
  p.d = 7;
  p.b = 4;
  p.samples = 20;
  p.seed = wrl::exactmath::derive_seed(kSeedBase, 4, 0);
  auto rep = wrl::census::verify_theorem("w8", p);
  note_checks(r, rep, "w8:");
  return r;
}

// ---------------------------------------------------------------- criterion 5
CriterionResult criterion5() {
  CriterionResult r{5, "typical-rank sets for border ranks 3..7 at minimal parameters", true, {}};
  const std::pair<std::string, std::pair<int, int>> cases[] = {
      {"w3", {2, 6}}, {"w4", {3, 8}}, {"w5", {4, 10}}, {"w6", {5, 12}}, {"w7", {6, 14}}};
  for (const auto& [id, md] : cases) {
    TheoremParams p;
    p.m = md.first;
    p.d = md.second;
    p.samples = 10;
    p.seed = wrl::exactmath::derive_seed(kSeedBase, 5, md.first);
    auto rep = wrl::census::verify_theorem(id, p);
    note_checks(r, rep, id + ":");
  }
  return r;
}

// ---------------------------------------------------------------- criterion 6
CriterionResult criterion6() {
  CriterionResult r{6, "generic complex rank floor((d+2)/2) on random real forms", true, {}};
  Rng rng(wrl::exactmath::derive_seed(kSeedBase, 6, 0));
  for (int d = 4; d <= 8; ++d) {
    int good = 0;
    const int n = 100;
    for (int t = 0; t < n; ++t) {
      std::vector<Rational> plain(d + 1);
      bool nz = false;
      for (auto& x : plain) {
        long v = rng.uniform(-50, 50);
        x = Q(v);
        nz = nz || v != 0;
      }
      if (!nz) {
        plain[0] = Q(1);
      }
      auto f = BinaryForm::from_plain(d, plain);
      auto cx = wrl::binaryforms::complex_rank(f);
      if (cx.rank == (d + 2) / 2) {
        ++good;
      } else {
        r.lines.push_back("  exception at d=" + std::to_string(d) + ": rank " +
                          std::to_string(cx.rank));
      }
    }
    r.lines.push_back("d=" + std::to_string(d) + ": " + std::to_string(good) + "/" +
                      std::to_string(n) + " with complex rank " + std::to_string((d + 2) / 2));
    r.pass = r.pass && good == n;
  }
  return r;
}

// ---------------------------------------------------------------- criterion 7
// independent oracle: the classical discriminant of a cubic in z
Rational cubic_discriminant(const std::vector<Rational>& plain_z) {
  // plain_z = (p0, p1, p2, p3) low-to-high, p3 != 0
  const Rational &e = plain_z[0], &c = plain_z[1], &b = plain_z[2], &a = plain_z[3];
  return Q(18) * a * b * c * e - Q(4) * b * b * b * e + b * b * c * c - Q(4) * a * c * c * c -
         Q(27) * a * a * e * e;
}

CriterionResult criterion7() {
  CriterionResult r{7, "cubic ranks agree with the discriminant classification", true, {}};
  Rng rng(wrl::exactmath::derive_seed(kSeedBase, 7, 0));
  int three = 0, two = 0;
  const int n = 200;
  for (int t = 0; t < n; ++t) {
    std::vector<Rational> pz(4);
    Rational disc;
    do {
      for (auto& x : pz) x = Q(rng.uniform(-30, 30));
      while (pz[3].is_zero()) pz[3] = Q(rng.uniform(-30, 30));
      disc = cubic_discriminant(pz);
    } while (disc.is_zero());
    // storage order is z^3 .. z^0
    auto f = BinaryForm::from_plain(3, {pz[3], pz[2], pz[1], pz[0]});
    auto cert = wrl::binaryforms::real_rank(f);
    const int expected = disc.sign() > 0 ? 3 : 2;
    if (!cert.exact() || cert.rank() != expected) {
      r.pass = false;
      r.lines.push_back("  mismatch: disc sign " + std::to_string(disc.sign()) + " rank " +
                        std::to_string(cert.upper));
      continue;
    }
    (expected == 3 ? three : two) += 1;
  }
  r.lines.push_back("200 cubics: " + std::to_string(three) + " with 3 real roots (rank 3), " +
                    std::to_string(two) + " with one real root (rank 2)");
  r.pass = r.pass && (three + two == n);
  return r;
}

// ---------------------------------------------------------------- criterion 8
struct ReconTally {
  int checked = 0;
  int failures = 0;
};

void recheck_census(const CensusResult& res, ReconTally& tally) {
  for (const auto& rec : res.records) {
    if (rec.failed) {
      ++tally.failures;
      continue;
    }
    auto f = wrl::census::replay_form(res.spec, rec);
    bool ok = false;
    if (rec.multi_cert) {
      ok = wrl::rankcert::verify_reconstruction(f, rec.multi_cert->decomposition);
    } else if (rec.binary_cert && rec.binary_cert->witness_decomposition) {
      ok = wrl::binaryforms::verify_decomposition(f.to_binary(),
                                                  *rec.binary_cert->witness_decomposition);
    }
    ++tally.checked;
    if (!ok) ++tally.failures;
  }
}

CriterionResult criterion8() {
  CriterionResult r{8, "property suites and reconstruction exactness", true, {}};

  // rank-nullity on 1000 random matrices
  {
    Rng rng(wrl::exactmath::derive_seed(kSeedBase, 8, 1));
    int bad = 0;
    for (int t = 0; t < 800; ++t) {
      std::size_t rows = 1 + rng.uniform(0, 5), cols = 1 + rng.uniform(0, 5);
      Matrix<Rational> m(rows, cols);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
          m.at(i, j) = Q(rng.uniform(-100, 100), 1 + rng.uniform(0, 9));
      if (m.rank() + m.right_kernel().size() != cols) ++bad;
    }
    for (int t = 0; t < 200; ++t) {
      std::size_t rows = 1 + rng.uniform(0, 4), cols = 1 + rng.uniform(0, 4);
      Matrix<GaussianRational> m(rows, cols);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
          m.at(i, j) = GaussianRational(Q(rng.uniform(-50, 50)), Q(rng.uniform(-50, 50)));
      if (m.rank() + m.right_kernel().size() != cols) ++bad;
    }
    r.lines.push_back("rank-nullity on 1000 random matrices: " + std::to_string(bad) +
                      " violations");
    r.pass = r.pass && bad == 0;
  }

  // Sturm vs the factor oracle on 500 constructed polynomials
  {
    Rng rng(wrl::exactmath::derive_seed(kSeedBase, 8, 2));
    int bad = 0;
    for (int t = 0; t < 500; ++t) {
      UniPoly<Rational> p = UniPoly<Rational>::constant(Q(rng.uniform_nonzero(9)));
      std::vector<Rational> roots;
      int factors = 1 + rng.uniform(0, 3);
      for (int k = 0; k < factors; ++k) {
        if (rng.coin()) {
          Rational root = Q(rng.uniform(-9, 9), 1 + rng.uniform(0, 3));
          roots.push_back(root);
          p = p * UniPoly<Rational>::linear_root(root);
        } else {
          Rational u = Q(rng.uniform(-6, 6)), v = Q(rng.uniform_nonzero(6));
          p = p * UniPoly<Rational>({u * u + v * v, Q(-2) * u, Q(1)});
        }
      }
      std::sort(roots.begin(), roots.end());
      roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
      if (wrl::exactmath::sturm_distinct_real_roots(p) != static_cast<int>(roots.size())) ++bad;
    }
    r.lines.push_back("sturm vs factor oracle on 500 products: " + std::to_string(bad) +
                      " mismatches");
    r.pass = r.pass && bad == 0;
  }

  // conjugation equivariance of the embedding on 500 random points
  {
    Rng rng(wrl::exactmath::derive_seed(kSeedBase, 8, 3));
    int bad = 0;
    for (int t = 0; t < 500; ++t) {
      int m = 1 + rng.uniform(0, 3), d = 2 + rng.uniform(0, 4);
      std::vector<GaussianRational> coords(m + 1);
      bool nz = false;
      for (auto& x : coords) {
        x = GaussianRational(Q(rng.uniform(-9, 9)), Q(rng.uniform(-9, 9)));
        nz = nz || !x.is_zero();
      }
      if (!nz) coords[0] = GaussianRational(Q(1));
      wrl::veronese::ProjectivePoint pt(coords);
      auto lhs = wrl::veronese::veronese_embed(pt.conjugate(), d);
      auto rhs = wrl::veronese::veronese_embed(pt, d);
      for (auto& x : rhs) x = x.conjugate();
      if (lhs != rhs) ++bad;
    }
    r.lines.push_back("conjugation equivariance on 500 points: " + std::to_string(bad) +
                      " violations");
    r.pass = r.pass && bad == 0;
  }

  // reconstruction exactness on every certificate produced in criteria 1-5:
  // the censuses are deterministic in their seeds, so rerunning them
  // regenerates the identical certificates, which are then re-verified
  // against independently replayed forms
  {
    ReconTally tally;
    for (int m : {1, 2}) {
      TheoremParams p;
      p.m = m;
      p.d = 7;
      p.samples = 50;
      p.seed = wrl::exactmath::derive_seed(kSeedBase, 1, m);
      for (const auto& res : wrl::census::verify_theorem("w2", p).censuses)
        recheck_census(res, tally);
    }
    for (int b = 2; b <= 5; ++b) {
      TheoremParams p;
      p.m = 1;
      p.d = 9;
      p.b = b;
      p.samples = 50;
      p.seed = wrl::exactmath::derive_seed(kSeedBase, 3, b);
      for (const auto& res : wrl::census::verify_theorem("u1", p).censuses)
        recheck_census(res, tally);
    }
    {
      TheoremParams p;
      p.m = 2;
      p.d = 7;
      p.b = 4;
      p.samples = 20;
      p.seed = wrl::exactmath::derive_seed(kSeedBase, 4, 0);
      for (const auto& res : wrl::census::verify_theorem("w8", p).censuses)
        recheck_census(res, tally);
    }
    const std::pair<std::string, std::pair<int, int>> cases[] = {
        {"w3", {2, 6}}, {"w4", {3, 8}}, {"w5", {4, 10}}, {"w6", {5, 12}}, {"w7", {6, 14}}};
    for (const auto& [id, md] : cases) {
      TheoremParams p;
      p.m = md.first;
      p.d = md.second;
      p.samples = 10;
      p.seed = wrl::exactmath::derive_seed(kSeedBase, 5, md.first);
      for (const auto& res : wrl::census::verify_theorem(id, p).censuses)
        recheck_census(res, tally);
    }
    r.lines.push_back("reconstruction re-verified on " + std::to_string(tally.checked) +
                      " replayed certificates: " + std::to_string(tally.failures) + " failures");
    r.pass = r.pass && tally.failures == 0 && tally.checked > 0;
  }

  return r;
}

}  // namespace

CriterionResult run_criterion(int id) {
  switch (id) {
    case 1: return criterion1();
    case 2: return criterion2();
    case 3: return criterion3();
    case 4: return criterion4();
    case 5: return criterion5();
    case 6: return criterion6();
    case 7: return criterion7();
    case 8: return criterion8();
    default: throw std::invalid_argument("criterion id must be 1..8");
  }
}

}  // namespace acceptance
