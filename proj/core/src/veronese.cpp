#include "wrl/veronese/veronese.hpp"

#include <functional>

#include "wrl/exactmath/rng.hpp"

namespace wrl::veronese {

using exactmath::EchelonBasis;
using exactmath::Rng;

SymmetricForm::SymmetricForm(int m, int d, std::vector<Rational> weighted)
    : m_(m), d_(d), a_(std::move(weighted)) {
  const auto& table = MonomialTable::get(m, d);
  if (a_.size() != table.size())
    throw std::invalid_argument("SymmetricForm: coefficient count does not match (m, d)");
  bool nz = false;
  for (const auto& x : a_)
    if (!x.is_zero()) { nz = true; break; }
  if (!nz) throw std::invalid_argument("SymmetricForm: zero form");
}

SymmetricForm SymmetricForm::from_plain(int m, int d, const std::vector<Rational>& plain) {
  const auto& table = MonomialTable::get(m, d);
  if (plain.size() != table.size())
    throw std::invalid_argument("SymmetricForm: coefficient count does not match (m, d)");
  std::vector<Rational> a(plain.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i] = plain[i] / Rational(table.weight(i));
  return SymmetricForm(m, d, std::move(a));
}

SymmetricForm SymmetricForm::from_binary(const BinaryForm& f) {
  return SymmetricForm(1, f.degree(), f.weighted());
}

std::vector<Rational> SymmetricForm::plain() const {
  const auto& table = MonomialTable::get(m_, d_);
  std::vector<Rational> p(a_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = a_[i] * Rational(table.weight(i));
  return p;
}

BinaryForm SymmetricForm::to_binary() const {
  if (m_ != 1) throw std::domain_error("SymmetricForm::to_binary: m != 1");
  return BinaryForm(d_, a_);
}

namespace {

template <class K>
std::vector<std::vector<K>> coordinate_powers(const std::vector<K>& coords, int d) {
  std::vector<std::vector<K>> pw(coords.size());
  for (std::size_t j = 0; j < coords.size(); ++j) {
    pw[j].resize(d + 1);
    pw[j][0] = K(1);
    for (int e = 1; e <= d; ++e) pw[j][e] = pw[j][e - 1] * coords[j];
  }
  return pw;
}

template <class K>
std::vector<K> embed_weighted(const std::vector<K>& coords, int m, int d) {
  const auto& table = MonomialTable::get(m, d);
  auto pw = coordinate_powers(coords, d);
  std::vector<K> out(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& expo = table.exponents(i);
    K v(1);
    for (std::size_t j = 0; j < expo.size(); ++j)
      if (expo[j] != 0) v *= pw[j][expo[j]];
    out[i] = v;
  }
  return out;
}

}  // namespace

std::vector<GaussianRational> veronese_embed_weighted(const ProjectivePoint& p, int d) {
  return embed_weighted(p.coords(), p.m(), d);
}

std::vector<Rational> power_vector_weighted(const std::vector<Rational>& coords, int m, int d) {
  if (coords.size() != static_cast<std::size_t>(m) + 1)
    throw std::invalid_argument("power_vector_weighted: coordinate count mismatch");
  return embed_weighted(coords, m, d);
}

SymmetricForm product_of_linear_forms(int m, const std::vector<std::vector<Rational>>& linears) {
  if (linears.empty()) throw std::invalid_argument("product_of_linear_forms: empty product");
  for (const auto& l : linears)
    if (l.size() != static_cast<std::size_t>(m) + 1)
      throw std::invalid_argument("product_of_linear_forms: coordinate count mismatch");
  // plain coefficients multiply like polynomial coefficients
  std::vector<Rational> plain(m + 1);
  for (int j = 0; j <= m; ++j) plain[j] = linears[0][j];
  for (std::size_t t = 1; t < linears.size(); ++t) {
    const auto& cur_tbl = MonomialTable::get(m, static_cast<int>(t));
    const auto& next_tbl = MonomialTable::get(m, static_cast<int>(t) + 1);
    std::vector<Rational> next(next_tbl.size(), Rational(0));
    std::vector<unsigned> expo(m + 1);
    for (std::size_t i = 0; i < cur_tbl.size(); ++i) {
      if (plain[i].is_zero()) continue;
      expo = cur_tbl.exponents(i);
      for (int j = 0; j <= m; ++j) {
        if (linears[t][j].is_zero()) continue;
        ++expo[j];
        next[next_tbl.index(expo)] += plain[i] * linears[t][j];
        --expo[j];
      }
    }
    plain = std::move(next);
  }
  return SymmetricForm::from_plain(m, static_cast<int>(linears.size()), plain);
}

std::vector<Rational> veronese_embed_weighted_real(const ProjectivePoint& p, int d) {
  return embed_weighted(p.real_coords(), p.m(), d);
}

std::vector<GaussianRational> veronese_embed(const ProjectivePoint& p, int d) {
  const auto& table = MonomialTable::get(p.m(), d);
  auto out = veronese_embed_weighted(p, d);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] *= GaussianRational(Rational(table.weight(i)));
  return out;
}

std::vector<Rational> veronese_embed_real(const ProjectivePoint& p, int d) {
  const auto& table = MonomialTable::get(p.m(), d);
  auto out = veronese_embed_weighted_real(p, d);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= Rational(table.weight(i));
  return out;
}

std::vector<std::vector<Rational>> real_span_basis(const PointConfiguration& A, int d) {
  A.validate();
  const int b = A.b();
  if (d < b - 1)
    throw std::invalid_argument("real_span_basis: need d >= b - 1 for independence");

  std::vector<std::vector<Rational>> basis;
  basis.reserve(b);
  for (const auto& p : A.reals) basis.push_back(veronese_embed_weighted_real(p, d));
  for (const auto& q : A.pairs) {
    auto v = veronese_embed_weighted(q, d);
    std::vector<Rational> re(v.size()), im(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      re[i] = v[i].re();
      im[i] = v[i].im();
    }
    basis.push_back(std::move(re));
    basis.push_back(std::move(im));
  }
  if (exactmath::row_rank(basis) != static_cast<std::size_t>(b))
    throw std::invalid_argument(
        "real_span_basis: degenerate configuration, span has rank < b");
  return basis;
}

namespace {

// f as a Gaussian vector lies in the complex span of the embedded points?
bool in_complex_span(const std::vector<std::vector<GaussianRational>>& embeds,
                     const std::vector<GaussianRational>& f) {
  if (embeds.empty()) return false;
  EchelonBasis<GaussianRational> eb(f.size());
  for (const auto& v : embeds) eb.add_row(v);
  return eb.in_span(f);
}

}  // namespace

SymmetricForm sample_in_span(const PointConfiguration& A, int d, std::uint64_t seed,
                             long height_bound, SampleInfo* info, int resample_budget) {
  if (height_bound < 1) throw std::invalid_argument("sample_in_span: height bound must be >= 1");
  auto basis = real_span_basis(A, d);
  const int b = A.b();
  const int e = A.e();
  const int a = A.a();

  // all underlying points, embedded over Q(i), for the sub-span rank tests
  std::vector<std::vector<GaussianRational>> embeds;
  embeds.reserve(b);
  for (const auto& p : A.all_points()) embeds.push_back(veronese_embed_weighted(p, d));

  Rng rng(seed);
  for (int attempt = 0; attempt <= resample_budget; ++attempt) {
    std::vector<long> coef(b);
    for (auto& c : coef) c = rng.uniform(-height_bound, height_bound);

    // cheap pre-filter: zero slots put the sample in a proper sub-span
    bool degenerate = false;
    for (int h = 0; h < e && !degenerate; ++h) degenerate = (coef[h] == 0);
    for (int j = 0; j < a && !degenerate; ++j)
      degenerate = (coef[e + 2 * j] == 0 && coef[e + 2 * j + 1] == 0);
    if (degenerate) continue;

    std::vector<Rational> vec(basis[0].size(), Rational(0));
    for (int i = 0; i < b; ++i) {
      if (coef[i] == 0) continue;
      const Rational c(coef[i]);
      for (std::size_t t = 0; t < vec.size(); ++t) vec[t] += c * basis[i][t];
    }
    bool zero = true;
    for (const auto& x : vec)
      if (!x.is_zero()) { zero = false; break; }
    if (zero) continue;

    // genericity certificate: not in the span of any maximal proper subset
    std::vector<GaussianRational> gvec(vec.size());
    for (std::size_t t = 0; t < vec.size(); ++t) gvec[t] = GaussianRational(vec[t]);
    bool generic = true;
    for (std::size_t drop = 0; drop < embeds.size() && generic; ++drop) {
      std::vector<std::vector<GaussianRational>> sub;
      sub.reserve(embeds.size() - 1);
      for (std::size_t i = 0; i < embeds.size(); ++i)
        if (i != drop) sub.push_back(embeds[i]);
      if (in_complex_span(sub, gvec)) generic = false;
    }
    if (!generic) continue;

    if (info) {
      info->seed = seed;
      info->resamples = attempt;
      info->coefficients = coef;
    }
    return SymmetricForm(A.m, d, std::move(vec));
  }
  throw std::runtime_error("sample_in_span: resample budget exhausted");
}

namespace {

ProjectivePoint random_real_point(int m, Rng& rng, long height) {
  for (;;) {
    std::vector<GaussianRational> c(m + 1);
    bool nz = false;
    for (auto& x : c) {
      long v = rng.uniform(-height, height);
      x = GaussianRational(Rational(v));
      nz = nz || v != 0;
    }
    if (nz) return ProjectivePoint(std::move(c));
  }
}

ProjectivePoint random_pair_point(int m, Rng& rng, long height) {
  for (;;) {
    std::vector<GaussianRational> c(m + 1);
    bool nz = false;
    for (auto& x : c) {
      long re = rng.uniform(-height, height);
      long im = rng.uniform(-height, height);
      x = GaussianRational(Rational(re), Rational(im));
      nz = nz || re != 0 || im != 0;
    }
    if (!nz) continue;
    ProjectivePoint p(std::move(c));
    if (!p.is_real()) return p;
  }
}

std::size_t point_rank(const std::vector<ProjectivePoint>& pts) {
  std::vector<std::vector<GaussianRational>> rows;
  rows.reserve(pts.size());
  for (const auto& p : pts) rows.push_back(p.coords());
  return exactmath::row_rank(rows);
}

bool independent_in_degree(const std::vector<ProjectivePoint>& pts, int m, int t) {
  const auto& table = MonomialTable::get(m, t);
  std::vector<std::vector<GaussianRational>> rows;
  rows.reserve(pts.size());
  for (const auto& p : pts) rows.push_back(embed_weighted(p.coords(), m, t));
  const std::size_t want = std::min(pts.size(), table.size());
  return exactmath::row_rank(rows) == want;
}

}  // namespace

PointConfiguration sample_configuration(int m, int e, int a, std::uint64_t seed,
                                        long height_bound, const ConfigRequirements& req,
                                        int rejection_budget) {
  if (m < 1 || e < 0 || a < 0 || e + 2 * a < 1)
    throw std::invalid_argument("sample_configuration: bad (m, e, a)");
  if (height_bound < 1)
    throw std::invalid_argument("sample_configuration: height bound must be >= 1");

  Rng rng(seed);
  const int b = e + 2 * a;
  for (int attempt = 0; attempt < rejection_budget; ++attempt) {
    PointConfiguration A;
    A.m = m;
    for (int h = 0; h < e; ++h) A.reals.push_back(random_real_point(m, rng, height_bound));
    for (int j = 0; j < a; ++j) A.pairs.push_back(random_pair_point(m, rng, height_bound));

    try {
      A.validate();
    } catch (const std::invalid_argument&) {
      continue;  // coincident points; draw again
    }

    auto all = A.all_points();
    if (req.full_span &&
        point_rank(all) != static_cast<std::size_t>(std::min(m + 1, b)))
      continue;
    if (req.pair_span && a > 0) {
      std::vector<ProjectivePoint> pair_pts;
      for (const auto& q : A.pairs) {
        pair_pts.push_back(q);
        pair_pts.push_back(q.conjugate());
      }
      if (point_rank(pair_pts) != static_cast<std::size_t>(std::min(m + 1, 2 * a))) continue;
    }
    if (req.no_three_collinear && m >= 2 && b >= 3) {
      bool ok = true;
      for (std::size_t i = 0; i < all.size() && ok; ++i)
        for (std::size_t j = i + 1; j < all.size() && ok; ++j)
          for (std::size_t k = j + 1; k < all.size() && ok; ++k)
            ok = point_rank({all[i], all[j], all[k]}) == 3;
      if (!ok) continue;
    }
    if (req.independent_conditions) {
      const auto& t1 = MonomialTable::get(m, 1);
      (void)t1;
      bool ok = true;
      for (int t = 1; ok; ++t) {
        const std::size_t dim = MonomialTable::get(m, t).size();
        ok = independent_in_degree(all, m, t);
        if (dim >= static_cast<std::size_t>(b)) break;  // independence is monotone beyond t*
      }
      if (!ok) continue;
    }
    return A;
  }
  throw std::runtime_error(
      "sample_configuration: rejection budget exhausted; raise the height bound");
}

Matrix<Rational> catalecticant_multi(const SymmetricForm& f, int k) {
  const int m = f.m(), d = f.d();
  if (k < 0 || k > d) throw std::invalid_argument("catalecticant_multi: k out of range");
  const auto& rows_tbl = MonomialTable::get(m, d - k == 0 ? d : d - k);
  const auto& cols_tbl = MonomialTable::get(m, k == 0 ? d : k);
  const auto& full_tbl = MonomialTable::get(m, d);
  // degree-0 tables do not exist; handle k in {0, d} directly
  if (k == 0 || k == d) {
    const std::size_t n = full_tbl.size();
    Matrix<Rational> mat(k == 0 ? n : 1, k == 0 ? 1 : n);
    for (std::size_t i = 0; i < n; ++i) {
      if (k == 0)
        mat.at(i, 0) = f.weighted()[i];
      else
        mat.at(0, i) = f.weighted()[i];
    }
    return mat;
  }
  Matrix<Rational> mat(rows_tbl.size(), cols_tbl.size());
  std::vector<unsigned> expo(m + 1);
  for (std::size_t r = 0; r < rows_tbl.size(); ++r) {
    const auto& gamma = rows_tbl.exponents(r);
    for (std::size_t c = 0; c < cols_tbl.size(); ++c) {
      const auto& beta = cols_tbl.exponents(c);
      for (int j = 0; j <= m; ++j) expo[j] = gamma[j] + beta[j];
      mat.at(r, c) = f.weighted()[full_tbl.index(expo)];
    }
  }
  return mat;
}

int border_rank_lower(const SymmetricForm& f, int cap) {
  const int m = f.m(), d = f.d();
  const auto& full_tbl = MonomialTable::get(m, d);
  int best = 0;
  for (int k = 1; k <= d / 2; ++k) {
    const auto& rows_tbl = MonomialTable::get(m, d - k);
    const auto& cols_tbl = MonomialTable::get(m, k);
    std::size_t next = 0;
    std::vector<unsigned> expo(m + 1);
    auto provider = [&](std::vector<Rational>& row) {
      if (next >= rows_tbl.size()) return false;
      const auto& gamma = rows_tbl.exponents(next++);
      row.resize(cols_tbl.size());
      for (std::size_t c = 0; c < cols_tbl.size(); ++c) {
        const auto& beta = cols_tbl.exponents(c);
        for (int j = 0; j <= m; ++j) expo[j] = gamma[j] + beta[j];
        row[c] = f.weighted()[full_tbl.index(expo)];
      }
      return true;
    };
    int r = static_cast<int>(exactmath::streamed_rank<Rational>(
        cols_tbl.size(), provider, cap > 0 ? static_cast<std::size_t>(cap) : 0));
    best = std::max(best, r);
    if (cap > 0 && best >= cap) return best;
  }
  return best;
}

namespace {

// plain coefficients of prod_j (s v0_j + t v1_j)^(alpha_j), low index =
// high power of s
std::vector<Rational> binary_expand(const RealLine& line, const std::vector<unsigned>& expo) {
  std::vector<Rational> poly{Rational(1)};  // degree 0
  for (std::size_t j = 0; j < expo.size(); ++j) {
    for (unsigned rep = 0; rep < expo[j]; ++rep) {
      std::vector<Rational> next(poly.size() + 1, Rational(0));
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i] += poly[i] * line.v0[j];      // times s
        next[i + 1] += poly[i] * line.v1[j];  // times t
      }
      poly = std::move(next);
    }
  }
  return poly;
}

}  // namespace

SymmetricForm push_to_ambient(const RealLine& line, const BinaryForm& g, int m) {
  const int d = g.degree();
  if (line.v0.size() != static_cast<std::size_t>(m) + 1 || line.v1.size() != line.v0.size())
    throw std::invalid_argument("push_to_ambient: line dimension mismatch");
  const auto& table = MonomialTable::get(m, d);
  const auto& gw = g.weighted();
  std::vector<Rational> out(table.size(), Rational(0));
  for (std::size_t i = 0; i < table.size(); ++i) {
    // weighted coordinate of Phi(g) at alpha: the pairing of g's weighted
    // binary coordinates with the (s, t)-expansion of (s v0 + t v1)^alpha
    auto expand = binary_expand(line, table.exponents(i));  // length d+1
    Rational acc(0);
    for (int t = 0; t <= d; ++t)
      if (!expand[t].is_zero()) acc += expand[t] * gw[t];
    out[i] = acc;
  }
  return SymmetricForm(m, d, std::move(out));
}

BinaryForm line_coordinates(const SymmetricForm& f, const RealLine& line) {
  const int d = f.d();
  const int m = f.m();
  if (line.v0.size() != static_cast<std::size_t>(m) + 1 || line.v1.size() != line.v0.size())
    throw std::invalid_argument("line_coordinates: line dimension mismatch");
  const auto& table = MonomialTable::get(m, d);
  // columns of Phi in the weighted coordinates
  std::vector<std::vector<Rational>> cols(d + 1, std::vector<Rational>(table.size()));
  for (std::size_t i = 0; i < table.size(); ++i) {
    auto expand = binary_expand(line, table.exponents(i));
    for (int t = 0; t <= d; ++t) cols[t][i] = expand[t];
  }
  auto solve = exactmath::span_solve(cols, f.weighted());
  if (solve.rank != static_cast<std::size_t>(d) + 1)
    throw std::invalid_argument("line_coordinates: degenerate line");
  if (!solve.coeffs)
    throw std::invalid_argument("line_coordinates: form not supported on the line");
  return BinaryForm(d, std::move(*solve.coeffs));
}

RealLine recover_sigma2_line(const SymmetricForm& f) {
  const int m = f.m();
  if (m == 1) return RealLine{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  auto cat1 = catalecticant_multi(f, 1);
  auto linear_apolar = cat1.right_kernel();  // linear forms vanishing on <Z>
  if (linear_apolar.size() != static_cast<std::size_t>(m) - 1)
    throw std::invalid_argument("recover_sigma2_line: degenerate apolar locus");
  Matrix<Rational> constraints = Matrix<Rational>::from_rows(linear_apolar);
  auto line_basis = constraints.right_kernel();
  if (line_basis.size() != 2)
    throw std::invalid_argument("recover_sigma2_line: apolar locus is not a line");
  return RealLine{line_basis[0], line_basis[1]};
}

Sigma2Analysis classify_sigma2(const SymmetricForm& f) {
  const int d = f.d();
  if (d < 3) throw std::invalid_argument("classify_sigma2: need degree >= 3");
  if (static_cast<int>(catalecticant_multi(f, 1).rank()) != 2)
    throw std::invalid_argument("classify_sigma2: form does not have border rank 2");

  RealLine line = recover_sigma2_line(f);
  BinaryForm o = line_coordinates(f, line);  // throws unless f sits on the line
  if (binaryforms::border_rank(o) != 2)
    throw std::invalid_argument("classify_sigma2: border rank on the line is not 2");

  auto kernel = binaryforms::catalecticant(o, 2).right_kernel();
  if (kernel.size() != 1)
    throw std::invalid_argument("classify_sigma2: degree-2 apolar space is not a pencil point");
  auto q = binaryforms::ApolarForm<Rational>::from_kernel_vector(2, kernel[0]);
  auto b = q.kernel_vector();
  Rational disc = b[1] * b[1] - Rational(4) * b[0] * b[2];

  Sigma2Analysis out{Sigma2Class::tangential, std::move(line), std::move(o), disc};
  if (disc.sign() > 0)
    out.cls = Sigma2Class::real_pair;
  else if (disc.sign() < 0)
    out.cls = Sigma2Class::conj_pair;
  return out;
}

}  // namespace wrl::veronese
