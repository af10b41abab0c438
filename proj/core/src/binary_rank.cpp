#include "wrl/binaryforms/binary_rank.hpp"

#include <algorithm>

#include "wrl/exactmath/rng.hpp"

namespace wrl::binaryforms {

namespace {

using exactmath::Rng;

template <class K>
std::optional<ApolarForm<K>> search_kernel(int level, const std::vector<std::vector<K>>& kernel,
                                           const RankSearchOptions& opt,
                                           bool (*good)(const UniPoly<K>&, int)) {
  auto check = [&](const std::vector<K>& vec) -> std::optional<ApolarForm<K>> {
    auto g = ApolarForm<K>::from_kernel_vector(level, vec);
    if (g.univ.is_zero_poly()) return std::nullopt;
    if (good(g.univ, level)) return g;
    return std::nullopt;
  };

  for (const auto& v : kernel)
    if (auto g = check(v)) return g;
  if (kernel.size() < 2) return std::nullopt;

  // deterministic pencil sweep: enough multipliers to dodge every
  // non-squarefree member of a basepoint-free pencil
  for (std::size_t i = 0; i + 1 < kernel.size(); ++i) {
    for (long lam = 1; lam <= 2 * level + 3; ++lam) {
      for (long s : {lam, -lam}) {
        std::vector<K> v(kernel[i]);
        for (std::size_t j = 0; j < v.size(); ++j) v[j] += K(s) * kernel[i + 1][j];
        if (auto g = check(v)) return g;
      }
    }
  }

  Rng rng(opt.seed ^ (0x9E3779B97F4A7C15ull * (level + 1)));
  const long heights[] = {1, 2, 4, 8};
  const int per_height = std::max(1, opt.budget_per_level / 4);
  for (long h : heights) {
    for (int trial = 0; trial < per_height; ++trial) {
      std::vector<K> v(kernel[0].size(), K(0));
      bool nz = false;
      for (const auto& kv : kernel) {
        long c = rng.uniform(-h, h);
        if (c == 0) continue;
        nz = true;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] += K(c) * kv[j];
      }
      if (!nz) continue;
      if (auto g = check(v)) return g;
    }
  }
  return std::nullopt;
}

template <class K>
bool squarefree_pred(const UniPoly<K>& univ, int level) {
  return is_squarefree_form(univ, level);
}

bool real_rooted_pred(const UniPoly<Rational>& univ, int level) {
  return totally_real_distinct(univ, level);
}

template <class K>
ComplexRankResult<K> complex_rank_impl(const BinaryFormT<K>& f, const RankSearchOptions& opt) {
  const int d = f.degree();
  const int b = border_rank(f);

  auto kernel_b = catalecticant(f, b).right_kernel();
  if (auto g = search_kernel<K>(b, kernel_b, opt, &squarefree_pred<K>))
    return {b, std::move(*g)};

  // Non-reduced apolar scheme at the border level: the classical jump.
  const int r2 = d - b + 2;
  auto kernel_j = catalecticant(f, r2).right_kernel();
  if (auto g = search_kernel<K>(r2, kernel_j, opt, &squarefree_pred<K>))
    return {r2, std::move(*g)};
  throw std::logic_error("complex_rank: no squarefree apolar form at the jump level");
}

// discriminant of the degree-2 apolar form b0 y0^2 + b1 y0 y1 + b2 y1^2
Rational quadric_discriminant(const ApolarForm<Rational>& q) {
  auto b = q.kernel_vector();
  return b[1] * b[1] - Rational(4) * b[0] * b[2];
}

}  // namespace

ComplexRankResult<Rational> complex_rank(const BinaryForm& f, const RankSearchOptions& opt) {
  return complex_rank_impl(f, opt);
}
ComplexRankResult<GaussianRational> complex_rank(const GaussianBinaryForm& f,
                                                 const RankSearchOptions& opt) {
  return complex_rank_impl(f, opt);
}

SplitApolarWitness totally_split_apolar(const BinaryForm& f) {
  const int d = f.degree();
  const auto& a = f.weighted();

  std::vector<Rational> nodes(d);
  for (int i = 0; i < d; ++i) nodes[i] = Rational(i - (d - 1) / 2);

  // corner forms: products over the node set {t_1..t_d, infinity} minus one
  auto finite_product = [&](int skip) {
    UniPoly<Rational> p = UniPoly<Rational>::constant(Rational(1));
    for (int i = 0; i < d; ++i)
      if (i != skip) p = p * UniPoly<Rational>::linear_root(nodes[i]);
    return p;
  };
  std::vector<ApolarForm<Rational>> corner(d + 1);
  for (int i = 0; i < d; ++i) corner[i] = ApolarForm<Rational>{d, finite_product(i)};
  corner[d] = ApolarForm<Rational>{d, finite_product(-1)};  // omits infinity

  auto pair_with_f = [&](const ApolarForm<Rational>& g) {
    auto b = g.kernel_vector();
    Rational acc(0);
    for (int j = 0; j <= d; ++j) acc += a[j] * b[j];
    return acc;
  };
  std::vector<Rational> w(d + 1);
  for (int i = 0; i <= d; ++i) w[i] = pair_with_f(corner[i]);

  SplitApolarWitness out;
  auto finish = [&](ApolarForm<Rational> g, std::vector<std::optional<Rational>> roots) {
    if (!is_apolar(f, g)) throw std::logic_error("totally_split_apolar: witness not apolar");
    if (distinct_projective_real_roots(g.univ, d) != d)
      throw std::logic_error("totally_split_apolar: witness roots not distinct");
    out.form = std::move(g);
    out.roots = std::move(roots);
    return out;
  };

  for (int i = 0; i <= d; ++i) {
    if (!w[i].is_zero()) continue;
    std::vector<std::optional<Rational>> roots;
    for (int j = 0; j < d; ++j)
      if (j != i) roots.emplace_back(nodes[j]);
    if (i != d) roots.emplace_back(std::nullopt);  // infinity stays a root
    return finish(corner[i], std::move(roots));
  }

  // arcs around P^1(R); the corner omitting t_d is negated on the
  // (t_d, +inf) arc so the moving root slides outward, which also forces a
  // sign change somewhere even when all raw pairings agree in sign
  struct Arc {
    int ca, cb;  // corner indices
    int sa, sb;  // corner orientation signs
  };
  std::vector<Arc> arcs;
  for (int i = 0; i + 1 < d; ++i) arcs.push_back({i, i + 1, 1, 1});
  arcs.push_back({d - 1, d, -1, 1});  // (t_d, inf)
  arcs.push_back({d, 0, 1, 1});       // (inf, t_1)

  for (const Arc& arc : arcs) {
    Rational wa = Rational(arc.sa) * w[arc.ca];
    Rational wb = Rational(arc.sb) * w[arc.cb];
    if (wa.is_zero() || wb.is_zero() || wa.sign() == wb.sign()) continue;
    // g = wb * A - wa * B is apolar and totally split with a rational
    // moving root strictly inside the arc
    UniPoly<Rational> univ =
        wb * (Rational(arc.sa) * corner[arc.ca].univ) - wa * (Rational(arc.sb) * corner[arc.cb].univ);
    ApolarForm<Rational> g{d, univ};

    // shared roots: every node except the arc endpoints
    std::vector<std::optional<Rational>> roots;
    UniPoly<Rational> shared = UniPoly<Rational>::constant(Rational(1));
    auto is_endpoint = [&](int j) { return j == arc.ca || j == arc.cb; };
    for (int j = 0; j < d; ++j) {
      if (is_endpoint(j)) continue;
      roots.emplace_back(nodes[j]);
      shared = shared * UniPoly<Rational>::linear_root(nodes[j]);
    }
    bool infinity_shared = !(arc.ca == d || arc.cb == d);
    if (infinity_shared) roots.emplace_back(std::nullopt);
    auto [quot, rem] = divmod(univ, shared);
    if (!rem.is_zero_poly() || quot.degree() != 1)
      throw std::logic_error("totally_split_apolar: bad moving factor");
    roots.emplace_back(-quot[0] / quot[1]);
    return finish(std::move(g), std::move(roots));
  }
  throw std::logic_error("totally_split_apolar: no sign change on the node circle");
}

BinaryRankCertificate real_rank(const BinaryForm& f, const RankSearchOptions& opt) {
  BinaryRankCertificate cert;
  const int d = f.degree();
  cert.d = d;
  cert.border_rank = border_rank(f);
  auto cx = complex_rank(f, opt);
  cert.complex_rank = cx.rank;

  cert.lower = cx.rank;
  cert.lower_rule = "complex-rank";
  if (totally_real_distinct(f.univariate(), d)) {
    // d distinct real roots pin the real rank at d
    cert.lower = d;
    cert.lower_rule = "totally-real-roots";
  } else if (cx.rank == 2 && quadric_discriminant(cx.witness).sign() < 0) {
    // border rank 2 with a conjugate apolar pair: real rank is d
    cert.lower = d;
    cert.lower_rule = "sigma2-conjugate-pair";
  }

  std::optional<ApolarForm<Rational>> witness;
  std::optional<std::vector<std::optional<Rational>>> known_roots;
  int upper = d;
  if (cert.lower < d) {
    for (int r = cx.rank; r < d && !witness; ++r) {
      auto kernel = catalecticant(f, r).right_kernel();
      if (auto g = search_kernel<Rational>(r, kernel, opt, &real_rooted_pred)) {
        witness = std::move(g);
        upper = r;
      }
    }
  }
  if (!witness) {
    auto split = totally_split_apolar(f);
    witness = std::move(split.form);
    known_roots = std::move(split.roots);
    upper = d;
  }

  cert.upper = upper;
  cert.status = (cert.lower == cert.upper) ? CertStatus::exact : CertStatus::bounded;
  cert.witness_apolar = witness;
  if (opt.with_decomposition) {
    cert.witness_decomposition =
        known_roots ? decompose_with_roots(f, *known_roots) : decompose_binary(f, *witness);
  }
  return cert;
}

}  // namespace wrl::binaryforms
