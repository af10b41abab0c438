#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wrl/exactmath/rng.hpp"
#include "wrl/veronese/veronese.hpp"

using namespace wrl::veronese;
using wrl::exactmath::GaussianRational;
using wrl::exactmath::Rational;
using wrl::exactmath::Rng;

namespace {

Rational Q(long n, long d = 1) { return Rational(n, d); }
GaussianRational G(long re, long im = 0) { return GaussianRational(Q(re), Q(im)); }

ProjectivePoint pt(std::initializer_list<GaussianRational> coords) {
  return ProjectivePoint(std::vector<GaussianRational>(coords));
}

ProjectivePoint random_point(int m, Rng& rng, bool real) {
  std::vector<GaussianRational> c(m + 1);
  for (;;) {
    bool nz = false;
    for (auto& x : c) {
      x = GaussianRational(Q(rng.uniform(-8, 8)), real ? Q(0) : Q(rng.uniform(-8, 8)));
      nz = nz || !x.is_zero();
    }
    if (!nz) continue;
    ProjectivePoint p(c);
    if (real == p.is_real()) return p;
  }
}

}  // namespace

TEST_CASE("monomial table order matches the binary convention") {
  const auto& t1 = MonomialTable::get(1, 3);
  REQUIRE(t1.size() == 4);
  CHECK(t1.exponents(0) == std::vector<unsigned>{3, 0});
  CHECK(t1.exponents(1) == std::vector<unsigned>{2, 1});
  CHECK(t1.exponents(3) == std::vector<unsigned>{0, 3});
  CHECK(t1.weight(1) == 3);

  const auto& t2 = MonomialTable::get(2, 2);
  REQUIRE(t2.size() == 6);
  CHECK(t2.exponents(0) == std::vector<unsigned>{2, 0, 0});
  CHECK(t2.exponents(1) == std::vector<unsigned>{1, 1, 0});
  CHECK(t2.exponents(3) == std::vector<unsigned>{0, 2, 0});
  CHECK(t2.index({0, 1, 1}) == 4);
}

TEST_CASE("projective point normalization and conjugation") {
  auto p = pt({G(2), G(4), G(-6)});
  CHECK(p.coords()[0] == G(1));
  CHECK(p.coords()[1] == G(2));
  CHECK(p.coords()[2] == G(-3));
  CHECK(p.is_real());

  auto q = pt({G(0, 2), G(2, 0)});  // (2i : 2) -> (1 : -i)
  CHECK(q.coords()[0] == G(1));
  CHECK(q.coords()[1] == GaussianRational(Q(0), Q(-1)));
  CHECK(!q.is_real());
  CHECK(q.conjugate() != q);
  CHECK(q.conjugate().conjugate() == q);

  CHECK_THROWS_AS(pt({G(0), G(0)}), std::invalid_argument);
}

TEST_CASE("veronese embedding: weighted monomials of the point") {
  // m=1, (1:1), d=2 -> (1, 2, 1)
  auto v = veronese_embed(pt({G(1), G(1)}), 2);
  CHECK(v == std::vector<GaussianRational>{G(1), G(2), G(1)});

  // (1:0) -> (1, 0, ..., 0)
  auto w = veronese_embed(pt({G(1), G(0)}), 5);
  CHECK(w[0] == G(1));
  for (std::size_t i = 1; i < w.size(); ++i) CHECK(w[i].is_zero());

  // m=2, (1:i:0), d=2: entry -1 at the x1^2 slot, 2i at the x0 x1 slot
  auto u = veronese_embed(pt({G(1), G(0, 1), G(0)}), 2);
  const auto& t2 = MonomialTable::get(2, 2);
  CHECK(u[t2.index({0, 2, 0})] == G(-1));
  CHECK(u[t2.index({1, 1, 0})] == G(0, 2));
  CHECK(u[t2.index({2, 0, 0})] == G(1));
}

TEST_CASE("conjugation equivariance of the embedding") {
  Rng rng(321);
  for (int t = 0; t < 100; ++t) {
    int m = 1 + rng.uniform(0, 3);
    int d = 2 + rng.uniform(0, 4);
    auto p = random_point(m, rng, false);
    auto a = veronese_embed(p.conjugate(), d);
    auto b = veronese_embed(p, d);
    for (auto& x : b) x = x.conjugate();
    CHECK(a == b);
  }
}

TEST_CASE("real span basis: independence and the conjugate-pair span") {
  PointConfiguration two_reals;
  two_reals.m = 1;
  two_reals.reals = {pt({G(1), G(0)}), pt({G(1), G(1)})};
  auto basis = real_span_basis(two_reals, 3);
  CHECK(basis.size() == 2);
  CHECK(wrl::exactmath::row_rank(basis) == 2);

  // m=1, Q=(1:i), d=3: span = all c(z-i)^3 + conj; contains 2z^3 - 6z
  PointConfiguration pair;
  pair.m = 1;
  pair.pairs = {pt({G(1), G(0, 1)})};
  auto pb = real_span_basis(pair, 3);
  REQUIRE(pb.size() == 2);
  // weighted coordinates of 2z^3 - 6z are (2, 0, -2, 0)
  std::vector<Rational> target{Q(2), Q(0), Q(-2), Q(0)};
  auto solve = wrl::exactmath::span_solve(pb, target);
  CHECK(solve.coeffs.has_value());

  // d >= b - 1 is required
  PointConfiguration big;
  big.m = 1;
  big.reals = {pt({G(1), G(0)}), pt({G(1), G(1)}), pt({G(1), G(2)}), pt({G(1), G(3)})};
  CHECK_THROWS_AS(real_span_basis(big, 2), std::invalid_argument);
}

TEST_CASE("degenerate configurations are rejected") {
  PointConfiguration dup;
  dup.m = 2;
  dup.reals = {pt({G(1), G(0), G(0)}), pt({G(1), G(0), G(0)})};
  CHECK_THROWS_AS(dup.validate(), std::invalid_argument);

  PointConfiguration fake_pair;
  fake_pair.m = 1;
  fake_pair.pairs = {pt({G(1), G(2)})};  // real point listed as a pair
  CHECK_THROWS_AS(fake_pair.validate(), std::invalid_argument);
}

TEST_CASE("sample_configuration shapes") {
  auto c1 = sample_configuration(1, 2, 0, 42, 10);
  CHECK(c1.e() == 2);
  CHECK(c1.a() == 0);
  c1.validate();

  auto c2 = sample_configuration(2, 2, 1, 43, 10);
  CHECK(c2.b() == 4);
  c2.validate();

  ConfigRequirements req;
  req.no_three_collinear = true;
  req.independent_conditions = true;
  auto c3 = sample_configuration(5, 0, 3, 44, 10, req);
  CHECK(c3.a() == 3);
  // Lemma-style span condition: the six pair points span a P^5
  std::vector<std::vector<GaussianRational>> rows;
  for (const auto& q : c3.pairs) {
    rows.push_back(q.coords());
    rows.push_back(q.conjugate().coords());
  }
  CHECK(wrl::exactmath::row_rank(rows) == 6);

  // determinism
  auto c2b = sample_configuration(2, 2, 1, 43, 10);
  CHECK(c2b.all_points().size() == c2.all_points().size());
  for (std::size_t i = 0; i < c2.all_points().size(); ++i)
    CHECK(c2.all_points()[i] == c2b.all_points()[i]);
}

TEST_CASE("sample_in_span: genericity forced by construction") {
  Rng seeds(777);
  for (int trial = 0; trial < 6; ++trial) {
    int e = trial % 3;
    int a = 1 + trial % 2;
    int b = e + 2 * a;
    auto A = sample_configuration(2, e, a, seeds.next(), 10);
    int d = 2 * b - 1;
    SampleInfo info;
    auto f = sample_in_span(A, d, seeds.next(), 100, &info);
    CHECK(f.m() == 2);
    CHECK(f.d() == d);

    // in the full span
    auto basis = real_span_basis(A, d);
    CHECK(wrl::exactmath::span_solve(basis, f.weighted()).coeffs.has_value());

    // outside every maximal sub-span over C
    auto all = A.all_points();
    std::vector<std::vector<GaussianRational>> embeds;
    for (const auto& p : all) embeds.push_back(veronese_embed_weighted(p, d));
    std::vector<GaussianRational> fg(f.weighted().size());
    for (std::size_t i = 0; i < fg.size(); ++i) fg[i] = GaussianRational(f.weighted()[i]);
    for (std::size_t drop = 0; drop < embeds.size(); ++drop) {
      wrl::exactmath::EchelonBasis<GaussianRational> eb(fg.size());
      for (std::size_t i = 0; i < embeds.size(); ++i)
        if (i != drop) eb.add_row(embeds[i]);
      CHECK(!eb.in_span(fg));
    }
  }
}

TEST_CASE("multivariate catalecticant: powers, tangent vectors") {
  // l^d has rank 1 for all k
  auto p = pt({G(1), G(2), G(-1)});
  auto vec = veronese_embed_weighted_real(p, 4);
  SymmetricForm f(2, 4, vec);
  for (int k = 1; k <= 2; ++k) CHECK(catalecticant_multi(f, k).rank() == 1);
  CHECK(border_rank_lower(f, 4) == 1);

  // x0^(d-1) x1: rank 2 at k = 1
  const auto& t = MonomialTable::get(2, 5);
  std::vector<Rational> plain(t.size(), Q(0));
  plain[t.index({4, 1, 0})] = Q(1);
  auto g = SymmetricForm::from_plain(2, 5, plain);
  CHECK(catalecticant_multi(g, 1).rank() == 2);
  CHECK(border_rank_lower(g, 5) == 2);
}

TEST_CASE("line transport: push and line_coordinates invert each other") {
  Rng rng(55);
  RealLine line{{Q(1), Q(1), Q(0)}, {Q(0), Q(1), Q(2)}};
  for (int t = 0; t < 10; ++t) {
    int d = 3 + rng.uniform(0, 3);
    std::vector<Rational> w(d + 1);
    bool nz = false;
    for (auto& x : w) {
      x = Q(rng.uniform(-9, 9));
      nz = nz || !x.is_zero();
    }
    if (!nz) w[0] = Q(1);
    wrl::binaryforms::BinaryForm g(d, w);
    auto ambient = push_to_ambient(line, g, 2);
    auto back = line_coordinates(ambient, line);
    CHECK(back == g);
  }
}

TEST_CASE("classify_sigma2: the three classes") {
  const int d = 5;
  // x0^d + x1^d in three variables: real pair
  {
    auto v0 = veronese_embed_weighted_real(pt({G(1), G(0), G(0)}), d);
    auto v1 = veronese_embed_weighted_real(pt({G(0), G(1), G(0)}), d);
    std::vector<Rational> sum(v0.size());
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = v0[i] + v1[i];
    auto cls = classify_sigma2(SymmetricForm(2, d, sum));
    CHECK(cls.cls == Sigma2Class::real_pair);
    CHECK(cls.quadric_disc.sign() > 0);
  }
  // (x0 + i x1)^d + (x0 - i x1)^d: conjugate pair
  {
    auto q = pt({G(1), G(0, 1), G(0)});
    auto v = veronese_embed_weighted(q, d);
    std::vector<Rational> sum(v.size());
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = v[i].re() + v[i].re();
    auto cls = classify_sigma2(SymmetricForm(2, d, sum));
    CHECK(cls.cls == Sigma2Class::conj_pair);
    CHECK(cls.quadric_disc.sign() < 0);
  }
  // x0^(d-1) x1: tangential
  {
    const auto& t = MonomialTable::get(2, d);
    std::vector<Rational> plain(t.size(), Q(0));
    plain[t.index({static_cast<unsigned>(d - 1), 1, 0})] = Q(1);
    auto cls = classify_sigma2(SymmetricForm::from_plain(2, d, plain));
    CHECK(cls.cls == Sigma2Class::tangential);
    CHECK(cls.quadric_disc.is_zero());
  }
  // scale invariance and rejection of wrong border ranks
  {
    auto v0 = veronese_embed_weighted_real(pt({G(1), G(0), G(0)}), d);
    SymmetricForm pow(2, d, v0);
    CHECK_THROWS_AS(classify_sigma2(pow), std::invalid_argument);
  }
}

TEST_CASE("classify_sigma2 is scale and conjugation invariant") {
  Rng rng(66);
  for (int t = 0; t < 8; ++t) {
    auto A = sample_configuration(2, 0, 1, rng.next(), 10);
    auto f = sample_in_span(A, 7, rng.next(), 50);
    auto c1 = classify_sigma2(f);
    auto c2 = classify_sigma2(Q(rng.uniform_nonzero(20), 1 + rng.uniform(0, 6)) * f);
    CHECK(c1.cls == c2.cls);
    CHECK(c1.cls == Sigma2Class::conj_pair);
  }
}
