#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wrl/exactmath/rng.hpp"
#include "wrl/rankcert/certify.hpp"

using namespace wrl::rankcert;
using wrl::exactmath::Rng;
using wrl::veronese::MonomialTable;
using wrl::veronese::Sigma2Class;

namespace {

Rational Q(long n, long d = 1) { return Rational(n, d); }
GaussianRational G(long re, long im = 0) { return GaussianRational(Q(re), Q(im)); }

ProjectivePoint pt(std::initializer_list<GaussianRational> coords) {
  return ProjectivePoint(std::vector<GaussianRational>(coords));
}

}  // namespace

TEST_CASE("line_parametrize: coordinate lines and mixed points") {
  auto l1 = line_parametrize(pt({G(1), G(0, 1)}));  // m = 1: identity
  CHECK(l1.v0 == std::vector<Rational>{Q(1), Q(0)});
  CHECK(l1.v1 == std::vector<Rational>{Q(0), Q(1)});

  auto l2 = line_parametrize(pt({G(1), G(0, 1), G(0)}));  // (1:i:0) -> {x2 = 0}
  CHECK(l2.v0 == std::vector<Rational>{Q(1), Q(0), Q(0)});
  CHECK(l2.v1 == std::vector<Rational>{Q(0), Q(1), Q(0)});

  auto l3 = line_parametrize(pt({G(1), GaussianRational(Q(1), Q(1)), G(0, 2)}));
  CHECK(l3.v0 == std::vector<Rational>{Q(1), Q(1), Q(0)});
  CHECK(l3.v1 == std::vector<Rational>{Q(0), Q(1), Q(2)});

  CHECK_THROWS_AS(line_parametrize(pt({G(1), G(2)})), std::invalid_argument);
}

TEST_CASE("split_along_pairs: a=1, e=0, m=1 gives O_1 = f itself") {
  PointConfiguration A;
  A.m = 1;
  A.pairs = {pt({G(1), G(0, 1)})};  // (1 : i), identity line
  const int d = 5;
  wrl::veronese::SampleInfo info;
  auto f = wrl::veronese::sample_in_span(A, d, 99, 50, &info);
  auto split = split_along_pairs(f, A, d);
  REQUIRE(split.decomposition.pieces.size() == 1);
  CHECK(split.decomposition.reals.empty());
  CHECK(split.decomposition.pieces[0].o_binary == f.to_binary());
  CHECK(verify_reconstruction(f, split.decomposition));
}

TEST_CASE("split_along_pairs: w8 shape round-trips known coefficients") {
  // A = {Q, sigma Q} + two real points in P^2, d = 7
  PointConfiguration A;
  A.m = 2;
  A.pairs = {pt({G(1), G(1, 1), G(0, 2)})};
  A.reals = {pt({G(1), G(2), G(0)}), pt({G(0), G(1), G(3)})};
  const int d = 7;

  auto basis = wrl::veronese::real_span_basis(A, d);
  REQUIRE(basis.size() == 4);
  // f = 3 Re nu(Q) - 2 Im nu(Q) + 5 nu(P1) + 7 nu(P2); basis order: reals first
  std::vector<Rational> vec(basis[0].size(), Q(0));
  std::vector<long> coef{5, 7, 3, -2};
  for (int i = 0; i < 4; ++i)
    for (std::size_t t = 0; t < vec.size(); ++t) vec[t] += Q(coef[i]) * basis[i][t];
  SymmetricForm f(2, d, vec);

  auto split = split_along_pairs(f, A, d);
  CHECK(split.span_coefficients ==
        std::vector<Rational>{Q(5), Q(7), Q(3), Q(-2)});
  REQUIRE(split.decomposition.reals.size() == 2);
  CHECK(split.decomposition.reals[0].coeff == Q(5));
  CHECK(split.decomposition.reals[1].coeff == Q(7));
  REQUIRE(split.decomposition.pieces.size() == 1);
  // c = (x - i y)/2 with x = 3, y = -2
  CHECK(*split.decomposition.pieces[0].pair_coefficient ==
        GaussianRational(Q(3, 2), Q(1)));
  CHECK(verify_reconstruction(f, split.decomposition));
  // the solve residual is zero exactly: forced by verify_reconstruction
}

TEST_CASE("certified sigma2: census shapes on m=2, d=7") {
  Rng rng(2718);

  // conjugate pair: rank d certified through w2
  auto A = wrl::veronese::sample_configuration(2, 0, 1, rng.next(), 10);
  auto f = wrl::veronese::sample_in_span(A, 7, rng.next(), 50);
  auto cert = certified_rank_sigma2(f);
  CHECK(cert.exact());
  CHECK(cert.theorem == "w2");
  CHECK(cert.certified_value == 7);
  CHECK(cert.border_lower == 2);
  CHECK(cert.sigma2_class == Sigma2Class::conj_pair);
  CHECK(cert.reconstruction_verified);
  CHECK(cert.decomposition.total_terms() == 7);

  // real pair: rank 2
  auto A2 = wrl::veronese::sample_configuration(2, 2, 0, rng.next(), 10);
  auto f2 = wrl::veronese::sample_in_span(A2, 7, rng.next(), 50);
  auto cert2 = certified_rank_sigma2(f2);
  CHECK(cert2.exact());
  CHECK(cert2.certified_value == 2);
  CHECK(cert2.sigma2_class == Sigma2Class::real_pair);
  CHECK(cert2.decomposition.total_terms() == 2);

  // tangential: l_u^(d-1) l_v has rank d
  auto u = pt({G(1), G(1), G(-2)});
  auto v = pt({G(0), G(1), G(1)});
  std::vector<std::vector<Rational>> linears(6, u.real_coords());
  linears.push_back(v.real_coords());
  auto f3 = wrl::veronese::product_of_linear_forms(2, linears);
  auto cert3 = certified_rank_sigma2(f3);
  CHECK(cert3.exact());
  CHECK(cert3.certified_value == 7);
  CHECK(cert3.sigma2_class == Sigma2Class::tangential);
}

TEST_CASE("certified_rank_multi: w2 and w8 strata") {
  Rng rng(99);

  // (m=2, d=7, b=2, type (0,1)) -> certified 7
  {
    auto A = wrl::veronese::sample_configuration(2, 0, 1, rng.next(), 10);
    auto f = wrl::veronese::sample_in_span(A, 7, rng.next(), 50);
    auto cert = certified_rank_multi(f, A);
    CHECK(cert.exact());
    CHECK(cert.theorem == "w2");
    CHECK(*cert.certified_value == 7);
    CHECK(cert.upper == 7);
    CHECK(cert.border_lower == 2);
  }

  // (m=2, d=7, b=4, type (2,1)) -> certified d + b - 2 = 9 through w8
  {
    wrl::veronese::ConfigRequirements req;
    req.no_three_collinear = true;
    req.independent_conditions = true;
    auto A = wrl::veronese::sample_configuration(2, 2, 1, rng.next(), 10, req);
    auto f = wrl::veronese::sample_in_span(A, 7, rng.next(), 50);
    auto cert = certified_rank_multi(f, A);
    CHECK(cert.exact());
    CHECK(cert.theorem == "w8");
    CHECK(*cert.certified_value == 9);
    CHECK(cert.upper == 9);
    CHECK(cert.border_lower == 4);
    CHECK(cert.reconstruction_verified);
    CHECK(cert.decomposition.total_terms() == 9);
  }
}

TEST_CASE("certified_rank_multi: a w6 stratum at minimal parameters") {
  Rng rng(123);
  wrl::veronese::ConfigRequirements req;
  req.no_three_collinear = true;
  req.independent_conditions = true;
  // (m=5, d=12, b=6, type (0,3)) -> certified 3d = 36
  auto A = wrl::veronese::sample_configuration(5, 0, 3, rng.next(), 10, req);
  auto f = wrl::veronese::sample_in_span(A, 12, rng.next(), 50);
  auto cert = certified_rank_multi(f, A);
  CHECK(cert.exact());
  CHECK(cert.theorem == "w6");
  CHECK(*cert.certified_value == 36);
  CHECK(cert.border_lower == 6);
  CHECK(cert.decomposition.total_terms() == 36);
}

TEST_CASE("bounds-only outside the stated hypothesis ranges") {
  Rng rng(31);
  // b = 8 with a = 2 is covered by no statement here
  wrl::veronese::ConfigRequirements req;
  auto A = wrl::veronese::sample_configuration(3, 4, 2, rng.next(), 6, req);
  auto f = wrl::veronese::sample_in_span(A, 15, rng.next(), 30);
  auto cert = certified_rank_multi(f, A);
  CHECK(!cert.exact());
  CHECK(!cert.certified_value.has_value());
  CHECK(cert.border_lower <= cert.upper);
  CHECK(cert.reconstruction_verified);
}

TEST_CASE("verify_reconstruction rejects perturbed decompositions") {
  Rng rng(7);
  auto A = wrl::veronese::sample_configuration(2, 1, 1, rng.next(), 10);
  auto f = wrl::veronese::sample_in_span(A, 7, rng.next(), 50);
  auto split = split_along_pairs(f, A, 7);
  REQUIRE(verify_reconstruction(f, split.decomposition));

  auto broken = split.decomposition;
  broken.reals[0].coeff += Q(1);
  CHECK(!verify_reconstruction(f, broken));

  auto broken2 = split.decomposition;
  broken2.pieces[0].ambient_terms[0].coeff += Q(1, 3);
  CHECK(!verify_reconstruction(f, broken2));
}

TEST_CASE("certificates are scale invariant") {
  Rng rng(4242);
  auto A = wrl::veronese::sample_configuration(2, 2, 1, rng.next(), 10);
  auto f = wrl::veronese::sample_in_span(A, 7, rng.next(), 50);
  auto c1 = certified_rank_multi(f, A);
  auto c2 = certified_rank_multi(Q(-7, 3) * f, A);
  CHECK(c1.upper == c2.upper);
  CHECK(c1.border_lower == c2.border_lower);
  CHECK(c1.certified_value == c2.certified_value);
}
