#include "wrl/binaryforms/witness.hpp"

namespace wrl::binaryforms {

namespace {

using GPoly = UniPoly<GaussianRational>;

// c (z - alpha)^d + conj(c) (z - conj(alpha))^d, a real polynomial
GPoly conjugate_pair_term(int d, const GaussianRational& c, const GaussianRational& alpha) {
  GPoly base = GPoly::linear_root(alpha).pow(d);
  GPoly conj_base = GPoly::linear_root(alpha.conjugate()).pow(d);
  return c * base + c.conjugate() * conj_base;
}

}  // namespace

WitnessResult witness_rank_d(int d, const GaussianRational& c,
                             std::vector<PerturbationTerm> perturbation, int max_halvings) {
  return witness_rank_d_at(d, c, GaussianRational::i(), std::move(perturbation), max_halvings);
}

WitnessResult witness_rank_d_at(int d, const GaussianRational& c,
                                const GaussianRational& alpha_base,
                                std::vector<PerturbationTerm> perturbation, int max_halvings) {
  if (d < 2) throw std::invalid_argument("witness_rank_d: degree must be >= 2");
  if (c.is_zero()) throw std::invalid_argument("witness_rank_d: c must be nonzero");
  if (alpha_base.is_real())
    throw std::invalid_argument("witness_rank_d: base point must be non-real");
  for (const auto& t : perturbation) {
    if (t.alpha.is_real() && !t.coeff.is_real())
      throw std::invalid_argument("witness_rank_d: real slot needs a real coefficient");
    if (t.alpha == alpha_base || t.alpha == alpha_base.conjugate())
      throw std::invalid_argument("witness_rank_d: perturbation slot collides with the base pair");
  }

  GPoly base = conjugate_pair_term(d, c, alpha_base);

  Rational scale(1);
  const Rational half(1, 2);
  for (int halvings = 0; halvings <= max_halvings; ++halvings) {
    GPoly total = base;
    for (const auto& t : perturbation) {
      GaussianRational coeff = t.coeff * GaussianRational(scale);
      if (t.alpha.is_real())
        total = total + coeff * GPoly::linear_root(t.alpha).pow(d);
      else
        total = total + conjugate_pair_term(d, coeff, t.alpha);
    }
    auto re = real_part(total);
    if (!imag_part(total).is_zero_poly())
      throw std::logic_error("witness_rank_d: imaginary residue in a real construction");
    if (re.is_zero_poly()) {
      scale *= half;  // perturbation cancelled the base form exactly
      continue;
    }
    BinaryForm form = BinaryForm::from_univariate(re, d);
    int roots = distinct_projective_real_roots(re, d);
    if (roots == d && is_squarefree_form(re, d)) {
      return WitnessResult{std::move(form), roots, halvings, scale};
    }
    scale *= half;
  }
  throw std::runtime_error(
      "witness_rank_d: perturbation too large to certify d distinct real roots after " +
      std::to_string(max_halvings) + " halvings");
}

}  // namespace wrl::binaryforms
