#ifndef WRL_BINARYFORMS_WITNESS_HPP
#define WRL_BINARYFORMS_WITNESS_HPP

#include <vector>

#include "wrl/binaryforms/binary_form.hpp"

namespace wrl::binaryforms {

// Extra slot of the witness construction: a conjugate pair
// c (z - alpha)^d + conj(c) (z - conj(alpha))^d when alpha is non-real,
// or a single real term coeff (z - alpha)^d when alpha is real (the
// coefficient must then be real too).
struct PerturbationTerm {
  GaussianRational alpha;
  GaussianRational coeff;
};

struct WitnessResult {
  BinaryForm form;
  int distinct_real_roots = 0;  // projective count, certified by Sturm
  int halvings = 0;             // how often the perturbation was halved
  Rational scale_applied;       // final factor on the perturbation coefficients
};

/*
 * The real form c (z - i)^d + conj(c) (z + i)^d plus perturbation slots,
 * with all perturbation coefficients halved until Sturm certifies d
 * distinct real projective roots.  Such forms have real rank exactly d.
 */
WitnessResult witness_rank_d(int d, const GaussianRational& c,
                             std::vector<PerturbationTerm> perturbation = {},
                             int max_halvings = 64);

// Same construction with the base pair at an arbitrary non-real alpha;
// a real affine change of coordinates carries (z - i) to (z - alpha), so
// the distinct-real-roots guarantee transports.
WitnessResult witness_rank_d_at(int d, const GaussianRational& c,
                                const GaussianRational& alpha_base,
                                std::vector<PerturbationTerm> perturbation = {},
                                int max_halvings = 64);

}  // namespace wrl::binaryforms

#endif  // WRL_BINARYFORMS_WITNESS_HPP
