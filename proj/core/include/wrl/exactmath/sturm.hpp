#ifndef WRL_EXACTMATH_STURM_HPP
#define WRL_EXACTMATH_STURM_HPP

#include <optional>
#include <utility>
#include <vector>

#include "wrl/exactmath/rational.hpp"
#include "wrl/exactmath/unipoly.hpp"

namespace wrl::exactmath {

/*
 * Sturm chain of the squarefree part of a rational polynomial.  Counts
 * distinct real roots over the whole line or over half-open intervals
 * (lo, hi].  Chain members are scaled by positive rationals to keep
 * coefficient growth down; positive scaling preserves all sign data.
 */
class SturmChain {
 public:
  explicit SturmChain(const UniPoly<Rational>& p);

  int count_all() const;                                    // roots in (-inf, +inf)
  int count_in(const Rational& lo, const Rational& hi) const;  // roots in (lo, hi]
  int variations_at(const Rational& x) const;
  int variations_at_neg_inf() const;
  int variations_at_pos_inf() const;

  const UniPoly<Rational>& squarefree() const { return sqfree_; }

 private:
  UniPoly<Rational> sqfree_;
  std::vector<UniPoly<Rational>> chain_;
};

// Number of distinct real roots of a nonzero rational polynomial.
int sturm_distinct_real_roots(const UniPoly<Rational>& p);

// Disjoint open intervals with rational endpoints, one per distinct real
// root, each containing exactly one root of p.  Endpoints are never roots.
std::vector<std::pair<Rational, Rational>> isolate_real_roots(const UniPoly<Rational>& p);

// The rational root inside an isolating interval of the primitive integer
// form of p, if the isolated root is rational; std::nullopt otherwise.
// Termination bound: a rational root written in lowest terms has
// denominator dividing the leading coefficient of the primitive form.
std::optional<Rational> rational_root_in(const UniPoly<Rational>& p, const Rational& lo,
                                         const Rational& hi);

}  // namespace wrl::exactmath

#endif  // WRL_EXACTMATH_STURM_HPP
