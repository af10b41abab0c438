#ifndef WRL_BINARYFORMS_DECOMPOSE_HPP
#define WRL_BINARYFORMS_DECOMPOSE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "wrl/binaryforms/binary_form.hpp"

namespace wrl::binaryforms {

// One term c * (u x0 + v x1)^d.  Linear forms are normalized so the last
// nonzero slot is 1: finite root s -> (s, 1), the point at infinity -> (1, 0).
struct DecompositionTerm {
  Rational coeff;
  Rational u, v;
};

// Fallback when witness roots are irrational: the witness plus disjoint
// isolating intervals.  The decomposition is pinned symbolically by
// apolarity; see verify_decomposition.
struct SymbolicDecomposition {
  ApolarForm<Rational> witness;
  std::vector<std::pair<Rational, Rational>> isolating_intervals;
  bool infinity_root = false;
};

struct Decomposition {
  std::vector<DecompositionTerm> terms;
  std::optional<SymbolicDecomposition> symbolic;
  bool exact() const { return !symbolic.has_value(); }
  std::size_t size() const {
    if (exact()) return terms.size();
    return symbolic->isolating_intervals.size() + (symbolic->infinity_root ? 1 : 0);
  }
};

// sum of c_i (u_i x0 + v_i x1)^d
BinaryForm expand_terms(const std::vector<DecompositionTerm>& terms, int d);

/*
 * Decomposition of f along the projective roots of a squarefree apolar
 * witness of degree equal to the claimed rank.  Rational roots (including
 * the point at infinity) give exact terms with coefficients solved from
 * the linear system; irrational roots produce a symbolic decomposition
 * with isolating intervals.
 */
Decomposition decompose_binary(const BinaryForm& f, const ApolarForm<Rational>& witness);

// Fast path when the witness roots are already known to the caller.
// std::nullopt marks the root at infinity.
Decomposition decompose_with_roots(const BinaryForm& f,
                                   const std::vector<std::optional<Rational>>& roots);

// Exact expansion equality for exact decompositions; for symbolic ones,
// true only when the witness constraints force the residual to zero
// (apolarity holds exactly, the witness is squarefree of the right degree,
// and all of its roots are real).
bool verify_decomposition(const BinaryForm& f, const Decomposition& dec);

}  // namespace wrl::binaryforms

#endif  // WRL_BINARYFORMS_DECOMPOSE_HPP
