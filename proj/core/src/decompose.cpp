#include "wrl/binaryforms/decompose.hpp"

#include "wrl/exactmath/sturm.hpp"

namespace wrl::binaryforms {

BinaryForm expand_terms(const std::vector<DecompositionTerm>& terms, int d) {
  std::vector<Rational> a(d + 1, Rational(0));
  for (const auto& t : terms) {
    // weighted coefficient of c (u x0 + v x1)^d at slot i is c u^(d-i) v^i
    std::vector<Rational> pu(d + 1), pv(d + 1);
    pu[0] = Rational(1);
    pv[0] = Rational(1);
    for (int i = 1; i <= d; ++i) {
      pu[i] = pu[i - 1] * t.u;
      pv[i] = pv[i - 1] * t.v;
    }
    for (int i = 0; i <= d; ++i) a[i] += t.coeff * pu[d - i] * pv[i];
  }
  return BinaryForm(d, std::move(a));
}

Decomposition decompose_with_roots(const BinaryForm& f,
                                   const std::vector<std::optional<Rational>>& roots) {
  const int d = f.degree();
  std::vector<std::pair<Rational, Rational>> points;
  points.reserve(roots.size());
  bool seen_infinity = false;
  for (const auto& r : roots) {
    if (r) {
      points.emplace_back(*r, Rational(1));
    } else {
      if (seen_infinity) throw std::invalid_argument("decompose: repeated root at infinity");
      seen_infinity = true;
      points.emplace_back(Rational(1), Rational(0));
    }
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j]) throw std::invalid_argument("decompose: repeated root");

  std::vector<std::vector<Rational>> cols(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    std::vector<Rational> pu(d + 1), pv(d + 1);
    pu[0] = Rational(1);
    pv[0] = Rational(1);
    for (int i = 1; i <= d; ++i) {
      pu[i] = pu[i - 1] * points[k].first;
      pv[i] = pv[i - 1] * points[k].second;
    }
    auto& col = cols[k];
    col.resize(d + 1);
    for (int i = 0; i <= d; ++i) col[i] = pu[d - i] * pv[i];
  }
  auto solve = exactmath::span_solve(cols, f.weighted());
  if (!solve.coeffs)
    throw std::logic_error("decompose: form not in the span of the witness root powers");

  Decomposition dec;
  for (std::size_t k = 0; k < points.size(); ++k) {
    if ((*solve.coeffs)[k].is_zero()) continue;
    dec.terms.push_back({(*solve.coeffs)[k], points[k].first, points[k].second});
  }
  if (!(expand_terms(dec.terms, d) == f))
    throw std::logic_error("decompose: reconstruction mismatch");
  return dec;
}

Decomposition decompose_binary(const BinaryForm& f, const ApolarForm<Rational>& witness) {
  const int r = witness.form_degree;
  if (witness.univ.is_zero_poly())
    throw std::invalid_argument("decompose_binary: zero witness");
  if (!is_squarefree_form(witness.univ, r))
    throw std::invalid_argument("decompose_binary: witness not squarefree");
  if (r > f.degree())
    throw std::invalid_argument("decompose_binary: witness degree exceeds form degree");
  if (!is_apolar(f, witness))
    throw std::invalid_argument("decompose_binary: witness not apolar to the form");

  const auto& univ = witness.univ;
  const bool infinity_root = witness.infinity_multiplicity() == 1;
  if (univ.is_constant()) {
    // only the point at infinity: r == 1, f = c x0^d
    return decompose_with_roots(f, {std::nullopt});
  }
  auto intervals = exactmath::isolate_real_roots(univ);
  const int real_count = static_cast<int>(intervals.size());
  if (real_count < univ.degree())
    throw std::invalid_argument("decompose_binary: witness has non-real roots");

  std::vector<std::optional<Rational>> roots;
  bool all_rational = true;
  for (const auto& [lo, hi] : intervals) {
    auto root = exactmath::rational_root_in(univ, lo, hi);
    if (!root) {
      all_rational = false;
      break;
    }
    roots.emplace_back(*root);
  }
  if (all_rational) {
    if (infinity_root) roots.emplace_back(std::nullopt);
    return decompose_with_roots(f, roots);
  }
  Decomposition dec;
  dec.symbolic = SymbolicDecomposition{witness, std::move(intervals), infinity_root};
  return dec;
}

bool verify_decomposition(const BinaryForm& f, const Decomposition& dec) {
  if (dec.exact()) {
    for (std::size_t i = 0; i < dec.terms.size(); ++i) {
      if (dec.terms[i].coeff.is_zero()) return false;
      for (std::size_t j = i + 1; j < dec.terms.size(); ++j) {
        // proportional linear forms: u_i v_j == u_j v_i
        if (dec.terms[i].u * dec.terms[j].v == dec.terms[j].u * dec.terms[i].v) return false;
      }
    }
    return expand_terms(dec.terms, f.degree()) == f;
  }
  // Symbolic: the witness constraints force the residual to zero exactly
  // when the witness is apolar, squarefree as a form, and all of its roots
  // are real and isolated by the stated intervals.
  const auto& sym = *dec.symbolic;
  const int r = sym.witness.form_degree;
  if (!is_apolar(f, sym.witness)) return false;
  if (!is_squarefree_form(sym.witness.univ, r)) return false;
  if (sym.witness.infinity_multiplicity() != (sym.infinity_root ? 1 : 0)) return false;
  const auto& univ = sym.witness.univ;
  if (static_cast<int>(sym.isolating_intervals.size()) != univ.degree()) return false;
  exactmath::SturmChain chain(univ);
  if (chain.count_all() != univ.degree()) return false;
  for (const auto& [lo, hi] : sym.isolating_intervals) {
    if (!(lo < hi)) return false;
    if (chain.count_in(lo, hi) != 1) return false;
  }
  for (std::size_t i = 0; i < sym.isolating_intervals.size(); ++i)
    for (std::size_t j = i + 1; j < sym.isolating_intervals.size(); ++j) {
      const auto& a = sym.isolating_intervals[i];
      const auto& b = sym.isolating_intervals[j];
      if (!(a.second <= b.first || b.second <= a.first)) return false;
    }
  return true;
}

}  // namespace wrl::binaryforms
