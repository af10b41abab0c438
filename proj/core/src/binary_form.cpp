#include "wrl/binaryforms/binary_form.hpp"

namespace wrl::binaryforms {

BinaryForm real_form(const GaussianBinaryForm& f) {
  std::vector<Rational> a(f.weighted().size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!f.weighted()[i].is_real())
      throw std::invalid_argument("real_form: nonzero imaginary part");
    a[i] = f.weighted()[i].re();
  }
  return BinaryForm(f.degree(), std::move(a));
}

int distinct_projective_real_roots(const UniPoly<Rational>& univ, int form_degree) {
  if (univ.is_zero_poly())
    throw std::invalid_argument("distinct_projective_real_roots: zero form");
  if (univ.degree() > form_degree)
    throw std::invalid_argument("distinct_projective_real_roots: degree exceeds form degree");
  int count = univ.is_constant() ? 0 : exactmath::sturm_distinct_real_roots(univ);
  if (univ.degree() < form_degree) ++count;  // the point at infinity
  return count;
}

bool totally_real_distinct(const UniPoly<Rational>& univ, int form_degree) {
  if (!is_squarefree_form(univ, form_degree)) return false;
  return distinct_projective_real_roots(univ, form_degree) == form_degree;
}

}  // namespace wrl::binaryforms
