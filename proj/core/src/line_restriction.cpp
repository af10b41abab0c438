#include "wrl/rankcert/certify.hpp"

namespace wrl::rankcert {

RealLine line_parametrize(const ProjectivePoint& q) {
  if (q.is_real())
    throw std::invalid_argument("line_parametrize: point is real, no conjugate pair");
  const auto& c = q.coords();
  RealLine line;
  line.v0.resize(c.size());
  line.v1.resize(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) {
    line.v0[j] = c[j].re();
    line.v1[j] = c[j].im();
  }
  // Re Q and Im Q are independent: Q is normalized with a leading 1, so a
  // dependence would make Q projectively real.
  return line;
}

std::size_t LineDecomposition::total_terms() const {
  std::size_t n = reals.size();
  for (const auto& p : pieces) n += p.o_decomposition.size();
  return n;
}

}  // namespace wrl::rankcert
