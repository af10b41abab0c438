#ifndef WRL_VERONESE_MONOMIAL_TABLE_HPP
#define WRL_VERONESE_MONOMIAL_TABLE_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "wrl/exactmath/rational.hpp"

namespace wrl::veronese {

using exactmath::Rational;

/*
 * Exponent vectors of the degree-d monomials in m+1 variables, in
 * descending lexicographic order (x0^d first).  The order is the global
 * serialization and matrix-layout convention.  Tables are cached per
 * (m, d) and immutable once built.
 */
class MonomialTable {
 public:
  static const MonomialTable& get(int m, int d);

  int m() const { return m_; }
  int d() const { return d_; }
  std::size_t size() const { return exps_.size(); }
  const std::vector<unsigned>& exponents(std::size_t idx) const { return exps_[idx]; }
  std::size_t index(const std::vector<unsigned>& expo) const;
  // multinomial(d; expo) of the monomial at idx
  const mpz_class& weight(std::size_t idx) const { return weights_[idx]; }

 private:
  MonomialTable(int m, int d);
  static std::uint64_t pack(const std::vector<unsigned>& expo, int bits);

  int m_, d_, bits_;
  std::vector<std::vector<unsigned>> exps_;
  std::vector<mpz_class> weights_;
  std::unordered_map<std::uint64_t, std::uint32_t> lookup_;
};

}  // namespace wrl::veronese

#endif  // WRL_VERONESE_MONOMIAL_TABLE_HPP
