#ifndef WRL_EXACTMATH_UNIPOLY_HPP
#define WRL_EXACTMATH_UNIPOLY_HPP

#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wrl/exactmath/rational.hpp"

namespace wrl::exactmath {

/*
 * Dense univariate polynomial over an exact field (Rational or
 * GaussianRational).  Coefficients are stored low-to-high; the leading
 * coefficient is nonzero unless the polynomial is zero.  degree() of the
 * zero polynomial is -1.
 */
template <class K>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
  UniPoly(std::initializer_list<K> coeffs) : c_(coeffs) { trim(); }

  static UniPoly zero() { return UniPoly(); }
  static UniPoly constant(K v) { return UniPoly(std::vector<K>{std::move(v)}); }
  // z - root
  static UniPoly linear_root(const K& root) { return UniPoly({-root, K(1)}); }
  static UniPoly from_roots(const std::vector<K>& roots) {
    UniPoly p = constant(K(1));
    for (const auto& r : roots) p = p * linear_root(r);
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero_poly() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<K>& coeffs() const { return c_; }
  const K& operator[](std::size_t i) const { return c_[i]; }
  K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
  const K& leading() const {
    if (c_.empty()) throw std::domain_error("UniPoly: leading() of zero polynomial");
    return c_.back();
  }

  UniPoly operator-() const {
    std::vector<K> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return UniPoly(std::move(r));
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<K> r(std::max(a.c_.size(), b.c_.size()), K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero_poly() || b.is_zero_poly()) return UniPoly();
    std::vector<K> r(a.c_.size() + b.c_.size() - 1, K(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(r));
  }
  friend UniPoly operator*(const K& s, const UniPoly& p) {
    if (is_zero(s)) return UniPoly();
    std::vector<K> r(p.c_);
    for (auto& x : r) x = s * x;
    return UniPoly(std::move(r));
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  K eval(const K& x) const {  // Horner
    K acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<K> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = K(long(i)) * c_[i];
    return UniPoly(std::move(r));
  }

  UniPoly monic() const {
    if (is_zero_poly()) throw std::domain_error("UniPoly: monic() of zero polynomial");
    K inv = K(1) / leading();
    return inv * *this;
  }

  UniPoly pow(unsigned e) const {
    UniPoly r = constant(K(1));
    for (unsigned k = 0; k < e; ++k) r = r * *this;
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

// Euclidean division over a field: a = q*b + r with deg r < deg b.
template <class K>
std::pair<UniPoly<K>, UniPoly<K>> divmod(const UniPoly<K>& a, const UniPoly<K>& b) {
  if (b.is_zero_poly()) throw std::domain_error("UniPoly: division by zero polynomial");
  std::vector<K> rem(a.coeffs());
  int db = b.degree();
  int dq = a.degree() - db;
  if (dq < 0) return {UniPoly<K>(), a};
  std::vector<K> quot(dq + 1, K(0));
  K lb_inv = K(1) / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    K c = rem[i] * lb_inv;
    if (is_zero(c)) continue;
    quot[i - db] = c;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= c * b[j];
  }
  return {UniPoly<K>(std::move(quot)), UniPoly<K>(std::move(rem))};
}

template <class K>
UniPoly<K> operator%(const UniPoly<K>& a, const UniPoly<K>& b) {
  return divmod(a, b).second;
}
template <class K>
UniPoly<K> operator/(const UniPoly<K>& a, const UniPoly<K>& b) {
  return divmod(a, b).first;
}

// Monic gcd via the Euclidean algorithm; both-zero input is rejected.
template <class K>
UniPoly<K> poly_gcd(UniPoly<K> a, UniPoly<K> b) {
  if (a.is_zero_poly() && b.is_zero_poly())
    throw std::invalid_argument("poly_gcd: gcd(0, 0) undefined");
  while (!b.is_zero_poly()) {
    UniPoly<K> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class K>
bool is_squarefree(const UniPoly<K>& p) {
  if (p.is_zero_poly()) throw std::invalid_argument("is_squarefree: zero polynomial");
  if (p.is_constant()) return true;
  return poly_gcd(p, p.derivative()).degree() == 0;
}

template <class K>
UniPoly<K> squarefree_part(const UniPoly<K>& p) {
  if (p.is_zero_poly()) throw std::invalid_argument("squarefree_part: zero polynomial");
  if (p.is_constant()) return p.monic();
  return (p / poly_gcd(p, p.derivative())).monic();
}

// Complex conjugation applied coefficientwise.
template <class K>
UniPoly<K> conj(const UniPoly<K>& p) {
  std::vector<K> r(p.coeffs());
  for (auto& x : r) x = conj(x);
  return UniPoly<K>(std::move(r));
}

// Real and imaginary parts of a Gaussian polynomial.
UniPoly<Rational> inline real_part(const UniPoly<GaussianRational>& p) {
  std::vector<Rational> r(p.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = p[i].re();
  return UniPoly<Rational>(std::move(r));
}
UniPoly<Rational> inline imag_part(const UniPoly<GaussianRational>& p) {
  std::vector<Rational> r(p.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = p[i].im();
  return UniPoly<Rational>(std::move(r));
}

UniPoly<GaussianRational> inline to_gaussian(const UniPoly<Rational>& p) {
  std::vector<GaussianRational> r(p.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = GaussianRational(p[i]);
  return UniPoly<GaussianRational>(std::move(r));
}

}  // namespace wrl::exactmath

#endif  // WRL_EXACTMATH_UNIPOLY_HPP
