#ifndef WRL_BINARYFORMS_BINARY_FORM_HPP
#define WRL_BINARYFORMS_BINARY_FORM_HPP

#include <stdexcept>
#include <vector>

#include "wrl/exactmath/matrix.hpp"
#include "wrl/exactmath/rational.hpp"
#include "wrl/exactmath/sturm.hpp"
#include "wrl/exactmath/unipoly.hpp"

namespace wrl::binaryforms {

using exactmath::GaussianRational;
using exactmath::Matrix;
using exactmath::Rational;
using exactmath::UniPoly;

/*
 * Degree-d binary form f = sum_i binom(d,i) a_i x0^(d-i) x1^i.
 * Coefficients are stored in the weighted convention (the a_i), so the
 * degree-k catalecticant is the plain Hankel matrix of (a_0..a_d).
 * Dehomogenization: z = x0/x1, so f(z) = sum binom(d,i) a_i z^(d-i) and
 * a vanishing a_0 means a root at (1:0).
 */
template <class K>
class BinaryFormT {
 public:
  BinaryFormT(int d, std::vector<K> weighted) : d_(d), a_(std::move(weighted)) {
    if (d_ < 1) throw std::invalid_argument("BinaryForm: degree must be >= 1");
    if (a_.size() != static_cast<std::size_t>(d_) + 1)
      throw std::invalid_argument("BinaryForm: need d+1 coefficients");
    bool nz = false;
    for (const auto& x : a_)
      if (!is_zero(x)) { nz = true; break; }
    if (!nz) throw std::invalid_argument("BinaryForm: zero form");
  }

  static BinaryFormT from_weighted(int d, std::vector<K> a) { return BinaryFormT(d, std::move(a)); }
  static BinaryFormT from_plain(int d, const std::vector<K>& plain) {
    std::vector<K> a(plain.size());
    for (std::size_t i = 0; i < plain.size(); ++i)
      a[i] = plain[i] / K(Rational(exactmath::binomial(d, i)));
    return BinaryFormT(d, std::move(a));
  }
  // f(z) of degree <= d, homogenized to degree d
  static BinaryFormT from_univariate(const UniPoly<K>& p, int d) {
    if (p.degree() > d) throw std::invalid_argument("BinaryForm: univariate degree exceeds d");
    std::vector<K> plain(d + 1, K(0));
    for (int t = 0; t <= p.degree(); ++t) plain[d - t] = p.coeff(t);
    return from_plain(d, plain);
  }

  int degree() const { return d_; }
  const std::vector<K>& weighted() const { return a_; }
  std::vector<K> plain() const {
    std::vector<K> p(a_.size());
    for (std::size_t i = 0; i < a_.size(); ++i)
      p[i] = a_[i] * K(Rational(exactmath::binomial(d_, i)));
    return p;
  }
  UniPoly<K> univariate() const {
    auto p = plain();
    std::vector<K> c(d_ + 1);
    for (int t = 0; t <= d_; ++t) c[t] = p[d_ - t];
    return UniPoly<K>(std::move(c));
  }

  bool is_real() const {
    for (const auto& x : a_)
      if (!x_is_real(x)) return false;
    return true;
  }

  BinaryFormT conjugate() const {
    std::vector<K> a(a_);
    for (auto& x : a) x = conj(x);
    return BinaryFormT(d_, std::move(a));
  }

  friend BinaryFormT operator*(const K& s, const BinaryFormT& f) {
    std::vector<K> a(f.a_);
    for (auto& x : a) x = s * x;
    return BinaryFormT(f.d_, std::move(a));
  }
  friend BinaryFormT operator+(const BinaryFormT& f, const BinaryFormT& g) {
    if (f.d_ != g.d_) throw std::invalid_argument("BinaryForm: degree mismatch");
    std::vector<K> a(f.a_);
    for (int i = 0; i <= f.d_; ++i) a[i] += g.a_[i];
    return BinaryFormT(f.d_, std::move(a));
  }
  friend bool operator==(const BinaryFormT& f, const BinaryFormT& g) {
    return f.d_ == g.d_ && f.a_ == g.a_;
  }

 private:
  static bool x_is_real(const Rational&) { return true; }
  static bool x_is_real(const GaussianRational& z) { return z.is_real(); }
  int d_;
  std::vector<K> a_;
};

using BinaryForm = BinaryFormT<Rational>;
using GaussianBinaryForm = BinaryFormT<GaussianRational>;

// Extracts the real form of a Gaussian expansion, rejecting nonzero
// imaginary parts.
BinaryForm real_form(const GaussianBinaryForm& f);

/*
 * Apolar binary form of declared degree `form_degree`, stored as the
 * dehomogenized g(w); coefficients of the homogeneous g are plain
 * (unweighted).  A drop of the univariate degree below form_degree is a
 * root at (1:0) of that multiplicity.
 */
template <class K>
struct ApolarForm {
  int form_degree = 0;
  UniPoly<K> univ;

  // kernel vector (b_0..b_k) with g = sum b_j y0^(k-j) y1^j
  static ApolarForm from_kernel_vector(int k, const std::vector<K>& b) {
    std::vector<K> c(k + 1);
    for (int t = 0; t <= k; ++t) c[t] = b[k - t];
    return ApolarForm{k, UniPoly<K>(std::move(c))};
  }
  std::vector<K> kernel_vector() const {
    std::vector<K> b(form_degree + 1, K(0));
    for (int t = 0; t <= univ.degree(); ++t) b[form_degree - t] = univ.coeff(t);
    return b;
  }
  int infinity_multiplicity() const { return form_degree - univ.degree(); }
};

// Number of distinct real points of P^1 at which the degree-`form_degree`
// form with dehomogenization `univ` vanishes (the point at infinity counts
// once when the degree drops).
int distinct_projective_real_roots(const UniPoly<Rational>& univ, int form_degree);

// Squarefree as a binary form: squarefree affine part and at most a simple
// root at infinity.
template <class K>
bool is_squarefree_form(const UniPoly<K>& univ, int form_degree) {
  if (univ.is_zero_poly()) throw std::invalid_argument("is_squarefree_form: zero form");
  if (form_degree - univ.degree() > 1) return false;
  if (univ.is_constant()) return true;
  return exactmath::is_squarefree(univ);
}

// d distinct points of P^1(R): the certificate for real rank d.
bool totally_real_distinct(const UniPoly<Rational>& univ, int form_degree);

// (d-k+1) x (k+1) Hankel matrix of the weighted coefficients.
template <class K>
Matrix<K> catalecticant(const BinaryFormT<K>& f, int k) {
  const int d = f.degree();
  if (k < 0 || k > d) throw std::invalid_argument("catalecticant: k out of range");
  Matrix<K> m(d - k + 1, k + 1);
  for (int t = 0; t <= d - k; ++t)
    for (int j = 0; j <= k; ++j) m.at(t, j) = f.weighted()[t + j];
  return m;
}

// rank of the most-square catalecticant: the border rank of a binary form
template <class K>
int border_rank(const BinaryFormT<K>& f) {
  return static_cast<int>(catalecticant(f, f.degree() / 2).rank());
}

// Exact test that g annihilates f under the polar pairing.
template <class K>
bool is_apolar(const BinaryFormT<K>& f, const ApolarForm<K>& g) {
  const auto b = g.kernel_vector();
  const int d = f.degree(), k = g.form_degree;
  if (k > d) return false;
  for (int t = 0; t <= d - k; ++t) {
    K acc(0);
    for (int j = 0; j <= k; ++j) acc += f.weighted()[t + j] * b[j];
    if (!is_zero(acc)) return false;
  }
  return true;
}

}  // namespace wrl::binaryforms

#endif  // WRL_BINARYFORMS_BINARY_FORM_HPP
