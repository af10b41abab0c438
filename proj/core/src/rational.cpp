#include "wrl/exactmath/rational.hpp"

#include "wrl/exactmath/matrix.hpp"

namespace wrl::exactmath {

Rational Rational::parse(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    mpz_class n;
    if (n.set_str(std::string(s), 10) != 0)
      throw std::invalid_argument("Rational::parse: bad integer '" + std::string(s) + "'");
    return Rational(n);
  }
  mpz_class num, den;
  if (num.set_str(std::string(s.substr(0, slash)), 10) != 0 ||
      den.set_str(std::string(s.substr(slash + 1)), 10) != 0)
    throw std::invalid_argument("Rational::parse: bad rational '" + std::string(s) + "'");
  if (den == 0)
    throw std::invalid_argument("Rational::parse: zero denominator in '" + std::string(s) + "'");
  return Rational(num, den);
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::size_t Rational::height_bits() const {
  return std::max(mpz_sizeinbase(num().get_mpz_t(), 2), mpz_sizeinbase(den().get_mpz_t(), 2));
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class multinomial(unsigned long n, const std::vector<unsigned>& parts) {
  mpz_class r = 1;
  unsigned long used = 0;
  for (unsigned p : parts) {
    used += p;
    r *= binomial(used, p);
  }
  if (used != n) throw std::invalid_argument("multinomial: parts do not sum to n");
  return r;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

namespace {

// common positive scale for a list of rationals: lcm(dens)/gcd(nums)
Rational primitive_scale(const std::vector<const Rational*>& xs) {
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const Rational* x : xs) {
    if (x->is_zero()) continue;
    den_lcm = lcm(den_lcm, x->den());
  }
  for (const Rational* x : xs) {
    if (x->is_zero()) continue;
    mpz_class n = x->num() * (den_lcm / x->den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  if (num_gcd == 0) return Rational(1);
  return Rational(den_lcm, num_gcd);
}

}  // namespace

void make_primitive(std::vector<Rational>& row) {
  std::vector<const Rational*> xs;
  xs.reserve(row.size());
  for (const auto& x : row) xs.push_back(&x);
  Rational s = primitive_scale(xs);
  if (s.is_one()) return;
  for (auto& x : row) x *= s;
}

void make_primitive(std::vector<GaussianRational>& row) {
  std::vector<const Rational*> xs;
  xs.reserve(2 * row.size());
  for (const auto& z : row) {
    xs.push_back(&z.re());
    xs.push_back(&z.im());
  }
  Rational s = primitive_scale(xs);
  if (s.is_one()) return;
  GaussianRational gs{s};
  for (auto& z : row) z *= gs;
}

std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  std::string s;
  if (!re_.is_zero()) s = re_.str();
  if (im_.sign() > 0 && !s.empty()) s += "+";
  if (im_ == Rational(-1)) {
    s += "-i";
  } else if (im_.is_one()) {
    s += "i";
  } else {
    s += im_.str() + "*i";
  }
  return s;
}

}  // namespace wrl::exactmath
