#include "wrl/exactmath/sturm.hpp"

#include <stdexcept>

namespace wrl::exactmath {

namespace {

// Scale by a positive rational so coefficients are coprime integers.
UniPoly<Rational> normalize_positive(const UniPoly<Rational>& p) {
  if (p.is_zero_poly()) return p;
  mpz_class den_lcm = 1;
  for (const auto& c : p.coeffs())
    if (!c.is_zero()) den_lcm = lcm(den_lcm, c.den());
  mpz_class num_gcd = 0;
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) continue;
    mpz_class n = c.num() * (den_lcm / c.den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  Rational scale{den_lcm, num_gcd};
  std::vector<Rational> out(p.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = p[i] * scale;
  return UniPoly<Rational>(std::move(out));
}

int sign_at_pos_inf(const UniPoly<Rational>& p) { return p.leading().sign(); }
int sign_at_neg_inf(const UniPoly<Rational>& p) {
  int s = p.leading().sign();
  return (p.degree() % 2 == 0) ? s : -s;
}

int count_variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

SturmChain::SturmChain(const UniPoly<Rational>& p) {
  if (p.is_zero_poly()) throw std::invalid_argument("SturmChain: zero polynomial");
  sqfree_ = squarefree_part(p);
  if (sqfree_.degree() < 1) return;
  chain_.push_back(normalize_positive(sqfree_));
  chain_.push_back(normalize_positive(sqfree_.derivative()));
  while (chain_.back().degree() > 0) {
    UniPoly<Rational> r = -(chain_[chain_.size() - 2] % chain_.back());
    if (r.is_zero_poly()) break;  // squarefree input: only at the constant tail
    chain_.push_back(normalize_positive(r));
  }
}

int SturmChain::variations_at(const Rational& x) const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(q.eval(x).sign());
  return count_variations(signs);
}

int SturmChain::variations_at_neg_inf() const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(sign_at_neg_inf(q));
  return count_variations(signs);
}

int SturmChain::variations_at_pos_inf() const {
  std::vector<int> signs;
  signs.reserve(chain_.size());
  for (const auto& q : chain_) signs.push_back(sign_at_pos_inf(q));
  return count_variations(signs);
}

int SturmChain::count_all() const {
  if (sqfree_.degree() < 1) return 0;
  return variations_at_neg_inf() - variations_at_pos_inf();
}

int SturmChain::count_in(const Rational& lo, const Rational& hi) const {
  if (sqfree_.degree() < 1) return 0;
  if (!(lo < hi)) throw std::invalid_argument("SturmChain::count_in: empty interval");
  return variations_at(lo) - variations_at(hi);
}

int sturm_distinct_real_roots(const UniPoly<Rational>& p) {
  return SturmChain(p).count_all();
}

namespace {

// 1 + max |a_i / a_n| bounds the modulus of every root.
Rational cauchy_root_bound(const UniPoly<Rational>& p) {
  Rational m(0);
  const Rational lead = p.leading();
  for (int i = 0; i < p.degree(); ++i) {
    Rational q = (p[i] / lead).abs();
    if (q > m) m = q;
  }
  return m + Rational(1);
}

}  // namespace

std::vector<std::pair<Rational, Rational>> isolate_real_roots(const UniPoly<Rational>& p) {
  SturmChain chain(p);
  std::vector<std::pair<Rational, Rational>> out;
  if (chain.squarefree().degree() < 1) return out;
  const UniPoly<Rational>& q = chain.squarefree();
  Rational bound = cauchy_root_bound(q) + Rational(1);

  // Picks a point in (lo, hi) where q does not vanish.
  auto interior_nonroot = [&](const Rational& lo, const Rational& hi) {
    for (long j = 2; ; ++j) {
      Rational mid = lo + (hi - lo) * Rational(1, j);
      if (!q.eval(mid).is_zero()) return mid;
    }
  };

  std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
  while (!work.empty()) {
    auto [lo, hi] = work.back();
    work.pop_back();
    int n = chain.count_in(lo, hi);
    if (n == 0) continue;
    if (n == 1) {
      out.emplace_back(lo, hi);
      continue;
    }
    Rational mid = interior_nonroot(lo, hi);
    work.emplace_back(lo, mid);
    work.emplace_back(mid, hi);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

namespace {

// Rational with the smallest denominator in the closed interval [lo, hi].
Rational simplest_in(const Rational& lo, const Rational& hi) {
  mpz_class ceil_lo, floor_hi;
  mpz_cdiv_q(ceil_lo.get_mpz_t(), lo.num().get_mpz_t(), lo.den().get_mpz_t());
  mpz_fdiv_q(floor_hi.get_mpz_t(), hi.num().get_mpz_t(), hi.den().get_mpz_t());
  if (ceil_lo <= floor_hi) {
    if (ceil_lo <= 0 && 0 <= floor_hi) return Rational(0);
    return Rational(ceil_lo);
  }
  // Both endpoints lie strictly inside (n, n+1); recurse on reciprocals.
  mpz_class n;
  mpz_fdiv_q(n.get_mpz_t(), lo.num().get_mpz_t(), lo.den().get_mpz_t());
  Rational fn{n};
  Rational inner = simplest_in((hi - fn).inverse(), (lo - fn).inverse());
  return fn + inner.inverse();
}

}  // namespace

std::optional<Rational> rational_root_in(const UniPoly<Rational>& p, const Rational& lo_in,
                                         const Rational& hi_in) {
  if (p.is_zero_poly()) throw std::invalid_argument("rational_root_in: zero polynomial");
  UniPoly<Rational> q = normalize_positive(squarefree_part(p));
  // A rational root u/v in lowest terms has v dividing the leading
  // coefficient of the primitive integer form.
  const mpz_class vmax = q.leading().num();
  Rational lo = lo_in, hi = hi_in;
  int slo = q.eval(lo).sign();
  int shi = q.eval(hi).sign();
  if (slo == 0) return lo;
  if (shi == 0) return hi;
  if (slo == shi) return std::nullopt;  // not a sign-isolating interval

  Rational width_goal{mpz_class(1), vmax * vmax};
  while (hi - lo >= width_goal) {
    Rational mid = (lo + hi) * Rational(1, 2);
    int sm = q.eval(mid).sign();
    if (sm == 0) return mid;
    if (sm == slo)
      lo = mid;
    else
      hi = mid;
  }
  Rational candidate = simplest_in(lo, hi);
  if (q.eval(candidate).is_zero()) return candidate;
  return std::nullopt;
}

}  // namespace wrl::exactmath
