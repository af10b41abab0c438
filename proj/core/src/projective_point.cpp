#include "wrl/veronese/projective_point.hpp"

#include <stdexcept>

namespace wrl::veronese {

ProjectivePoint::ProjectivePoint(std::vector<GaussianRational> coords) : c_(std::move(coords)) {
  if (c_.size() < 2) throw std::invalid_argument("ProjectivePoint: need at least 2 coordinates");
  std::size_t first = c_.size();
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) {
      first = i;
      break;
    }
  }
  if (first == c_.size()) throw std::invalid_argument("ProjectivePoint: zero vector");
  const GaussianRational lead = c_[first];
  for (auto& x : c_) x /= lead;
}

bool ProjectivePoint::is_real() const {
  for (const auto& x : c_)
    if (!x.is_real()) return false;
  return true;
}

ProjectivePoint ProjectivePoint::conjugate() const {
  std::vector<GaussianRational> c(c_);
  for (auto& x : c) x = x.conjugate();
  return ProjectivePoint(std::move(c));
}

std::vector<Rational> ProjectivePoint::real_coords() const {
  std::vector<Rational> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_real()) throw std::domain_error("ProjectivePoint: non-real coordinates");
    r[i] = c_[i].re();
  }
  return r;
}

std::vector<ProjectivePoint> PointConfiguration::all_points() const {
  std::vector<ProjectivePoint> out;
  out.reserve(b());
  for (const auto& p : reals) out.push_back(p);
  for (const auto& q : pairs) {
    out.push_back(q);
    out.push_back(q.conjugate());
  }
  return out;
}

void PointConfiguration::validate() const {
  if (m < 1) throw std::invalid_argument("PointConfiguration: m must be >= 1");
  if (b() < 1) throw std::invalid_argument("PointConfiguration: empty configuration");
  for (const auto& p : reals) {
    if (p.m() != m) throw std::invalid_argument("PointConfiguration: ambient dimension mismatch");
    if (!p.is_real()) throw std::invalid_argument("PointConfiguration: listed real point is not real");
  }
  for (const auto& q : pairs) {
    if (q.m() != m) throw std::invalid_argument("PointConfiguration: ambient dimension mismatch");
    if (q.is_real()) throw std::invalid_argument("PointConfiguration: listed pair point is real");
  }
  auto all = all_points();
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (all[i] == all[j])
        throw std::invalid_argument("PointConfiguration: points not pairwise distinct");
}

}  // namespace wrl::veronese
