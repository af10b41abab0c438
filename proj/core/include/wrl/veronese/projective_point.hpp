#ifndef WRL_VERONESE_PROJECTIVE_POINT_HPP
#define WRL_VERONESE_PROJECTIVE_POINT_HPP

#include <vector>

#include "wrl/exactmath/rational.hpp"

namespace wrl::veronese {

using exactmath::GaussianRational;
using exactmath::Rational;

/*
 * Point of P^m(C) with Q(i) coordinates, normalized so the first nonzero
 * coordinate is 1.  Equality is structural; a point is real iff every
 * coordinate is real, and conjugation acts coordinatewise.
 */
class ProjectivePoint {
 public:
  explicit ProjectivePoint(std::vector<GaussianRational> coords);

  int m() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<GaussianRational>& coords() const { return c_; }

  bool is_real() const;
  ProjectivePoint conjugate() const;
  std::vector<Rational> real_coords() const;  // throws unless is_real()

  friend bool operator==(const ProjectivePoint& p, const ProjectivePoint& q) {
    return p.c_ == q.c_;
  }
  friend bool operator!=(const ProjectivePoint& p, const ProjectivePoint& q) {
    return !(p == q);
  }

 private:
  std::vector<GaussianRational> c_;
};

/*
 * Conjugation-stable set of b = e + 2a points: e real points plus a
 * conjugate pairs, each pair stored through its representative with
 * positive imaginary content (the conjugate is implicit).
 */
struct PointConfiguration {
  int m = 1;
  std::vector<ProjectivePoint> reals;
  std::vector<ProjectivePoint> pairs;

  int e() const { return static_cast<int>(reals.size()); }
  int a() const { return static_cast<int>(pairs.size()); }
  int b() const { return e() + 2 * a(); }

  // every underlying point, pairs expanded with their conjugates
  std::vector<ProjectivePoint> all_points() const;

  // dimension, distinctness and reality invariants; throws on violation
  void validate() const;
};

}  // namespace wrl::veronese

#endif  // WRL_VERONESE_PROJECTIVE_POINT_HPP
