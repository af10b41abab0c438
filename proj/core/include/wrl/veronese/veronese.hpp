#ifndef WRL_VERONESE_VERONESE_HPP
#define WRL_VERONESE_VERONESE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "wrl/binaryforms/binary_form.hpp"
#include "wrl/exactmath/matrix.hpp"
#include "wrl/veronese/monomial_table.hpp"
#include "wrl/veronese/projective_point.hpp"

namespace wrl::veronese {

using binaryforms::BinaryForm;
using exactmath::Matrix;

/*
 * Real symmetric form of degree d in m+1 variables.  Coefficients are
 * stored in the weighted convention over the descending-lex monomial
 * table: f = sum multinomial(d; alpha) a_alpha x^alpha.
 */
class SymmetricForm {
 public:
  SymmetricForm(int m, int d, std::vector<Rational> weighted);
  static SymmetricForm from_weighted(int m, int d, std::vector<Rational> a) {
    return SymmetricForm(m, d, std::move(a));
  }
  static SymmetricForm from_plain(int m, int d, const std::vector<Rational>& plain);
  static SymmetricForm from_binary(const BinaryForm& f);  // m = 1

  int m() const { return m_; }
  int d() const { return d_; }
  std::size_t coeff_count() const { return a_.size(); }
  const std::vector<Rational>& weighted() const { return a_; }
  std::vector<Rational> plain() const;
  BinaryForm to_binary() const;  // requires m == 1

  friend bool operator==(const SymmetricForm& f, const SymmetricForm& g) {
    return f.m_ == g.m_ && f.d_ == g.d_ && f.a_ == g.a_;
  }
  friend SymmetricForm operator*(const Rational& s, const SymmetricForm& f) {
    std::vector<Rational> a(f.a_);
    for (auto& x : a) x = s * x;
    return SymmetricForm(f.m_, f.d_, std::move(a));
  }

 private:
  int m_, d_;
  std::vector<Rational> a_;  // weighted coefficients, descending-lex order
};

// Coefficient vector of (p_0 x_0 + ... + p_m x_m)^d in the plain monomial
// basis; equivalently the weighted-convention coordinates of the d-th
// power, whose entry at alpha is multinomial(d; alpha) p^alpha.
// Conjugation-equivariant: embed(conj p) = conj(embed p).
std::vector<GaussianRational> veronese_embed(const ProjectivePoint& p, int d);
std::vector<Rational> veronese_embed_real(const ProjectivePoint& p, int d);

// In the weighted-coefficient coordinates used by SymmetricForm, the same
// rank-one point is p^alpha without the multinomial factor.
std::vector<GaussianRational> veronese_embed_weighted(const ProjectivePoint& p, int d);
std::vector<Rational> veronese_embed_weighted_real(const ProjectivePoint& p, int d);

// (coords^alpha)_alpha for a raw (unnormalized) coordinate vector: the
// weighted coordinates of (sum_j coords_j x_j)^d.
std::vector<Rational> power_vector_weighted(const std::vector<Rational>& coords, int m, int d);

// Product of the given linear forms (each a coordinate vector of length
// m+1), e.g. l_u^(d-1) l_v for tangential points.
SymmetricForm product_of_linear_forms(int m, const std::vector<std::vector<Rational>>& linears);

/*
 * b = e + 2a real vectors spanning the real points of <nu_d(A)>:
 * nu_d(P_h) for the real points, Re nu_d(Q_j) and Im nu_d(Q_j) per pair.
 * Vectors are in weighted coordinates; independence (rank b) is verified
 * and degenerate configurations are rejected.  Requires d >= b - 1.
 */
std::vector<std::vector<Rational>> real_span_basis(const PointConfiguration& A, int d);

struct SampleInfo {
  std::uint64_t seed = 0;
  int resamples = 0;
  std::vector<long> coefficients;  // in span-basis order, for replay
};

/*
 * Random integer combination of the span basis, resampled until the
 * genericity certificate passes: the sample lies in no <nu_d(A')> for a
 * proper subset A' of the underlying points (membership is rank-tested
 * over Q(i) against every maximal subset).
 */
SymmetricForm sample_in_span(const PointConfiguration& A, int d, std::uint64_t seed,
                             long height_bound, SampleInfo* info = nullptr,
                             int resample_budget = 64);

struct ConfigRequirements {
  bool full_span = true;          // dim <A> = min(m+1, b) - 1
  bool pair_span = true;          // dim <pairs and conjugates> = 2a - 1
  bool no_three_collinear = false;
  bool independent_conditions = false;  // generic Hilbert function of A
};

PointConfiguration sample_configuration(int m, int e, int a, std::uint64_t seed,
                                        long height_bound,
                                        const ConfigRequirements& req = {},
                                        int rejection_budget = 256);

// Contraction from degree-k duals to degree-(d-k) forms; the entry at
// (gamma, beta) is the weighted coefficient at gamma + beta.  Its rank
// bounds the border rank from below.
Matrix<Rational> catalecticant_multi(const SymmetricForm& f, int k);

// Largest catalecticant rank over k = 1..d/2, streamed with early stop at
// `cap` (for samples built from cap points, the rank can never exceed cap,
// so reaching it is exact).
int border_rank_lower(const SymmetricForm& f, int cap);

// Real line in P^m spanned by two real points.  Binary forms in the
// parameters (s, t) are identified with ambient forms supported on the
// line through the linear map Phi with Phi((s x0' + t x1')^d) =
// nu_d(s v0 + t v1); decompositions transported along Phi keep their
// points on the line.
struct RealLine {
  std::vector<Rational> v0, v1;
};

// Phi: ambient form of the binary form g
SymmetricForm push_to_ambient(const RealLine& line, const BinaryForm& g, int m);
// Phi^(-1): the binary coordinates of f on the line; throws when f is not
// supported on <nu_d(line)>.
BinaryForm line_coordinates(const SymmetricForm& f, const RealLine& line);

// The line spanned by the unique degree-2 apolar scheme of a form of
// border rank 2, recovered from the kernel of the k=1 catalecticant.
RealLine recover_sigma2_line(const SymmetricForm& f);

enum class Sigma2Class { real_pair, conj_pair, tangential };

struct Sigma2Analysis {
  Sigma2Class cls;
  RealLine line;
  BinaryForm restricted;       // binary coordinates of f on the line
  Rational quadric_disc;       // discriminant of the apolar quadric
};

/*
 * Classification of a real form of border rank exactly 2 by the unique
 * degree-2 scheme on its line: two real points, a conjugate pair, or a
 * non-reduced (tangential) scheme.  Scale- and conjugation-invariant.
 */
Sigma2Analysis classify_sigma2(const SymmetricForm& f);

}  // namespace wrl::veronese

#endif  // WRL_VERONESE_VERONESE_HPP
