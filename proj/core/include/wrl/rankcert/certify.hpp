#ifndef WRL_RANKCERT_CERTIFY_HPP
#define WRL_RANKCERT_CERTIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "wrl/binaryforms/binary_rank.hpp"
#include "wrl/veronese/veronese.hpp"

namespace wrl::rankcert {

using binaryforms::BinaryForm;
using binaryforms::Decomposition;
using exactmath::GaussianRational;
using exactmath::Rational;
using veronese::PointConfiguration;
using veronese::ProjectivePoint;
using veronese::RealLine;
using veronese::SymmetricForm;

// Real line through a conjugate pair: D = <Q, sigma Q> spanned by the real
// points Re Q and Im Q of the normalized representative.  Q itself pulls
// back to the parameter (1 : i) and sigma Q to (1 : -i).
RealLine line_parametrize(const ProjectivePoint& q);

// c * nu_d(point), transported to ambient weighted coordinates
struct AmbientTerm {
  Rational coeff;
  std::vector<Rational> point;  // raw linear-form coefficients, on the line
};

// Contribution of one real line: the projected point O as a binary form in
// the line parameters, its real decomposition, and the pushed terms.
struct LinePiece {
  RealLine line;
  std::optional<GaussianRational> pair_coefficient;  // c_j when D = <Q, sigma Q>
  BinaryForm o_binary;
  Decomposition o_decomposition;
  binaryforms::BinaryRankCertificate o_certificate;
  std::vector<AmbientTerm> ambient_terms;  // empty when the piece is symbolic
};

struct RealPiece {
  Rational coeff;
  std::vector<Rational> point;
};

struct LineDecomposition {
  int m = 0, d = 0;
  std::vector<LinePiece> pieces;
  std::vector<RealPiece> reals;
  std::size_t total_terms() const;
};

struct SplitResult {
  LineDecomposition decomposition;
  std::vector<Rational> span_coefficients;  // in span-basis order
};

/*
 * Exact solve of f against the real span basis of A, grouped per pair:
 * each pair contributes the unique real point O_j on <nu_d(D_j)>, each
 * real point its retained coefficient.  Throws when the solve is rank
 * deficient (the genericity certificate failed) or any slot vanishes.
 */
SplitResult split_along_pairs(const SymmetricForm& f, const PointConfiguration& A, int d);

enum class MultiStatus { certified_exact, bounds_only };

struct MultiRankCertificate {
  int m = 0, d = 0, b = 0;
  int type_e = 0, type_a = 0;
  int border_lower = 0;
  std::optional<int> certified_value;
  std::string theorem;  // tag of the statement that pins the value, or ""
  int upper = 0;
  MultiStatus status = MultiStatus::bounds_only;
  bool reconstruction_verified = false;
  std::optional<veronese::Sigma2Class> sigma2_class;
  LineDecomposition decomposition;
  std::string note;

  bool exact() const { return status == MultiStatus::certified_exact; }
};

/*
 * Certificate for a genericity-certified sample on the (e, a) stratum.
 * The upper bound is the line-restriction decomposition size; the value
 * a*d + e is certified exactly when the stratum parameters satisfy the
 * hypotheses of one of the supported statements (w2, w3..w7, w8), gated
 * literally.  Reconstruction failure is an internal error and throws.
 */
MultiRankCertificate certified_rank_multi(const SymmetricForm& f, const PointConfiguration& A,
                                          const binaryforms::RankSearchOptions& opts = {});

// Certificate for border-rank-2 forms from the form alone, through the
// three-way classification of the unique degree-2 scheme.
MultiRankCertificate certified_rank_sigma2(const SymmetricForm& f,
                                           const binaryforms::RankSearchOptions& opts = {});

// Exact expansion equality of the decomposition against f; symbolic line
// pieces are verified on their line and re-expanded through the
// parametrization.
bool verify_reconstruction(const SymmetricForm& f, const LineDecomposition& dec);

}  // namespace wrl::rankcert

#endif  // WRL_RANKCERT_CERTIFY_HPP
