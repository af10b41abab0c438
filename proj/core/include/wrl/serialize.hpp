#ifndef WRL_SERIALIZE_HPP
#define WRL_SERIALIZE_HPP

#include <json.hpp>

#include "wrl/binaryforms/witness.hpp"
#include "wrl/census/census.hpp"

/*
 * JSON encodings of the public types.  Rationals serialize as "p/q"
 * strings, Gaussian rationals as {"re", "im"} pairs, forms as
 * {"d", "weighted_coeffs"} (+"m" in the multivariate case) over the global
 * monomial order.  nlohmann orders keys, so dumps are byte-stable.
 */
namespace wrl::exactmath {
void to_json(nlohmann::json& j, const Rational& x);
void from_json(const nlohmann::json& j, Rational& x);
void to_json(nlohmann::json& j, const GaussianRational& z);
void from_json(const nlohmann::json& j, GaussianRational& z);
void to_json(nlohmann::json& j, const UniPoly<Rational>& p);
}  // namespace wrl::exactmath

namespace wrl::binaryforms {
void to_json(nlohmann::json& j, const BinaryForm& f);
BinaryForm binary_form_from_json(const nlohmann::json& j);
void to_json(nlohmann::json& j, const ApolarForm<exactmath::Rational>& g);
void to_json(nlohmann::json& j, const DecompositionTerm& t);
void to_json(nlohmann::json& j, const Decomposition& dec);
void to_json(nlohmann::json& j, const BinaryRankCertificate& cert);
void to_json(nlohmann::json& j, const WitnessResult& w);
}  // namespace wrl::binaryforms

namespace wrl::veronese {
void to_json(nlohmann::json& j, const ProjectivePoint& p);
ProjectivePoint point_from_json(const nlohmann::json& j);
void to_json(nlohmann::json& j, const PointConfiguration& a);
PointConfiguration configuration_from_json(const nlohmann::json& j);
void to_json(nlohmann::json& j, const SymmetricForm& f);
SymmetricForm symmetric_form_from_json(const nlohmann::json& j);
void to_json(nlohmann::json& j, const RealLine& line);
}  // namespace wrl::veronese

namespace wrl::rankcert {
void to_json(nlohmann::json& j, const AmbientTerm& t);
void to_json(nlohmann::json& j, const RealPiece& p);
void to_json(nlohmann::json& j, const LinePiece& p);
void to_json(nlohmann::json& j, const LineDecomposition& dec);
void to_json(nlohmann::json& j, const MultiRankCertificate& cert);
}  // namespace wrl::rankcert

namespace wrl::census {
void to_json(nlohmann::json& j, const CensusSpec& spec);
CensusSpec spec_from_json(const nlohmann::json& j);
void to_json(nlohmann::json& j, const CensusRecord& rec);
void to_json(nlohmann::json& j, const TheoremReport& rep);
}  // namespace wrl::census

#endif  // WRL_SERIALIZE_HPP
