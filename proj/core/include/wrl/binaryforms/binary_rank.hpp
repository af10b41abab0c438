#ifndef WRL_BINARYFORMS_BINARY_RANK_HPP
#define WRL_BINARYFORMS_BINARY_RANK_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "wrl/binaryforms/binary_form.hpp"
#include "wrl/binaryforms/decompose.hpp"

namespace wrl::binaryforms {

struct RankSearchOptions {
  std::uint64_t seed = 0x57524C2D42494Eull;
  int budget_per_level = 512;     // random kernel combinations per level
  bool with_decomposition = true;
};

template <class K>
struct ComplexRankResult {
  int rank = 0;
  ApolarForm<K> witness;  // squarefree apolar form of degree `rank`
};

/*
 * Sylvester's algorithm.  The rank is the catalecticant rank b when the
 * degree-b apolar space contains a squarefree form, and d - b + 2
 * otherwise (the classical jump for non-reduced apolar schemes).  The
 * returned witness is always squarefree and exactly apolar.
 */
ComplexRankResult<Rational> complex_rank(const BinaryForm& f, const RankSearchOptions& = {});
ComplexRankResult<GaussianRational> complex_rank(const GaussianBinaryForm& f,
                                                 const RankSearchOptions& = {});

enum class CertStatus { exact, bounded };

struct BinaryRankCertificate {
  int d = 0;
  int border_rank = 0;
  int complex_rank = 0;
  int lower = 0;  // certified real-rank lower bound
  int upper = 0;  // witnessed real-rank upper bound
  CertStatus status = CertStatus::bounded;
  std::string lower_rule;  // which certificate produced `lower`
  std::optional<ApolarForm<Rational>> witness_apolar;
  std::optional<Decomposition> witness_decomposition;
  bool exact() const { return status == CertStatus::exact; }
  int rank() const {
    if (!exact()) throw std::logic_error("BinaryRankCertificate: rank undecided");
    return upper;
  }
};

/*
 * Real Waring rank with a machine-checkable certificate.  Levels
 * r = complex rank .. d are searched for a real-rooted squarefree apolar
 * element (basis vectors first, then seeded random integer combinations);
 * level d always succeeds through the split-node construction, so `upper`
 * is always set.  `lower` comes from the strongest applicable rule:
 * the complex rank, the d-distinct-real-roots criterion, or the
 * conjugate-pair classification on border rank 2.
 */
BinaryRankCertificate real_rank(const BinaryForm& f, const RankSearchOptions& = {});

/*
 * Deterministic degree-d apolar form with d distinct projective rational
 * roots.  Built from Lagrange-style node products: the apolarity
 * functional is linear on the segments joining adjacent node forms, and
 * with the orientation at infinity fixed, a zero or a sign change always
 * exists, giving a witness whose moving root is rational.
 */
struct SplitApolarWitness {
  ApolarForm<Rational> form;
  std::vector<std::optional<Rational>> roots;  // nullopt = point at infinity
};
SplitApolarWitness totally_split_apolar(const BinaryForm& f);

}  // namespace wrl::binaryforms

#endif  // WRL_BINARYFORMS_BINARY_RANK_HPP
