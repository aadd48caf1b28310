#ifndef HOPFACT_FACTORIZATION_HPP
#define HOPFACT_FACTORIZATION_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hopfact/action.hpp"
#include "hopfact/config.hpp"
#include "hopfact/perm_group.hpp"

namespace hopfact {

/// A claimed exact factorization failed verification (order mismatch or
/// missing coverage). Distinct from InputError: the inputs were well-formed,
/// the mathematical claim is false. CLI maps this to exit code 1.
class VerificationError : public std::runtime_error {
public:
  explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

/// A verified exact factorization G = G1*G2 with G1 cap G2 = 1. For groups
/// up to the table bound the full unique-decomposition table g -> (a, b)
/// is materialized; larger groups carry only the certificate data.
struct ExactFactorization {
  PermGroup g, g1, g2;
  Int order_g, order_g1, order_g2;
  bool materialized = false;

  // Populated when materialized: fixed enumerations of G1 and G2, the
  // index of the identity in each, and the decomposition map.
  std::vector<Perm> g1_elements, g2_elements;
  int identity_g1 = -1, identity_g2 = -1;
  std::unordered_map<Perm, std::pair<int, int>, PermHash> decomposition;

  int g1_index(const Perm& a) const;
  int g2_index(const Perm& b) const;
};

/// Checks |G| = |G1|*|G2| plus transitivity of G2 on the cosets G/G1 (which
/// together force G1 cap G2 = 1 by orbit counting), and materializes the
/// decomposition table when |G| <= cfg.factor_table_bound.
/// Throws InputError for non-subgroups, VerificationError for a false claim.
ExactFactorization verify_exact_factorization(const PermGroup& g, const PermGroup& g1,
                                              const PermGroup& g2, const RunConfig& cfg = {});

/// The unique pair (a, b) with a in G1, b in G2 and a*b = x.
std::pair<Perm, Perm> decompose(const ExactFactorization& f, const Perm& x);

/// The mutual actions induced by the factorization, as |G2| x |G1| index
/// tables: compose(b, a) = compose(triangle(b, a), square(b, a)) with the
/// triangle value in G1 and the square value in G2. Verified against the
/// identity laws and the two compatibility identities at construction
/// (exhaustively up to 10^7 triples, sampled with a fixed seed beyond).
struct MatchedPair {
  int n1 = 0, n2 = 0;
  std::vector<int> triangle_table;  // [b * n1 + a] -> G1 index
  std::vector<int> square_table;    // [b * n1 + a] -> G2 index

  int triangle(int b, int a) const { return triangle_table[static_cast<size_t>(b) * n1 + a]; }
  int square(int b, int a) const { return square_table[static_cast<size_t>(b) * n1 + a]; }
};

MatchedPair matched_pair(const ExactFactorization& f);

/// Candidate subgroup pairs that verify, with per-candidate failures
/// collected rather than thrown.
struct FactorizationSearchResult {
  std::vector<ExactFactorization> hits;
  std::vector<std::string> failures;
};

FactorizationSearchResult find_factorizations(
    const PermGroup& g, const std::vector<std::pair<std::vector<Perm>, std::vector<Perm>>>& candidates,
    const RunConfig& cfg = {});

}  // namespace hopfact

#endif
