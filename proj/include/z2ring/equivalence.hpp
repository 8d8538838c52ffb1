#pragma once

// Ring isomorphisms between profiles. Every graded isomorphism of the model
// rings is induced by a coordinate permutation sigma acting degreewise as
// sum_i sigma t^i, so deciding isomorphism reduces to finding sigma with
// sigma(V_i) = V'_i for every i < n-1.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "z2ring/cohomology.hpp"
#include "z2ring/gf2.hpp"
#include "z2ring/permutation.hpp"

namespace z2ring {

/// True iff M maps V_2r onto itself and M(x o y) = M(x) o M(y) for all pairs
/// drawn from the probe set: an RREF basis of V_2r, the pairwise sums of its
/// rows, and every weight-2 vector. Throws SingularMatrix for a singular M and
/// DimensionMismatch unless M is square of even size.
bool is_hadamard_automorphism(const Gf2Matrix& m);

/// M(x o y) = M(x) o M(y) for all x, y in GF(2)^2r, decided on unit vectors
/// (both sides are bilinear). Used to cross-check the probe set.
bool is_multiplicative_on_full_space(const Gf2Matrix& m);

struct WeylCensus {
  std::size_t r = 0;
  std::size_t invertible_scanned = 0;
  std::size_t automorphisms = 0;
  bool all_permutation_matrices = false;
  /// Matrices multiplicative on all of GF(2)^2r; must match `automorphisms`.
  std::size_t full_space_multiplicative = 0;
};

/// Exhaustive scan of GL(2r, Z_2). Throws BudgetExceeded for r > max_r.
WeylCensus weyl_census(std::size_t r, std::size_t max_r = 2);

struct FlagResult {
  bool equivalent = false;
  std::optional<Permutation> witness;
  std::optional<std::string> invariant_mismatch;
};

/// Searches for sigma with sigma(V_i^p) = V_i^q for all i < n-1. Candidate
/// images are tried in ascending order, so the witness is deterministic.
/// Throws InvalidArgument if either profile is invalid.
FlagResult flag_equivalent(const CohomProfile& p, const CohomProfile& q);

nlohmann::json witness_to_json(const FlagResult& result);

/// The ring map sum_i sigma t^i from R_p to R_q.
class AnalyticIso {
 public:
  struct Check {
    bool additive = true;
    bool multiplicative = true;
    bool graded = true;
    bool unital = true;
    bool ok() const { return additive && multiplicative && graded && unital; }
  };

  /// Throws InvalidArgument if sigma does not carry the flag of p onto q, or if
  /// the ring-map check on degrees <= 2n fails.
  AnalyticIso(Permutation sigma, std::shared_ptr<const CohomProfile> source,
              std::shared_ptr<const CohomProfile> target);

  const Permutation& sigma() const { return sigma_; }
  const CohomProfile& source() const { return *source_; }
  const CohomProfile& target() const { return *target_; }

  RingElement operator()(const RingElement& a) const;

  /// Checks the four ring-map properties on basis monomials of degree <= max_degree.
  Check check(std::size_t max_degree) const;

 private:
  Permutation sigma_;
  std::shared_ptr<const CohomProfile> source_;
  std::shared_ptr<const CohomProfile> target_;
};

AnalyticIso analytic_iso(const Permutation& sigma, const CohomProfile& p, const CohomProfile& q);

/// A linear map from a subspace, stored as images of its RREF basis rows.
class LinearPiece {
 public:
  LinearPiece() = default;
  /// `sources` must be independent; they span the domain.
  LinearPiece(std::size_t len, const std::vector<Gf2Vector>& sources, const std::vector<Gf2Vector>& images);

  const Subspace& domain() const { return domain_; }
  const std::vector<Gf2Vector>& images() const { return images_; }
  Gf2Vector operator()(const Gf2Vector& x) const;

  friend bool operator==(const LinearPiece&, const LinearPiece&) = default;

 private:
  Subspace domain_;
  std::vector<Gf2Vector> images_;
};

/// A graded map given degree by degree, degrees 0..size()-1.
using GradedMap = std::vector<LinearPiece>;

/// Exhaustively enumerates graded ring isomorphisms R_p -> R_q truncated at
/// degree_cap: degreewise linear bijections with f(ab) = f(a) f(b) whenever
/// deg a + deg b <= degree_cap. Tiny instances only (r <= 2, n <= 3,
/// degree_cap <= 2n); throws BudgetExceeded otherwise.
std::vector<GradedMap> brute_graded_isos(const CohomProfile& p, const CohomProfile& q, std::size_t degree_cap);

/// The permutation sigma with f = sum sigma t^i on every covered degree, if any.
std::optional<Permutation> permutation_inducing(const GradedMap& f, std::size_t ambient_len);

}  // namespace z2ring
