#pragma once

// Algebraic model of the equivariant cohomology ring of an involution with
// 2r isolated fixed points on a closed n-manifold:
//
//   R = V_0 + V_1 t + ... + V_{n-1} t^{n-1} + GF(2)^2r (t^n + t^{n+1} + ...)
//
// sitting inside GF(2)^2r[t], with multiplication (u t^a)(v t^b) = (u o v) t^(a+b).

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "z2ring/gf2.hpp"
#include "z2ring/subspace.hpp"

namespace z2ring {

struct CohomProfile {
  std::size_t n = 0;  ///< manifold dimension
  std::size_t r = 0;  ///< half the number of fixed points
  std::vector<std::size_t> betti;  ///< b_0 .. b_n
  std::vector<Subspace> filtration;  ///< V_0 .. V_{n-1}; degrees >= n are implicit

  std::size_t ambient_len() const { return 2 * r; }

  /// The coefficient space in degree d: V_d for d < n, GF(2)^2r otherwise.
  Subspace degree_space(std::size_t d) const;

  friend bool operator==(const CohomProfile&, const CohomProfile&) = default;
};

enum class ProfileClause {
  kShape,              ///< n, r positive; list lengths and ambient lengths fit
  kBettiEndpoints,     ///< b_0 = b_n = 1
  kBettiSymmetry,      ///< b_i = b_{n-i}
  kBettiSum,           ///< sum b_i = 2r
  kFiltrationDims,     ///< dim V_i = b_0 + ... + b_i
  kUnitBottom,         ///< V_0 = span{all-ones}
  kNested,             ///< V_i inside V_{i+1}
  kEvenContainment,    ///< V_i inside V_2r
  kEvenTop,            ///< V_{n-1} = V_2r
  kProductClosure,     ///< V_i o V_j inside V_{i+j} for i + j <= n-1
};

std::string clause_name(ProfileClause clause);

struct ProfileViolation {
  ProfileClause clause;
  std::string detail;
};

/// Every violated clause, in a fixed order; empty means the profile is valid.
std::vector<ProfileViolation> validate_profile(const CohomProfile& p);
inline bool is_valid_profile(const CohomProfile& p) { return validate_profile(p).empty(); }

/// Throws InvalidArgument listing the violations if `p` is invalid.
void require_valid_profile(const CohomProfile& p);

/// Dimensions of the graded pieces in degrees 0..max_degree.
std::vector<std::size_t> ring_dimensions(const CohomProfile& p, std::size_t max_degree);

struct ClosedIndex {
  std::size_t index = 0;
  std::size_t dim = 0;
  friend bool operator==(const ClosedIndex&, const ClosedIndex&) = default;
};

/// Largest i such that V_i o V_i lies in V_2r.
ClosedIndex largest_closed_index(const CohomProfile& p);

/// The surface case: betti (1, 2r-2, 1), V_0 = span{1}, V_1 = V_2r.
CohomProfile standard_profile_n2(std::size_t r);

/// The n = 3 profile whose middle space is `middle`; betti (1, r-1, r-1, 1).
CohomProfile profile_from_code(std::size_t n, std::size_t r, const Subspace& middle);

/// Polynomial over Z_2 given by the degrees carrying coefficient 1.
struct IndexPolynomial {
  std::set<std::size_t> support;

  bool is_zero() const { return support.empty(); }
  std::string to_string() const;
  friend bool operator==(const IndexPolynomial&, const IndexPolynomial&) = default;
};

/// A finitely supported element of GF(2)^2r[t] tied to a profile.
///
/// Zero coefficients are never stored. An element is valid when every
/// coefficient in degree d < n lies in V_d.
class RingElement {
 public:
  explicit RingElement(std::shared_ptr<const CohomProfile> profile);

  static RingElement monomial(std::shared_ptr<const CohomProfile> profile, const Gf2Vector& v, std::size_t degree);
  static RingElement one(std::shared_ptr<const CohomProfile> profile);

  const CohomProfile& profile() const { return *profile_; }
  const std::shared_ptr<const CohomProfile>& profile_ptr() const { return profile_; }
  const std::map<std::size_t, Gf2Vector>& terms() const { return terms_; }

  /// Coefficient in degree d (zero vector if absent).
  Gf2Vector coefficient(std::size_t degree) const;
  void add_term(const Gf2Vector& v, std::size_t degree);

  bool is_zero() const { return terms_.empty(); }
  bool is_valid() const;
  std::size_t max_degree() const;

  RingElement& operator+=(const RingElement& other);
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }

  friend bool operator==(const RingElement& a, const RingElement& b) { return a.terms_ == b.terms_; }

 private:
  std::shared_ptr<const CohomProfile> profile_;
  std::map<std::size_t, Gf2Vector> terms_;
};

/// Bilinear extension of (u t^a)(v t^b) = (u o v) t^(a+b). Throws NotInRing on
/// an invalid operand and InvalidArgument on operands from different profiles.
RingElement multiply(const RingElement& a, const RingElement& b);

/// Sum over fixed points of the restriction divided by t^n: each term v t^d
/// contributes (|v| mod 2) t^(d-n). Throws NotInRing if `a` is invalid.
IndexPolynomial index(const RingElement& a);

}  // namespace z2ring
