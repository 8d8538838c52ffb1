#pragma once

// The matrix set M_r of 2r x r rank-r matrices whose columns have pairwise
// even Hadamard overlap, and its orbits under row permutation (S_2r) and
// right multiplication by GL(r, Z_2).
//
// The GL action only changes the basis of the column span, so an orbit is a
// permutation-equivalence class of r-dimensional column spans. Those spans
// are self-dual codes of length 2r, which is what classify_M canonicalizes.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "z2ring/gf2.hpp"
#include "z2ring/permutation.hpp"
#include "z2ring/subspace.hpp"

namespace z2ring {

/// Rank r and every v_i o v_j of even weight. Throws DimensionMismatch unless
/// the shape is 2r x r with r >= 1.
bool is_isotropic_matrix(const Gf2Matrix& a);

class IsotropicMatrix {
 public:
  IsotropicMatrix() = default;
  /// Throws InvalidArgument if `a` is not a member of M_r.
  explicit IsotropicMatrix(Gf2Matrix a);

  std::size_t r() const { return a_.cols(); }
  const Gf2Matrix& matrix() const { return a_; }
  std::vector<Gf2Vector> columns() const { return a_.columns(); }
  Subspace column_span() const { return Subspace::column_space(a_); }

  friend bool operator==(const IsotropicMatrix&, const IsotropicMatrix&) = default;

 private:
  Gf2Matrix a_;
};

/// sigma A lambda: rows moved by sigma, then right multiplication by lambda.
Gf2Matrix apply_moves(const Gf2Matrix& a, const Permutation& sigma, const Gf2Matrix& lambda);

/// Uniform element of GL(r, Z_2) by rejection.
Gf2Matrix random_invertible(std::size_t r, std::mt19937_64& rng);

/// P P^T = I.
bool is_orthogonal(const Gf2Matrix& p);

struct StandardForm {
  Permutation sigma;
  Gf2Matrix lambda;
  Gf2Matrix p;
};

/// sigma A lambda = (I_r; P) with P orthogonal. The first r independent rows
/// of A (in row order) are moved to the top.
StandardForm standard_form(const IsotropicMatrix& a);

/// (I_r; P).
Gf2Matrix stack_identity_over(const Gf2Matrix& p);

/// X(A), the span of all v_i o v_j.
Subspace product_span(const IsotropicMatrix& a);

struct Block {
  std::vector<std::size_t> coordinates;  ///< rows of A covered by this block, ascending
  IsotropicMatrix matrix;
};

/// Finest support-disjoint splitting of the column span, ordered by smallest
/// coordinate. Throws Error if a component has an odd coordinate count or the
/// ranks fail to add up.
std::vector<Block> decompose(const IsotropicMatrix& a);

bool is_irreducible(const IsotropicMatrix& a);

/// Block diagonal sum of the inputs.
IsotropicMatrix direct_sum(const std::vector<IsotropicMatrix>& parts);

/// The (2l-1) x (l-1) matrix A(l); requires l >= 4.
Gf2Matrix gen_A(std::size_t l);
/// (A(l) 1; 0 1), 2l x l; requires even l >= 4.
IsotropicMatrix gen_B(std::size_t l);
/// (A(s) 0 1; 0 A(t) 1), r = s + t - 1; requires even s, t >= 4.
IsotropicMatrix gen_C(std::size_t s, std::size_t t);
/// (I_r; I_r).
IsotropicMatrix stacked_identity(std::size_t r);

/// Canonical RREF basis of the column span.
Gf2Matrix canonical_code(const IsotropicMatrix& a);

/// Largest r for which the orthogonal group is enumerated at all.
inline constexpr std::size_t kOrthogonalHardLimit = 7;

/// Calls `visit` on every P in O(r, Z_2), columns chosen by backtracking.
/// Throws BudgetExceeded for r > max_r or r > kOrthogonalHardLimit.
void for_each_orthogonal(std::size_t r, const std::function<void(const Gf2Matrix&)>& visit,
                         std::size_t max_r = 6);
std::vector<Gf2Matrix> enumerate_orthogonal(std::size_t r, std::size_t max_r = 6);

/// Row-major packing, entry (i, j) at bit i*r + j. Requires r <= 8.
std::uint64_t pack_square(const Gf2Matrix& m);
Gf2Matrix unpack_square(std::uint64_t bits, std::size_t r);

/// One representative per S_r x S_r orbit on O(r, Z_2) (P -> sigma P tau),
/// each the smallest packed value of its orbit, sorted ascending.
std::vector<Gf2Matrix> double_coset_representatives(std::size_t r, std::size_t max_r = 6);
std::size_t double_cosets_orthogonal(std::size_t r, std::size_t max_r = 6);

/// Orbit invariant computed directly: minimum over row permutations of the
/// matrix with its columns sorted. Equal keys iff same double coset. r <= 8.
std::vector<Gf2Vector> double_coset_key(const Gf2Matrix& p);

struct Fingerprint {
  std::size_t dim_x = 0;
  std::vector<std::size_t> blocks;  ///< block ranks, ascending
  std::vector<std::size_t> weight_distribution;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const IsotropicMatrix& a);

struct OrbitClass {
  /// Columns are the canonical basis rows.
  IsotropicMatrix representative;
  Gf2Matrix canonical;
  Fingerprint fingerprint;
  bool irreducible = false;
};

struct ClassifyOptions {
  std::size_t budget = 6;
  bool force = false;
  std::size_t jobs = 1;
};

struct Classification {
  std::size_t r = 0;
  std::size_t double_cosets = 0;
  std::vector<OrbitClass> classes;  ///< sorted by canonical code
  std::size_t count() const { return classes.size(); }
};

/// Throws BudgetExceeded when r exceeds the budget (unless forced) or the
/// hard limit, InvalidArgument when r == 0.
Classification classify_M(std::size_t r, const ClassifyOptions& options = {});

/// Index of the class whose canonical code matches `a`, if any.
std::optional<std::size_t> find_class(const Classification& c, const IsotropicMatrix& a);

/// Version tag baked into cache keys and JSON output.
inline constexpr const char* kAlgorithmVersion = "z2ring-classify-1";

nlohmann::json classification_to_json(const Classification& c);

/// Exact counts 1..6 and lower bounds 7..14 from the literature table.
std::optional<std::size_t> published_count(std::size_t r);
std::optional<std::size_t> published_lower_bound(std::size_t r);

/// The two 6 x 6 orthogonal matrices with equal M_6 orbits but different
/// S_6 x S_6 double cosets.
const Gf2Matrix& reference_p1();
const Gf2Matrix& reference_p2();

}  // namespace z2ring
