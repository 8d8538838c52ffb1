#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "z2ring/gf2.hpp"

namespace z2ring {

/// A linear subspace of GF(2)^n held by its reduced row echelon basis.
///
/// The RREF basis is unique, so two subspaces are equal exactly when their
/// bases are identical.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of GF(2)^ambient_len.
  explicit Subspace(std::size_t ambient_len);

  static Subspace span(std::size_t ambient_len, const std::vector<Gf2Vector>& generators);
  static Subspace row_space(const Gf2Matrix& m);
  static Subspace column_space(const Gf2Matrix& m) { return row_space(m.transpose()); }
  static Subspace full(std::size_t ambient_len);

  std::size_t ambient_len() const { return ambient_len_; }
  std::size_t dim() const { return basis_.rows(); }
  const Gf2Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Gf2Vector& x) const;
  bool is_subspace_of(const Subspace& other) const;

  /// Coordinates of x in the RREF basis; x must be a member.
  std::vector<bool> coordinates(const Gf2Vector& x) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// {x : x . w = 0 for all w in this}.
  Subspace orthogonal_complement() const;

  /// Visits all 2^dim members. Throws BudgetExceeded above `max_dim`.
  void for_each_member(const std::function<void(const Gf2Vector&)>& visit, std::size_t max_dim = 24) const;
  std::vector<Gf2Vector> members(std::size_t max_dim = 20) const;

  /// Count of members per weight 0..ambient_len.
  std::vector<std::size_t> weight_distribution(std::size_t max_dim = 24) const;

  /// RREF basis rows in ascending lexicographic order; the canonical text form.
  std::vector<std::string> canonical_rows() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_len_ == b.ambient_len_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_len_ = 0;
  Gf2Matrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace z2ring
