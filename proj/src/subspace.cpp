#include "z2ring/subspace.hpp"

#include <algorithm>
#include <bit>

#include "z2ring/errors.hpp"

namespace z2ring {

Subspace::Subspace(std::size_t ambient_len) : ambient_len_(ambient_len), basis_(0, ambient_len) {}

Subspace Subspace::span(std::size_t ambient_len, const std::vector<Gf2Vector>& generators) {
  for (const auto& g : generators) {
    if (g.size() != ambient_len) throw DimensionMismatch("span: generator length differs from ambient length");
  }
  return row_space(Gf2Matrix(generators, ambient_len));
}

Subspace Subspace::row_space(const Gf2Matrix& m) {
  RrefResult red = rref(m);
  Subspace s(m.cols());
  s.basis_ = std::move(red.reduced);
  s.pivots_ = std::move(red.pivots);
  return s;
}

Subspace Subspace::full(std::size_t ambient_len) { return row_space(Gf2Matrix::identity(ambient_len)); }

bool Subspace::contains(const Gf2Vector& x) const {
  if (x.size() != ambient_len_) throw DimensionMismatch("contains: vector length differs from ambient length");
  Gf2Vector residue = x;
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    if (residue.get(pivots_[k])) residue += basis_.row(k);
  }
  return residue.is_zero();
}

bool Subspace::is_subspace_of(const Subspace& other) const {
  if (ambient_len_ != other.ambient_len_) return false;
  return std::all_of(basis_.row_vectors().begin(), basis_.row_vectors().end(),
                     [&](const Gf2Vector& b) { return other.contains(b); });
}

std::vector<bool> Subspace::coordinates(const Gf2Vector& x) const {
  if (!contains(x)) throw InvalidArgument("coordinates: vector is not a member of the subspace");
  std::vector<bool> coeff(dim());
  for (std::size_t k = 0; k < pivots_.size(); ++k) coeff[k] = x.get(pivots_[k]);
  return coeff;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_len_ != other.ambient_len_) throw DimensionMismatch("sum: ambient lengths differ");
  return row_space(Gf2Matrix::vstack(basis_, other.basis_));
}

Subspace Subspace::orthogonal_complement() const { return row_space(kernel(basis_)); }

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_len_ != other.ambient_len_) throw DimensionMismatch("intersect: ambient lengths differ");
  return orthogonal_complement().sum(other.orthogonal_complement()).orthogonal_complement();
}

void Subspace::for_each_member(const std::function<void(const Gf2Vector&)>& visit, std::size_t max_dim) const {
  if (dim() > max_dim) {
    throw BudgetExceeded("member enumeration of a " + std::to_string(dim()) + "-dimensional subspace");
  }
  // Gray-code walk: one XOR per member.
  Gf2Vector current(ambient_len_);
  visit(current);
  const std::uint64_t total = std::uint64_t{1} << dim();
  for (std::uint64_t i = 1; i < total; ++i) {
    current += basis_.row(static_cast<std::size_t>(std::countr_zero(i)));
    visit(current);
  }
}

std::vector<Gf2Vector> Subspace::members(std::size_t max_dim) const {
  std::vector<Gf2Vector> out;
  for_each_member([&](const Gf2Vector& v) { out.push_back(v); }, max_dim);
  return out;
}

std::vector<std::size_t> Subspace::weight_distribution(std::size_t max_dim) const {
  std::vector<std::size_t> dist(ambient_len_ + 1, 0);
  for_each_member([&](const Gf2Vector& v) { ++dist[v.weight()]; }, max_dim);
  return dist;
}

std::vector<std::string> Subspace::canonical_rows() const {
  std::vector<Gf2Vector> rows = basis_.row_vectors();
  std::sort(rows.begin(), rows.end());
  std::vector<std::string> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.to_string());
  return out;
}

}  // namespace z2ring
