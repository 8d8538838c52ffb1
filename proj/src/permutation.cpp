#include "z2ring/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "z2ring/errors.hpp"

namespace z2ring {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto i : images_) {
    if (i >= images_.size() || seen[i]) throw InvalidArgument("Permutation: images do not form a bijection");
    seen[i] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{0});
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::transposition(std::size_t n, std::size_t i, std::size_t j) {
  Permutation p = identity(n);
  std::swap(p.images_.at(i), p.images_.at(j));
  return p;
}

Permutation Permutation::random(std::size_t n, std::mt19937_64& rng) {
  Permutation p = identity(n);
  std::shuffle(p.images_.begin(), p.images_.end(), rng);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p = identity(size());
  for (std::size_t i = 0; i < size(); ++i) p.images_[images_[i]] = i;
  return p;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw DimensionMismatch("compose: permutation sizes differ");
  Permutation p = identity(size());
  for (std::size_t i = 0; i < size(); ++i) p.images_[i] = images_[other.images_[i]];
  return p;
}

Gf2Vector Permutation::apply(const Gf2Vector& x) const {
  if (x.size() != size()) throw DimensionMismatch("apply: permutation and vector sizes differ");
  Gf2Vector out(x.size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (x.get(i)) out.set(images_[i]);
  }
  return out;
}

Gf2Matrix Permutation::apply_rows(const Gf2Matrix& m) const {
  if (m.rows() != size()) throw DimensionMismatch("apply_rows: permutation and row count differ");
  std::vector<Gf2Vector> rows(m.rows());
  for (std::size_t i = 0; i < size(); ++i) rows[images_[i]] = m.row(i);
  return Gf2Matrix(std::move(rows), m.cols());
}

Subspace Permutation::apply(const Subspace& s) const {
  std::vector<Gf2Vector> gens;
  gens.reserve(s.dim());
  for (const auto& b : s.basis().row_vectors()) gens.push_back(apply(b));
  return Subspace::span(s.ambient_len(), gens);
}

Gf2Matrix Permutation::matrix() const {
  Gf2Matrix m(size(), size());
  for (std::size_t i = 0; i < size(); ++i) m.set(images_[i], i);
  return m;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < size(); ++i) os << (i ? "," : "") << images_[i];
  os << ']';
  return os.str();
}

Gf2Vector apply_permutation(const Permutation& sigma, const Gf2Vector& x) { return sigma.apply(x); }

}  // namespace z2ring
