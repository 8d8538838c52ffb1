#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "z2ring/gf2.hpp"
#include "z2ring/subspace.hpp"

namespace z2ring {

/// A bijection of coordinate indices. Acting on a vector, coordinate i moves
/// to position (*this)(i); acting on a matrix, row i moves to row (*this)(i).
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidArgument unless `images` is a bijection of 0..size-1.
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t n);
  /// Swaps positions i and j.
  static Permutation transposition(std::size_t n, std::size_t i, std::size_t j);
  static Permutation random(std::size_t n, std::mt19937_64& rng);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// (this o other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;

  Gf2Vector apply(const Gf2Vector& x) const;
  Gf2Matrix apply_rows(const Gf2Matrix& m) const;
  Subspace apply(const Subspace& s) const;
  /// The permutation matrix P with P x = apply(x).
  Gf2Matrix matrix() const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

/// Coordinate relabeling of x by sigma.
Gf2Vector apply_permutation(const Permutation& sigma, const Gf2Vector& x);

}  // namespace z2ring
