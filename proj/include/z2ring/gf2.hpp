#pragma once

// Dense bit-packed vectors and matrices over GF(2).
//
// Coordinates are stored least-significant-bit first inside 64-bit words.
// Bits past the logical length are always zero. Ordering is lexicographic on
// the logical coordinate sequence with coordinate 0 most significant, so
// "1000" > "0111".

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace z2ring {

class Gf2Vector {
 public:
  static constexpr std::size_t kWordBits = 64;

  Gf2Vector() = default;
  explicit Gf2Vector(std::size_t len);

  /// Parses a string of '0'/'1' characters.
  static Gf2Vector from_string(std::string_view bits);
  static Gf2Vector zeros(std::size_t len) { return Gf2Vector(len); }
  static Gf2Vector ones(std::size_t len);
  static Gf2Vector unit(std::size_t len, std::size_t i);
  /// Coordinates 0..min(len,64)-1 taken from the low bits of `bits`.
  static Gf2Vector from_bits(std::size_t len, std::uint64_t bits);

  std::size_t size() const { return len_; }
  bool empty() const { return len_ == 0; }

  bool get(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  bool operator[](std::size_t i) const { return get(i); }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits); }

  std::size_t weight() const;
  bool parity() const { return (weight() & 1U) != 0; }
  bool is_zero() const;
  bool is_ones() const;
  /// Index of the first nonzero coordinate, or size() if zero.
  std::size_t first_set() const;

  /// Parity of the overlap, i.e. the standard dot product.
  bool dot(const Gf2Vector& other) const;
  /// Coordinatewise product.
  Gf2Vector hadamard(const Gf2Vector& other) const;

  Gf2Vector& operator+=(const Gf2Vector& other);
  friend Gf2Vector operator+(Gf2Vector a, const Gf2Vector& b) { return a += b; }

  std::span<const std::uint64_t> words() const { return words_; }
  /// Low word; convenient when size() <= 64.
  std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

  std::string to_string() const;

  friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;
  friend std::strong_ordering operator<=>(const Gf2Vector& a, const Gf2Vector& b);

 private:
  void check_same_length(const Gf2Vector& other) const;

  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

std::ostream& operator<<(std::ostream& os, const Gf2Vector& v);

struct RrefResult;

class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);
  /// All rows must share the same length; `cols` is needed when rows is empty.
  explicit Gf2Matrix(std::vector<Gf2Vector> rows, std::size_t cols = 0);

  static Gf2Matrix identity(std::size_t n);
  static Gf2Matrix from_strings(const std::vector<std::string>& rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }

  const Gf2Vector& row(std::size_t r) const { return rows_[r]; }
  const std::vector<Gf2Vector>& row_vectors() const { return rows_; }
  Gf2Vector column(std::size_t c) const;
  std::vector<Gf2Vector> columns() const;
  static Gf2Matrix from_columns(const std::vector<Gf2Vector>& cols, std::size_t rows);

  Gf2Matrix transpose() const;
  Gf2Matrix operator*(const Gf2Matrix& rhs) const;
  /// Matrix-vector product M x.
  Gf2Vector apply(const Gf2Vector& x) const;

  std::size_t rank() const;
  RrefResult rref() const;
  bool is_identity() const;
  bool is_permutation_matrix() const;

  /// Rows of `top` followed by rows of `bottom`.
  static Gf2Matrix vstack(const Gf2Matrix& top, const Gf2Matrix& bottom);
  static Gf2Matrix hstack(const Gf2Matrix& left, const Gf2Matrix& right);
  static Gf2Matrix block_diagonal(const std::vector<Gf2Matrix>& blocks);

  std::vector<std::string> to_strings() const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;
  friend std::strong_ordering operator<=>(const Gf2Matrix& a, const Gf2Matrix& b);

 private:
  std::size_t cols_ = 0;
  std::vector<Gf2Vector> rows_;
};

std::ostream& operator<<(std::ostream& os, const Gf2Matrix& m);

struct RrefResult {
  Gf2Matrix reduced;  ///< Nonzero rows only, pivot columns increasing.
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Number of 1-coordinates.
inline std::size_t weight(const Gf2Vector& x) { return x.weight(); }

RrefResult rref(const Gf2Matrix& m);

/// True iff x is a linear combination of the rows of `basis`.
bool in_span(const Gf2Matrix& basis, const Gf2Vector& x);

/// Throws SingularMatrix if M is not invertible, DimensionMismatch if not square.
Gf2Matrix invert(const Gf2Matrix& m);

/// Basis (as rows) of {x : M x = 0}; has cols - rank rows.
Gf2Matrix kernel(const Gf2Matrix& m);

/// Shared text format: one row per line of '0'/'1'; a blank line or EOF ends
/// the matrix. Lines starting with '#' are skipped.
Gf2Matrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const Gf2Matrix& m);

}  // namespace z2ring
