#include "z2ring/gf2.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <utility>

#include "z2ring/errors.hpp"

namespace z2ring {

namespace {

std::size_t word_count(std::size_t len) { return (len + Gf2Vector::kWordBits - 1) / Gf2Vector::kWordBits; }

}  // namespace

// ---------------------------------------------------------------------------
// Gf2Vector

Gf2Vector::Gf2Vector(std::size_t len) : len_(len), words_(word_count(len), 0) {}

Gf2Vector Gf2Vector::from_string(std::string_view bits) {
  Gf2Vector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw ParseError("invalid bit character '" + std::string(1, bits[i]) + "' in \"" +
                       std::string(bits) + "\"");
    }
  }
  return v;
}

Gf2Vector Gf2Vector::ones(std::size_t len) {
  Gf2Vector v(len);
  for (auto& w : v.words_) w = ~std::uint64_t{0};
  if (len % kWordBits != 0) v.words_.back() &= (std::uint64_t{1} << (len % kWordBits)) - 1;
  return v;
}

Gf2Vector Gf2Vector::unit(std::size_t len, std::size_t i) {
  if (i >= len) throw InvalidArgument("unit vector index out of range");
  Gf2Vector v(len);
  v.set(i);
  return v;
}

Gf2Vector Gf2Vector::from_bits(std::size_t len, std::uint64_t bits) {
  Gf2Vector v(len);
  if (!v.words_.empty()) {
    if (len < kWordBits) bits &= (std::uint64_t{1} << len) - 1;
    v.words_[0] = bits;
  }
  return v;
}

void Gf2Vector::set(std::size_t i, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= mask;
  } else {
    words_[i / kWordBits] &= ~mask;
  }
}

std::size_t Gf2Vector::weight() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool Gf2Vector::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool Gf2Vector::is_ones() const { return *this == ones(len_); }

std::size_t Gf2Vector::first_set() const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] != 0) return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
  }
  return len_;
}

void Gf2Vector::check_same_length(const Gf2Vector& other) const {
  if (len_ != other.len_) {
    throw DimensionMismatch("vector lengths differ: " + std::to_string(len_) + " vs " +
                            std::to_string(other.len_));
  }
}

bool Gf2Vector::dot(const Gf2Vector& other) const {
  check_same_length(other);
  std::uint64_t acc = 0;
  for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & other.words_[k];
  return (std::popcount(acc) & 1) != 0;
}

Gf2Vector Gf2Vector::hadamard(const Gf2Vector& other) const {
  check_same_length(other);
  Gf2Vector out(*this);
  for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] &= other.words_[k];
  return out;
}

Gf2Vector& Gf2Vector::operator+=(const Gf2Vector& other) {
  check_same_length(other);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

std::string Gf2Vector::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

std::strong_ordering operator<=>(const Gf2Vector& a, const Gf2Vector& b) {
  if (a.len_ != b.len_) return a.len_ <=> b.len_;
  for (std::size_t k = 0; k < a.words_.size(); ++k) {
    const std::uint64_t diff = a.words_[k] ^ b.words_[k];
    if (diff == 0) continue;
    // The lowest differing bit is the most significant coordinate.
    const std::uint64_t low = diff & (~diff + 1);
    return (a.words_[k] & low) ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Gf2Vector& v) { return os << v.to_string(); }

// ---------------------------------------------------------------------------
// Gf2Matrix

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, Gf2Vector(cols)) {}

Gf2Matrix::Gf2Matrix(std::vector<Gf2Vector> rows, std::size_t cols) : cols_(cols), rows_(std::move(rows)) {
  if (!rows_.empty()) cols_ = rows_.front().size();
  for (const auto& r : rows_) {
    if (r.size() != cols_) throw DimensionMismatch("matrix rows have different lengths");
  }
}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

Gf2Matrix Gf2Matrix::from_strings(const std::vector<std::string>& rows) {
  std::vector<Gf2Vector> parsed;
  parsed.reserve(rows.size());
  for (const auto& s : rows) parsed.push_back(Gf2Vector::from_string(s));
  return Gf2Matrix(std::move(parsed));
}

Gf2Vector Gf2Matrix::column(std::size_t c) const {
  Gf2Vector v(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    if (get(r, c)) v.set(r);
  }
  return v;
}

std::vector<Gf2Vector> Gf2Matrix::columns() const {
  std::vector<Gf2Vector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

Gf2Matrix Gf2Matrix::from_columns(const std::vector<Gf2Vector>& cols, std::size_t rows) {
  Gf2Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionMismatch("column length does not match row count");
    for (std::size_t r = 0; r < rows; ++r) {
      if (cols[c].get(r)) m.set(r, c);
    }
  }
  return m;
}

Gf2Matrix Gf2Matrix::transpose() const { return from_columns(rows_, cols_); }

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& rhs) const {
  if (cols_ != rhs.rows()) throw DimensionMismatch("matrix product shapes do not fit");
  Gf2Matrix out(rows(), rhs.cols());
  for (std::size_t r = 0; r < rows(); ++r) {
    Gf2Vector acc(rhs.cols());
    for (std::size_t k = 0; k < cols_; ++k) {
      if (get(r, k)) acc += rhs.row(k);
    }
    out.rows_[r] = std::move(acc);
  }
  return out;
}

Gf2Vector Gf2Matrix::apply(const Gf2Vector& x) const {
  if (x.size() != cols_) throw DimensionMismatch("matrix-vector shapes do not fit");
  Gf2Vector out(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    if (rows_[r].dot(x)) out.set(r);
  }
  return out;
}

RrefResult Gf2Matrix::rref() const { return z2ring::rref(*this); }

std::size_t Gf2Matrix::rank() const { return z2ring::rref(*this).rank; }

bool Gf2Matrix::is_identity() const { return rows() == cols_ && *this == identity(cols_); }

bool Gf2Matrix::is_permutation_matrix() const {
  if (rows() != cols_) return false;
  std::vector<bool> seen(cols_, false);
  for (const auto& r : rows_) {
    if (r.weight() != 1) return false;
    const std::size_t c = r.first_set();
    if (seen[c]) return false;
    seen[c] = true;
  }
  return true;
}

Gf2Matrix Gf2Matrix::vstack(const Gf2Matrix& top, const Gf2Matrix& bottom) {
  if (top.cols() != bottom.cols()) throw DimensionMismatch("vstack: column counts differ");
  std::vector<Gf2Vector> rows = top.rows_;
  rows.insert(rows.end(), bottom.rows_.begin(), bottom.rows_.end());
  return Gf2Matrix(std::move(rows), top.cols());
}

Gf2Matrix Gf2Matrix::hstack(const Gf2Matrix& left, const Gf2Matrix& right) {
  if (left.rows() != right.rows()) throw DimensionMismatch("hstack: row counts differ");
  Gf2Matrix out(left.rows(), left.cols() + right.cols());
  for (std::size_t r = 0; r < left.rows(); ++r) {
    for (std::size_t c = 0; c < left.cols(); ++c) {
      if (left.get(r, c)) out.set(r, c);
    }
    for (std::size_t c = 0; c < right.cols(); ++c) {
      if (right.get(r, c)) out.set(r, left.cols() + c);
    }
  }
  return out;
}

Gf2Matrix Gf2Matrix::block_diagonal(const std::vector<Gf2Matrix>& blocks) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Gf2Matrix out(rows, cols);
  std::size_t r0 = 0;
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) {
        if (b.get(r, c)) out.set(r0 + r, c0 + c);
      }
    }
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

std::vector<std::string> Gf2Matrix::to_strings() const {
  std::vector<std::string> out;
  out.reserve(rows());
  for (const auto& r : rows_) out.push_back(r.to_string());
  return out;
}

std::strong_ordering operator<=>(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (auto c = a.rows() <=> b.rows(); c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (auto c = a.rows_[r] <=> b.rows_[r]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Gf2Matrix& m) {
  for (const auto& r : m.row_vectors()) os << r << '\n';
  return os;
}

// ---------------------------------------------------------------------------
// Free functions

RrefResult rref(const Gf2Matrix& m) {
  std::vector<Gf2Vector> rows = m.row_vectors();
  RrefResult result;
  std::size_t next = 0;
  for (std::size_t c = 0; c < m.cols() && next < rows.size(); ++c) {
    std::size_t p = next;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[next], rows[p]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && rows[r].get(c)) rows[r] += rows[next];
    }
    result.pivots.push_back(c);
    ++next;
  }
  rows.resize(next);
  result.rank = next;
  result.reduced = Gf2Matrix(std::move(rows), m.cols());
  return result;
}

bool in_span(const Gf2Matrix& basis, const Gf2Vector& x) {
  if (basis.cols() != x.size()) throw DimensionMismatch("in_span: basis and vector lengths differ");
  const RrefResult red = rref(basis);
  Gf2Vector residue = x;
  for (std::size_t k = 0; k < red.rank; ++k) {
    if (residue.get(red.pivots[k])) residue += red.reduced.row(k);
  }
  return residue.is_zero();
}

Gf2Matrix invert(const Gf2Matrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw DimensionMismatch("invert: matrix is not square");
  const RrefResult red = rref(Gf2Matrix::hstack(m, Gf2Matrix::identity(n)));
  if (red.rank < n || red.pivots[n - 1] != n - 1) throw SingularMatrix("invert: matrix is singular");
  Gf2Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (red.reduced.get(r, n + c)) inv.set(r, c);
    }
  }
  return inv;
}

Gf2Matrix kernel(const Gf2Matrix& m) {
  const RrefResult red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<Gf2Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Gf2Vector v(m.cols());
    v.set(free);
    for (std::size_t k = 0; k < red.rank; ++k) {
      if (red.reduced.get(k, free)) v.set(red.pivots[k]);
    }
    basis.push_back(std::move(v));
  }
  return Gf2Matrix(std::move(basis), m.cols());
}

Gf2Matrix read_matrix(std::istream& in) {
  std::vector<Gf2Vector> rows;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (!line.empty() && line.front() == '#') continue;
    if (line.empty()) {
      if (rows.empty()) continue;
      break;
    }
    rows.push_back(Gf2Vector::from_string(line));
    if (rows.back().size() != rows.front().size()) throw ParseError("matrix rows have different lengths");
  }
  if (rows.empty()) throw ParseError("no matrix rows found");
  return Gf2Matrix(std::move(rows));
}

void write_matrix(std::ostream& out, const Gf2Matrix& m) {
  for (const auto& r : m.row_vectors()) out << r.to_string() << '\n';
}

}  // namespace z2ring
