#include "z2ring/classify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <thread>

#include "z2ring/canonical.hpp"
#include "z2ring/errors.hpp"
#include "z2ring/hadamard.hpp"
#include "z2ring/union_find.hpp"

namespace z2ring {

bool is_isotropic_matrix(const Gf2Matrix& a) {
  if (a.cols() == 0 || a.rows() != 2 * a.cols()) {
    throw DimensionMismatch("expected a 2r x r matrix, got " + std::to_string(a.rows()) + " x " +
                            std::to_string(a.cols()));
  }
  if (a.rank() != a.cols()) return false;
  const auto cols = a.columns();
  for (std::size_t i = 0; i < cols.size(); ++i) {
    for (std::size_t j = i; j < cols.size(); ++j) {
      if (cols[i].dot(cols[j])) return false;
    }
  }
  return true;
}

IsotropicMatrix::IsotropicMatrix(Gf2Matrix a) : a_(std::move(a)) {
  if (!is_isotropic_matrix(a_)) throw InvalidArgument("matrix is not a member of M_r");
}

Gf2Matrix apply_moves(const Gf2Matrix& a, const Permutation& sigma, const Gf2Matrix& lambda) {
  if (lambda.rows() != a.cols() || lambda.cols() != a.cols()) {
    throw DimensionMismatch("apply_moves: lambda must be r x r");
  }
  return sigma.apply_rows(a) * lambda;
}

Gf2Matrix random_invertible(std::size_t r, std::mt19937_64& rng) {
  for (;;) {
    std::vector<Gf2Vector> rows;
    for (std::size_t i = 0; i < r; ++i) rows.push_back(Gf2Vector::from_bits(r, rng()));
    Gf2Matrix m(std::move(rows), r);
    if (m.rank() == r) return m;
  }
}

bool is_orthogonal(const Gf2Matrix& p) {
  return p.rows() == p.cols() && (p * p.transpose()).is_identity();
}

StandardForm standard_form(const IsotropicMatrix& a) {
  const std::size_t r = a.r();
  const Gf2Matrix& m = a.matrix();
  std::vector<std::size_t> top;
  std::vector<std::size_t> rest;
  Subspace chosen(r);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (top.size() < r && !chosen.contains(m.row(i))) {
      chosen = chosen.sum(Subspace::span(r, {m.row(i)}));
      top.push_back(i);
    } else {
      rest.push_back(i);
    }
  }
  std::vector<std::size_t> images(m.rows());
  for (std::size_t k = 0; k < top.size(); ++k) images[top[k]] = k;
  for (std::size_t k = 0; k < rest.size(); ++k) images[rest[k]] = r + k;
  StandardForm out;
  out.sigma = Permutation(std::move(images));
  const Gf2Matrix moved = out.sigma.apply_rows(m);
  const Gf2Matrix head(std::vector<Gf2Vector>(moved.row_vectors().begin(), moved.row_vectors().begin() + r), r);
  out.lambda = invert(head);
  const Gf2Matrix reduced = moved * out.lambda;
  out.p = Gf2Matrix(std::vector<Gf2Vector>(reduced.row_vectors().begin() + r, reduced.row_vectors().end()), r);
  if (!is_orthogonal(out.p)) throw Error("standard_form: P is not orthogonal");
  return out;
}

Gf2Matrix stack_identity_over(const Gf2Matrix& p) {
  if (p.rows() != p.cols()) throw DimensionMismatch("stack_identity_over: P must be square");
  return Gf2Matrix::vstack(Gf2Matrix::identity(p.rows()), p);
}

Subspace product_span(const IsotropicMatrix& a) { return product_span(a.columns(), 2 * a.r()); }

std::vector<Block> decompose(const IsotropicMatrix& a) {
  const std::size_t len = 2 * a.r();
  const Subspace span = a.column_span();
  const auto basis = span.basis().row_vectors();
  UnionFind uf(len);
  for (const auto& b : basis) {
    const std::size_t head = b.first_set();
    for (std::size_t c = head + 1; c < len; ++c) {
      if (b.get(c)) uf.unite(head, c);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t c = 0; c < len; ++c) by_root[uf.find(c)].push_back(c);
  std::vector<std::vector<std::size_t>> components;
  for (auto& [root, coords] : by_root) components.push_back(std::move(coords));
  std::sort(components.begin(), components.end());

  std::vector<Block> blocks;
  std::size_t total_rank = 0;
  for (const auto& coords : components) {
    std::vector<Gf2Vector> cols;
    for (const auto& b : basis) {
      if (uf.find(b.first_set()) != uf.find(coords.front())) continue;
      Gf2Vector v(coords.size());
      for (std::size_t k = 0; k < coords.size(); ++k) {
        if (b.get(coords[k])) v.set(k);
      }
      cols.push_back(std::move(v));
    }
    if (coords.size() != 2 * cols.size()) throw Error("decompose: component is not 2k x k");
    total_rank += cols.size();
    blocks.push_back({coords, IsotropicMatrix(Gf2Matrix::from_columns(cols, coords.size()))});
  }
  if (total_rank != a.r()) throw Error("decompose: block ranks do not add up to r");
  return blocks;
}

bool is_irreducible(const IsotropicMatrix& a) {
  if (product_span(a).dim() == 2 * a.r() - 1) return true;
  return decompose(a).size() == 1;
}

IsotropicMatrix direct_sum(const std::vector<IsotropicMatrix>& parts) {
  std::vector<Gf2Matrix> blocks;
  for (const auto& p : parts) blocks.push_back(p.matrix());
  return IsotropicMatrix(Gf2Matrix::block_diagonal(blocks));
}

Gf2Matrix gen_A(std::size_t l) {
  if (l < 4) throw InvalidArgument("gen_A: l must be at least 4");
  Gf2Matrix a(2 * l - 1, l - 1);
  // 1-based rows and columns as in the usual display, shifted on write.
  auto put = [&](std::size_t row, std::size_t col) { a.set(row - 1, col - 1); };
  put(1, 1);
  for (std::size_t j = 2; j <= l - 1; ++j) {
    put(j, 1);
    put(j, l + 1 - j);
  }
  for (std::size_t c = 1; c <= l - 1; ++c) put(l, c);
  for (std::size_t c = 2; c <= l - 1; ++c) put(l + 1, c);
  for (std::size_t j = 1; j <= l - 2; ++j) put(l + 1 + j, j + 1);
  return a;
}

namespace {

void require_even_family_param(std::size_t l, const char* what) {
  if (l < 4 || l % 2 != 0) throw InvalidArgument(std::string(what) + " must be even and at least 4");
}

}  // namespace

IsotropicMatrix gen_B(std::size_t l) {
  require_even_family_param(l, "gen_B: l");
  const Gf2Matrix a = gen_A(l);
  Gf2Matrix b(2 * l, l);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) b.set(i, j, a.get(i, j));
    b.set(i, l - 1);
  }
  b.set(2 * l - 1, l - 1);
  return IsotropicMatrix(std::move(b));
}

IsotropicMatrix gen_C(std::size_t s, std::size_t t) {
  require_even_family_param(s, "gen_C: s");
  require_even_family_param(t, "gen_C: t");
  const Gf2Matrix as = gen_A(s);
  const Gf2Matrix at = gen_A(t);
  const std::size_t r = s + t - 1;
  Gf2Matrix c(2 * r, r);
  for (std::size_t i = 0; i < as.rows(); ++i) {
    for (std::size_t j = 0; j < as.cols(); ++j) c.set(i, j, as.get(i, j));
    c.set(i, r - 1);
  }
  for (std::size_t i = 0; i < at.rows(); ++i) {
    for (std::size_t j = 0; j < at.cols(); ++j) c.set(as.rows() + i, as.cols() + j, at.get(i, j));
    c.set(as.rows() + i, r - 1);
  }
  return IsotropicMatrix(std::move(c));
}

IsotropicMatrix stacked_identity(std::size_t r) {
  if (r == 0) throw InvalidArgument("stacked_identity: r must be positive");
  return IsotropicMatrix(stack_identity_over(Gf2Matrix::identity(r)));
}

Gf2Matrix canonical_code(const IsotropicMatrix& a) { return canonical_code(a.column_span()); }

// ---------------------------------------------------------------------------
// The orthogonal group and its S_r x S_r double cosets

namespace {

void require_orthogonal_budget(std::size_t r, std::size_t max_r, const char* what) {
  if (r == 0) throw InvalidArgument(std::string(what) + ": r must be positive");
  if (r > kOrthogonalHardLimit) {
    throw BudgetExceeded(std::string(what) + ": r = " + std::to_string(r) + " is past the hard limit of " +
                         std::to_string(kOrthogonalHardLimit));
  }
  if (r > max_r) {
    throw BudgetExceeded(std::string(what) + ": r = " + std::to_string(r) + " exceeds the budget of " +
                         std::to_string(max_r));
  }
}

using RowMasks = std::vector<std::uint32_t>;

RowMasks unpack_rows(std::uint64_t bits, std::size_t r) {
  RowMasks rows(r);
  const std::uint64_t mask = (std::uint64_t{1} << r) - 1;
  for (std::size_t i = 0; i < r; ++i) rows[i] = static_cast<std::uint32_t>((bits >> (i * r)) & mask);
  return rows;
}

std::uint64_t pack_rows(const RowMasks& rows, std::size_t r) {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < r; ++i) bits |= std::uint64_t{rows[i]} << (i * r);
  return bits;
}

std::uint32_t swap_bits(std::uint32_t x, std::size_t j) {
  const std::uint32_t a = (x >> j) & 1U;
  const std::uint32_t b = (x >> (j + 1)) & 1U;
  if (a != b) x ^= (3U << j);
  return x;
}

}  // namespace

void for_each_orthogonal(std::size_t r, const std::function<void(const Gf2Matrix&)>& visit, std::size_t max_r) {
  require_orthogonal_budget(r, max_r, "enumerate_orthogonal");
  std::vector<std::uint32_t> odd;
  for (std::uint32_t v = 1; v < (1U << r); ++v) {
    if (std::popcount(v) % 2 == 1) odd.push_back(v);
  }
  std::vector<std::uint32_t> cols;
  std::function<void()> extend = [&]() {
    if (cols.size() == r) {
      Gf2Matrix p(r, r);
      for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t i = 0; i < r; ++i) {
          if ((cols[j] >> i) & 1U) p.set(i, j);
        }
      }
      visit(p);
      return;
    }
    for (auto v : odd) {
      const bool fits = std::all_of(cols.begin(), cols.end(), [&](std::uint32_t c) { return std::popcount(c & v) % 2 == 0; });
      if (!fits) continue;
      cols.push_back(v);
      extend();
      cols.pop_back();
    }
  };
  extend();
}

std::vector<Gf2Matrix> enumerate_orthogonal(std::size_t r, std::size_t max_r) {
  std::vector<Gf2Matrix> out;
  for_each_orthogonal(r, [&](const Gf2Matrix& p) { out.push_back(p); }, max_r);
  return out;
}

std::uint64_t pack_square(const Gf2Matrix& m) {
  const std::size_t r = m.rows();
  if (m.cols() != r || r > 8) throw DimensionMismatch("pack_square: need a square matrix with r <= 8");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (m.get(i, j)) bits |= std::uint64_t{1} << (i * r + j);
    }
  }
  return bits;
}

Gf2Matrix unpack_square(std::uint64_t bits, std::size_t r) {
  if (r > 8) throw DimensionMismatch("unpack_square: r must be at most 8");
  Gf2Matrix m(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if ((bits >> (i * r + j)) & 1U) m.set(i, j);
    }
  }
  return m;
}

std::vector<Gf2Matrix> double_coset_representatives(std::size_t r, std::size_t max_r) {
  std::vector<std::uint64_t> elements;
  for_each_orthogonal(r, [&](const Gf2Matrix& p) { elements.push_back(pack_square(p)); }, max_r);
  std::sort(elements.begin(), elements.end());
  auto index_of = [&](std::uint64_t x) {
    return static_cast<std::size_t>(std::lower_bound(elements.begin(), elements.end(), x) - elements.begin());
  };
  // Adjacent row and column transpositions generate S_r x S_r.
  std::vector<bool> seen(elements.size(), false);
  std::vector<Gf2Matrix> reps;
  std::vector<std::size_t> queue;
  for (std::size_t start = 0; start < elements.size(); ++start) {
    if (seen[start]) continue;
    reps.push_back(unpack_square(elements[start], r));
    seen[start] = true;
    queue.assign(1, start);
    while (!queue.empty()) {
      const std::size_t cur = queue.back();
      queue.pop_back();
      const RowMasks rows = unpack_rows(elements[cur], r);
      for (std::size_t k = 0; k + 1 < r; ++k) {
        RowMasks row_swapped = rows;
        std::swap(row_swapped[k], row_swapped[k + 1]);
        RowMasks col_swapped = rows;
        for (auto& row : col_swapped) row = swap_bits(row, k);
        for (const auto& next : {row_swapped, col_swapped}) {
          const std::size_t idx = index_of(pack_rows(next, r));
          if (idx >= elements.size() || elements[idx] != pack_rows(next, r)) {
            throw Error("double_coset_representatives: orbit left the orthogonal group");
          }
          if (!seen[idx]) {
            seen[idx] = true;
            queue.push_back(idx);
          }
        }
      }
    }
  }
  return reps;
}

std::size_t double_cosets_orthogonal(std::size_t r, std::size_t max_r) {
  return double_coset_representatives(r, max_r).size();
}

std::vector<Gf2Vector> double_coset_key(const Gf2Matrix& p) {
  const std::size_t r = p.rows();
  if (p.cols() != r || r == 0 || r > 8) throw DimensionMismatch("double_coset_key: need square P with 1 <= r <= 8");
  std::vector<std::size_t> order(r);
  for (std::size_t i = 0; i < r; ++i) order[i] = i;
  std::vector<Gf2Vector> best;
  do {
    std::vector<Gf2Vector> cols(r, Gf2Vector(r));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        if (p.get(order[i], j)) cols[j].set(i);
      }
    }
    std::sort(cols.begin(), cols.end());
    if (best.empty() || cols < best) best = std::move(cols);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

// ---------------------------------------------------------------------------
// Classification

Fingerprint fingerprint(const IsotropicMatrix& a) {
  Fingerprint f;
  f.dim_x = product_span(a).dim();
  for (const auto& b : decompose(a)) f.blocks.push_back(b.matrix.r());
  std::sort(f.blocks.begin(), f.blocks.end());
  f.weight_distribution = a.column_span().weight_distribution();
  return f;
}

Classification classify_M(std::size_t r, const ClassifyOptions& options) {
  if (r == 0) throw InvalidArgument("classify_M: r must be positive");
  if (r > kOrthogonalHardLimit) {
    throw BudgetExceeded("classify_M: r = " + std::to_string(r) + " is past the hard limit of " +
                         std::to_string(kOrthogonalHardLimit));
  }
  if (r > options.budget && !options.force) {
    throw BudgetExceeded("classify_M: r = " + std::to_string(r) + " exceeds the budget of " +
                         std::to_string(options.budget) + " (raise --budget or pass --force)");
  }
  const std::vector<Gf2Matrix> reps = double_coset_representatives(r, kOrthogonalHardLimit);
  std::vector<Gf2Matrix> codes(reps.size());
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < reps.size(); i += stride) {
      codes[i] = canonical_code(Subspace::column_space(stack_identity_over(reps[i])));
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, reps.size()));
  if (jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(work, t, jobs);
    for (auto& th : pool) th.join();
  }

  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  Classification out;
  out.r = r;
  out.double_cosets = reps.size();
  for (auto& code : codes) {
    OrbitClass cls;
    cls.representative = IsotropicMatrix(code.transpose());
    cls.fingerprint = fingerprint(cls.representative);
    cls.irreducible = cls.fingerprint.blocks.size() == 1;
    cls.canonical = std::move(code);
    out.classes.push_back(std::move(cls));
  }
  return out;
}

std::optional<std::size_t> find_class(const Classification& c, const IsotropicMatrix& a) {
  if (a.r() != c.r) return std::nullopt;
  const Gf2Matrix code = canonical_code(a);
  for (std::size_t i = 0; i < c.classes.size(); ++i) {
    if (c.classes[i].canonical == code) return i;
  }
  return std::nullopt;
}

nlohmann::json classification_to_json(const Classification& c) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& cls : c.classes) {
    classes.push_back({
        {"canonical", Subspace::row_space(cls.canonical).canonical_rows()},
        {"dim_X", cls.fingerprint.dim_x},
        {"blocks", cls.fingerprint.blocks},
        {"weight_distribution", cls.fingerprint.weight_distribution},
        {"irreducible", cls.irreducible},
    });
  }
  nlohmann::json doc = {
      {"r", c.r},
      {"count", c.count()},
      {"double_cosets", c.double_cosets},
      {"algorithm_version", kAlgorithmVersion},
      {"classes", classes},
  };
  if (auto n = published_count(c.r)) doc["published_count"] = *n;
  if (auto n = published_lower_bound(c.r)) doc["published_lower_bound"] = *n;
  return doc;
}

std::optional<std::size_t> published_count(std::size_t r) {
  static const std::size_t table[] = {1, 1, 1, 2, 2, 3};
  if (r >= 1 && r <= 6) return table[r - 1];
  return std::nullopt;
}

std::optional<std::size_t> published_lower_bound(std::size_t r) {
  static const std::size_t table[] = {4, 6, 7, 9, 12, 16, 20, 25};
  if (r >= 7 && r <= 14) return table[r - 7];
  return std::nullopt;
}

const Gf2Matrix& reference_p1() {
  static const Gf2Matrix p = Gf2Matrix::from_strings({
      "011111",
      "101111",
      "110111",
      "111011",
      "111101",
      "111110",
  });
  return p;
}

const Gf2Matrix& reference_p2() {
  static const Gf2Matrix p = Gf2Matrix::from_strings({
      "011111",
      "110001",
      "101001",
      "100101",
      "100011",
      "111110",
  });
  return p;
}

}  // namespace z2ring
