#include "z2ring/equivalence.hpp"

#include <algorithm>
#include <map>

#include "z2ring/errors.hpp"
#include "z2ring/hadamard.hpp"

namespace z2ring {

namespace {

void require_even_square(const Gf2Matrix& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0 || m.rows() == 0) {
    throw DimensionMismatch("expected a square matrix of even size 2r");
  }
}

bool maps_even_into_even(const Gf2Matrix& m, const Subspace& even) {
  for (const auto& b : even.basis().row_vectors()) {
    if (m.apply(b).parity()) return false;
  }
  return true;
}

bool multiplicative_on(const Gf2Matrix& m, const std::vector<Gf2Vector>& probes) {
  std::vector<Gf2Vector> images;
  images.reserve(probes.size());
  for (const auto& x : probes) images.push_back(m.apply(x));
  for (std::size_t i = 0; i < probes.size(); ++i) {
    for (std::size_t j = i; j < probes.size(); ++j) {
      if (m.apply(hprod(probes[i], probes[j])) != hprod(images[i], images[j])) return false;
    }
  }
  return true;
}

/// Basis of V_2r, pairwise sums of basis vectors and all weight-2 vectors.
std::vector<Gf2Vector> even_probes(std::size_t len) {
  const Subspace even = even_subspace_of_length(len);
  std::vector<Gf2Vector> probes = even.basis().row_vectors();
  const std::size_t k = probes.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) probes.push_back(probes[i] + probes[j]);
  }
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      Gf2Vector v = Gf2Vector::unit(len, i);
      v.set(j);
      probes.push_back(std::move(v));
    }
  }
  std::sort(probes.begin(), probes.end());
  probes.erase(std::unique(probes.begin(), probes.end()), probes.end());
  return probes;
}

}  // namespace

bool is_hadamard_automorphism(const Gf2Matrix& m) {
  require_even_square(m);
  const std::size_t len = m.rows();
  if (m.rank() != len) throw SingularMatrix("is_hadamard_automorphism: matrix is singular");
  if (!maps_even_into_even(m, even_subspace_of_length(len))) return false;
  return multiplicative_on(m, even_probes(len));
}

bool is_multiplicative_on_full_space(const Gf2Matrix& m) {
  require_even_square(m);
  const std::size_t len = m.rows();
  std::vector<Gf2Vector> units;
  for (std::size_t i = 0; i < len; ++i) units.push_back(Gf2Vector::unit(len, i));
  return multiplicative_on(m, units);
}

WeylCensus weyl_census(std::size_t r, std::size_t max_r) {
  if (r == 0) throw InvalidArgument("weyl_census: r must be positive");
  if (r > max_r || r > 3) {
    throw BudgetExceeded("weyl_census: exhaustive GL(2r) scan refused for r = " + std::to_string(r));
  }
  const std::size_t len = 2 * r;
  const std::uint64_t entries = len * len;
  WeylCensus census;
  census.r = r;
  census.all_permutation_matrices = true;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << entries); ++code) {
    std::vector<Gf2Vector> rows;
    rows.reserve(len);
    for (std::size_t i = 0; i < len; ++i) rows.push_back(Gf2Vector::from_bits(len, code >> (i * len)));
    const Gf2Matrix m(std::move(rows), len);
    if (m.rank() != len) continue;
    ++census.invertible_scanned;
    if (is_multiplicative_on_full_space(m)) ++census.full_space_multiplicative;
    if (is_hadamard_automorphism(m)) {
      ++census.automorphisms;
      if (!m.is_permutation_matrix()) census.all_permutation_matrices = false;
    }
  }
  return census;
}

// ---------------------------------------------------------------------------
// Flag equivalence

namespace {

/// Per-coordinate data that any witness must preserve.
using CoordinateKey = std::vector<std::size_t>;

std::vector<CoordinateKey> coordinate_keys(const std::vector<Subspace>& spaces, std::size_t len) {
  std::vector<CoordinateKey> keys(len);
  for (const auto& s : spaces) {
    // dim{v in S : v_c = 0}
    for (std::size_t c = 0; c < len; ++c) {
      bool touches = false;
      for (const auto& b : s.basis().row_vectors()) touches = touches || b.get(c);
      keys[c].push_back(s.dim() - (touches ? 1 : 0));
    }
    if (s.dim() > 20) continue;
    std::vector<std::vector<std::size_t>> counts(len, std::vector<std::size_t>(len + 1, 0));
    s.for_each_member([&](const Gf2Vector& v) {
      const std::size_t w = v.weight();
      for (std::size_t c = 0; c < len; ++c) {
        if (v.get(c)) ++counts[c][w];
      }
    });
    for (std::size_t c = 0; c < len; ++c) keys[c].insert(keys[c].end(), counts[c].begin(), counts[c].end());
  }
  return keys;
}

Subspace project(const Subspace& s, const std::vector<std::size_t>& coords) {
  std::vector<Gf2Vector> gens;
  gens.reserve(s.dim());
  for (const auto& b : s.basis().row_vectors()) {
    Gf2Vector v(coords.size());
    for (std::size_t j = 0; j < coords.size(); ++j) {
      if (b.get(coords[j])) v.set(j);
    }
    gens.push_back(std::move(v));
  }
  return Subspace::span(coords.size(), gens);
}

class FlagSearch {
 public:
  FlagSearch(const std::vector<Subspace>& src, const std::vector<Subspace>& dst, std::size_t len)
      : src_(src), dst_(dst), len_(len), src_keys_(coordinate_keys(src, len)), dst_keys_(coordinate_keys(dst, len)),
        used_(len, false) {}

  bool key_multisets_match() const {
    auto a = src_keys_;
    auto b = dst_keys_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  std::optional<Permutation> run() {
    if (!search()) return std::nullopt;
    return Permutation(images_);
  }

 private:
  bool consistent() const {
    std::vector<std::size_t> domain(images_.size());
    for (std::size_t i = 0; i < domain.size(); ++i) domain[i] = i;
    for (std::size_t k = 0; k < src_.size(); ++k) {
      if (project(src_[k], domain) != project(dst_[k], images_)) return false;
    }
    return true;
  }

  bool search() {
    const std::size_t c = images_.size();
    if (c == len_) return true;
    for (std::size_t d = 0; d < len_; ++d) {
      if (used_[d] || src_keys_[c] != dst_keys_[d]) continue;
      images_.push_back(d);
      used_[d] = true;
      if (consistent() && search()) return true;
      used_[d] = false;
      images_.pop_back();
    }
    return false;
  }

  const std::vector<Subspace>& src_;
  const std::vector<Subspace>& dst_;
  std::size_t len_;
  std::vector<CoordinateKey> src_keys_;
  std::vector<CoordinateKey> dst_keys_;
  std::vector<bool> used_;
  std::vector<std::size_t> images_;
};

FlagResult mismatch(std::string reason) {
  FlagResult r;
  r.invariant_mismatch = std::move(reason);
  return r;
}

}  // namespace

FlagResult flag_equivalent(const CohomProfile& p, const CohomProfile& q) {
  require_valid_profile(p);
  require_valid_profile(q);
  if (p.r != q.r) return mismatch("fixed-point counts differ");
  if (p.n != q.n) return mismatch("manifold dimensions differ");
  if (p.betti != q.betti) return mismatch("betti numbers differ");

  const std::size_t len = p.ambient_len();
  // V_0 and V_{n-1} are fixed by every permutation.
  std::vector<Subspace> src;
  std::vector<Subspace> dst;
  for (std::size_t i = 1; i + 1 < p.n; ++i) {
    src.push_back(p.filtration[i]);
    dst.push_back(q.filtration[i]);
  }
  for (std::size_t k = 0; k < src.size(); ++k) {
    if (src[k].dim() <= 20 && src[k].weight_distribution() != dst[k].weight_distribution()) {
      return mismatch("weight distribution of V_" + std::to_string(k + 1) + " differs");
    }
  }

  FlagSearch search(src, dst, len);
  if (!search.key_multisets_match()) return mismatch("coordinate invariants differ");
  auto witness = search.run();
  if (!witness) return mismatch("no coordinate permutation carries the filtration");

  for (std::size_t i = 0; i < p.n; ++i) {
    if (witness->apply(p.filtration[i]) != q.filtration[i]) {
      throw Error("flag_equivalent: witness failed re-verification");
    }
  }
  FlagResult result;
  result.equivalent = true;
  result.witness = std::move(witness);
  return result;
}

nlohmann::json witness_to_json(const FlagResult& result) {
  nlohmann::json doc;
  doc["equivalent"] = result.equivalent;
  doc["permutation"] = result.witness ? nlohmann::json(result.witness->images()) : nlohmann::json(nullptr);
  doc["invariant_mismatch"] =
      result.invariant_mismatch ? nlohmann::json(*result.invariant_mismatch) : nlohmann::json(nullptr);
  return doc;
}

// ---------------------------------------------------------------------------
// AnalyticIso

AnalyticIso::AnalyticIso(Permutation sigma, std::shared_ptr<const CohomProfile> source,
                         std::shared_ptr<const CohomProfile> target)
    : sigma_(std::move(sigma)), source_(std::move(source)), target_(std::move(target)) {
  require_valid_profile(*source_);
  require_valid_profile(*target_);
  if (source_->r != target_->r || source_->n != target_->n) {
    throw InvalidArgument("analytic_iso: profiles have different (n, r)");
  }
  if (sigma_.size() != source_->ambient_len()) throw DimensionMismatch("analytic_iso: permutation has wrong size");
  for (std::size_t i = 0; i < source_->n; ++i) {
    if (sigma_.apply(source_->filtration[i]) != target_->filtration[i]) {
      throw InvalidArgument("analytic_iso: sigma does not carry V_" + std::to_string(i) + " onto its counterpart");
    }
  }
  if (!check(2 * source_->n).ok()) throw InvalidArgument("analytic_iso: induced map is not a ring isomorphism");
}

RingElement AnalyticIso::operator()(const RingElement& a) const {
  RingElement out(target_);
  for (const auto& [d, v] : a.terms()) out.add_term(sigma_.apply(v), d);
  return out;
}

AnalyticIso::Check AnalyticIso::check(std::size_t max_degree) const {
  Check result;
  std::vector<RingElement> monomials;
  for (std::size_t d = 0; d <= max_degree; ++d) {
    const Subspace src = source_->degree_space(d);
    const Subspace dst = target_->degree_space(d);
    std::vector<Gf2Vector> images;
    for (const auto& b : src.basis().row_vectors()) {
      RingElement m = RingElement::monomial(source_, b, d);
      const RingElement fm = (*this)(m);
      if (fm.terms().size() != 1 || fm.terms().begin()->first != d || !fm.is_valid()) result.graded = false;
      images.push_back(fm.coefficient(d));
      monomials.push_back(std::move(m));
    }
    if (Subspace::span(source_->ambient_len(), images) != dst) result.graded = false;
  }
  result.unital = (*this)(RingElement::one(source_)) == RingElement::one(target_);
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    for (std::size_t j = i; j < monomials.size(); ++j) {
      const auto& a = monomials[i];
      const auto& b = monomials[j];
      if ((*this)(a + b) != (*this)(a) + (*this)(b)) result.additive = false;
      if (a.max_degree() + b.max_degree() <= max_degree &&
          (*this)(multiply(a, b)) != multiply((*this)(a), (*this)(b))) {
        result.multiplicative = false;
      }
    }
  }
  return result;
}

AnalyticIso analytic_iso(const Permutation& sigma, const CohomProfile& p, const CohomProfile& q) {
  return AnalyticIso(sigma, std::make_shared<const CohomProfile>(p), std::make_shared<const CohomProfile>(q));
}

// ---------------------------------------------------------------------------
// Brute-force graded isomorphisms

LinearPiece::LinearPiece(std::size_t len, const std::vector<Gf2Vector>& sources, const std::vector<Gf2Vector>& images) {
  if (sources.size() != images.size()) throw DimensionMismatch("LinearPiece: sources and images differ in count");
  // Row-reduce [source | image] on the source half; with independent sources
  // every pivot lands there and the source half becomes the domain's RREF.
  std::vector<Gf2Vector> rows;
  for (std::size_t k = 0; k < sources.size(); ++k) {
    Gf2Vector row(2 * len);
    for (std::size_t i = 0; i < len; ++i) {
      if (sources[k].get(i)) row.set(i);
      if (images[k].get(i)) row.set(len + i);
    }
    rows.push_back(std::move(row));
  }
  const RrefResult red = rref(Gf2Matrix(std::move(rows), 2 * len));
  if (red.rank != sources.size() || (red.rank > 0 && red.pivots.back() >= len)) {
    throw InvalidArgument("LinearPiece: source vectors are dependent");
  }
  std::vector<Gf2Vector> basis;
  for (std::size_t k = 0; k < red.rank; ++k) {
    Gf2Vector src(len);
    Gf2Vector img(len);
    for (std::size_t i = 0; i < len; ++i) {
      if (red.reduced.get(k, i)) src.set(i);
      if (red.reduced.get(k, len + i)) img.set(i);
    }
    basis.push_back(std::move(src));
    images_.push_back(std::move(img));
  }
  domain_ = Subspace::span(len, basis);
}

Gf2Vector LinearPiece::operator()(const Gf2Vector& x) const {
  const auto coeff = domain_.coordinates(x);
  Gf2Vector out(x.size());
  for (std::size_t k = 0; k < coeff.size(); ++k) {
    if (coeff[k]) out += images_[k];
  }
  return out;
}

namespace {

class BruteIsoSearch {
 public:
  static constexpr std::size_t kNodeBudget = 10'000'000;

  BruteIsoSearch(const CohomProfile& p, const CohomProfile& q, std::size_t cap) : len_(p.ambient_len()), cap_(cap) {
    for (std::size_t d = 0; d <= cap; ++d) {
      dom_.push_back(p.degree_space(d));
      cod_.push_back(q.degree_space(d));
    }
    current_.resize(cap + 1);
  }

  std::vector<GradedMap> run() {
    extend(0);
    return std::move(found_);
  }

 private:
  struct Pair {
    Gf2Vector x;
    Gf2Vector y;
    std::size_t pivot;
  };

  void extend(std::size_t d) {
    if (++nodes_ > kNodeBudget) throw BudgetExceeded("brute_graded_isos: search budget exceeded");
    if (d > cap_) {
      found_.push_back(current_);
      return;
    }
    if (dom_[d].dim() != cod_[d].dim()) return;

    // Products of lower-degree pieces pin f_d down on their span.
    std::vector<Pair> fixed;
    for (std::size_t a = 1; 2 * a <= d; ++a) {
      const std::size_t b = d - a;
      for (const auto& u : dom_[a].basis().row_vectors()) {
        for (const auto& w : dom_[b].basis().row_vectors()) {
          Gf2Vector x = hprod(u, w);
          Gf2Vector y = hprod(current_[a](u), current_[b](w));
          if (!cod_[d].contains(y)) return;
          for (const auto& row : fixed) {
            if (x.get(row.pivot)) {
              x += row.x;
              y += row.y;
            }
          }
          if (x.is_zero()) {
            if (!y.is_zero()) return;
            continue;
          }
          const std::size_t pivot = x.first_set();
          fixed.push_back({std::move(x), std::move(y), pivot});
        }
      }
    }
    std::vector<Gf2Vector> sources;
    std::vector<Gf2Vector> images;
    for (const auto& row : fixed) {
      sources.push_back(row.x);
      images.push_back(row.y);
    }
    if (Subspace::span(len_, images).dim() != images.size()) return;

    std::vector<Gf2Vector> free_sources;
    Subspace covered = Subspace::span(len_, sources);
    for (const auto& b : dom_[d].basis().row_vectors()) {
      if (covered.contains(b)) continue;
      free_sources.push_back(b);
      covered = covered.sum(Subspace::span(len_, {b}));
    }
    const std::vector<Gf2Vector> targets = cod_[d].members();
    assign_free(d, sources, images, free_sources, 0, targets);
  }

  void assign_free(std::size_t d, std::vector<Gf2Vector>& sources, std::vector<Gf2Vector>& images,
                   const std::vector<Gf2Vector>& free_sources, std::size_t k, const std::vector<Gf2Vector>& targets) {
    if (k == free_sources.size()) {
      current_[d] = LinearPiece(len_, sources, images);
      extend(d + 1);
      return;
    }
    const Subspace taken = Subspace::span(len_, images);
    for (const auto& y : targets) {
      if (taken.contains(y)) continue;
      sources.push_back(free_sources[k]);
      images.push_back(y);
      assign_free(d, sources, images, free_sources, k + 1, targets);
      sources.pop_back();
      images.pop_back();
    }
  }

  std::size_t len_;
  std::size_t cap_;
  std::vector<Subspace> dom_;
  std::vector<Subspace> cod_;
  GradedMap current_;
  std::vector<GradedMap> found_;
  std::size_t nodes_ = 0;
};

}  // namespace

std::vector<GradedMap> brute_graded_isos(const CohomProfile& p, const CohomProfile& q, std::size_t degree_cap) {
  require_valid_profile(p);
  require_valid_profile(q);
  if (p.r > 2 || q.r > 2 || p.n > 3 || q.n > 3 || degree_cap > 2 * std::max(p.n, q.n)) {
    throw BudgetExceeded("brute_graded_isos: only r <= 2, n <= 3, degree_cap <= 2n are supported");
  }
  if (p.r != q.r || p.n != q.n || p.betti != q.betti) return {};
  return BruteIsoSearch(p, q, degree_cap).run();
}

std::optional<Permutation> permutation_inducing(const GradedMap& f, std::size_t ambient_len) {
  auto agrees = [&](const Permutation& sigma) {
    for (const auto& piece : f) {
      const auto& basis = piece.domain().basis().row_vectors();
      for (std::size_t k = 0; k < basis.size(); ++k) {
        if (sigma.apply(basis[k]) != piece.images()[k]) return false;
      }
    }
    return true;
  };
  // A degree whose domain is the whole space reads sigma off the unit vectors.
  for (const auto& piece : f) {
    if (piece.domain().dim() != ambient_len) continue;
    std::vector<std::size_t> images;
    for (std::size_t i = 0; i < ambient_len; ++i) {
      const Gf2Vector img = piece(Gf2Vector::unit(ambient_len, i));
      if (img.weight() != 1) return std::nullopt;
      images.push_back(img.first_set());
    }
    try {
      Permutation sigma(std::move(images));
      return agrees(sigma) ? std::optional<Permutation>(sigma) : std::nullopt;
    } catch (const InvalidArgument&) {
      return std::nullopt;
    }
  }
  if (ambient_len > 8) throw BudgetExceeded("permutation_inducing: no full-space degree and 2r > 8");
  std::vector<std::size_t> images(ambient_len);
  for (std::size_t i = 0; i < ambient_len; ++i) images[i] = i;
  do {
    Permutation sigma(images);
    if (agrees(sigma)) return sigma;
  } while (std::next_permutation(images.begin(), images.end()));
  return std::nullopt;
}

}  // namespace z2ring
