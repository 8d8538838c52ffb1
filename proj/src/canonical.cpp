#include "z2ring/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "z2ring/errors.hpp"
#include "z2ring/union_find.hpp"

namespace z2ring {

namespace {

// Codeword enumeration for pair colors is cheap up to this dimension.
constexpr std::size_t kEnumerateDim = 16;

using Color = std::vector<std::size_t>;

/// Appends, for every pair (c, d), the number of members of `s` of each weight
/// whose support holds both c and d (c == d gives the per-coordinate count).
void append_pair_counts(const Subspace& s, std::vector<std::vector<Color>>& colors) {
  const std::size_t len = s.ambient_len();
  std::vector<std::size_t> flat(len * len * (len + 1), 0);
  s.for_each_member([&](const Gf2Vector& v) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < len; ++i) {
      if (v.get(i)) support.push_back(i);
    }
    const std::size_t w = support.size();
    for (auto c : support) {
      for (auto d : support) ++flat[(c * len + d) * (len + 1) + w];
    }
  });
  for (std::size_t c = 0; c < len; ++c) {
    for (std::size_t d = 0; d < len; ++d) {
      auto first = flat.begin() + static_cast<std::ptrdiff_t>((c * len + d) * (len + 1));
      colors[c][d].insert(colors[c][d].end(), first, first + static_cast<std::ptrdiff_t>(len + 1));
    }
  }
}

/// Coarse fallback: membership of e_c and e_c + e_d.
void append_membership(const Subspace& s, std::vector<std::vector<Color>>& colors) {
  const std::size_t len = s.ambient_len();
  for (std::size_t c = 0; c < len; ++c) {
    for (std::size_t d = 0; d < len; ++d) {
      Gf2Vector v = Gf2Vector::unit(len, c);
      if (d != c) v.set(d);
      colors[c][d].push_back(s.contains(v) ? 1 : 0);
    }
  }
}

std::vector<std::vector<std::size_t>> pair_color_ids(const std::vector<Subspace>& spaces, std::size_t len) {
  std::vector<std::vector<Color>> colors(len, std::vector<Color>(len));
  for (const auto& s : spaces) {
    if (s.dim() <= kEnumerateDim) {
      append_pair_counts(s, colors);
    } else if (len - s.dim() <= kEnumerateDim) {
      append_pair_counts(s.orthogonal_complement(), colors);
    } else {
      append_membership(s, colors);
    }
  }
  std::vector<Color> distinct;
  for (const auto& row : colors) distinct.insert(distinct.end(), row.begin(), row.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<std::vector<std::size_t>> ids(len, std::vector<std::size_t>(len));
  for (std::size_t c = 0; c < len; ++c) {
    for (std::size_t d = 0; d < len; ++d) {
      ids[c][d] = static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), colors[c][d]) -
                                           distinct.begin());
    }
  }
  return ids;
}

using Cells = std::vector<std::vector<std::size_t>>;
using Certificate = std::vector<Gf2Matrix>;

struct Leaf {
  std::vector<std::size_t> path;
  std::vector<std::size_t> labeling;
  Certificate certificate;
};

class Canonizer {
 public:
  explicit Canonizer(const std::vector<Subspace>& spaces)
      : spaces_(spaces), len_(spaces.front().ambient_len()), colors_(pair_color_ids(spaces, len_)) {}

  CanonicalForm run() {
    Cells root;
    if (len_ > 0) {
      root.emplace_back(len_);
      std::iota(root.front().begin(), root.front().end(), std::size_t{0});
    }
    std::vector<std::size_t> path;
    search(std::move(root), path);
    CanonicalForm out;
    out.certificate = best_->certificate;
    out.labeling = Permutation(best_->labeling);
    out.leaves_visited = leaves_;
    out.automorphism_generators = generators_.size();
    return out;
  }

 private:
  void refine(Cells& cells) const {
    std::vector<std::size_t> cell_of(len_);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t k = 0; k < cells.size(); ++k) {
        for (auto c : cells[k]) cell_of[c] = k;
      }
      Cells next;
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<std::size_t>, std::size_t>> keyed;
        for (auto c : cell) {
          std::vector<std::size_t> sig;
          sig.reserve(len_ + 1);
          sig.push_back(colors_[c][c]);
          std::vector<std::size_t> rest;
          rest.reserve(len_);
          for (std::size_t d = 0; d < len_; ++d) {
            if (d != c) rest.push_back(cell_of[d] * (len_ * len_ + 1) + colors_[c][d]);
          }
          std::sort(rest.begin(), rest.end());
          sig.insert(sig.end(), rest.begin(), rest.end());
          keyed.emplace_back(std::move(sig), c);
        }
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        std::size_t start = next.size();
        next.push_back({keyed.front().second});
        for (std::size_t i = 1; i < keyed.size(); ++i) {
          if (keyed[i].first != keyed[i - 1].first) next.push_back({});
          next.back().push_back(keyed[i].second);
        }
        if (next.size() - start > 1) changed = true;
      }
      cells = std::move(next);
    }
  }

  Certificate certificate_for(const std::vector<std::size_t>& labeling) const {
    const Permutation sigma(labeling);
    Certificate cert;
    cert.reserve(spaces_.size());
    for (const auto& s : spaces_) cert.push_back(sigma.apply(s).basis());
    return cert;
  }

  static std::size_t common_prefix(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return k;
  }

  void record_automorphism(const std::vector<std::size_t>& labeling, const Leaf& other) {
    std::vector<std::size_t> inv(len_);
    for (std::size_t i = 0; i < len_; ++i) inv[other.labeling[i]] = i;
    std::vector<std::size_t> gamma(len_);
    bool trivial = true;
    for (std::size_t c = 0; c < len_; ++c) {
      gamma[c] = inv[labeling[c]];
      trivial = trivial && gamma[c] == c;
    }
    if (!trivial) generators_.push_back(std::move(gamma));
  }

  /// Returns the depth the search should unwind to.
  std::size_t leaf(const Cells& cells, const std::vector<std::size_t>& path) {
    ++leaves_;
    std::vector<std::size_t> labeling(len_);
    for (std::size_t k = 0; k < cells.size(); ++k) labeling[cells[k].front()] = k;
    Certificate cert = certificate_for(labeling);
    if (!first_) {
      first_ = Leaf{path, labeling, cert};
      best_ = first_;
      return path.size();
    }
    if (cert == first_->certificate) {
      record_automorphism(labeling, *first_);
      return common_prefix(path, first_->path);
    }
    if (cert == best_->certificate) {
      record_automorphism(labeling, *best_);
      return common_prefix(path, best_->path);
    }
    if (cert < best_->certificate) best_ = Leaf{path, std::move(labeling), std::move(cert)};
    return path.size();
  }

  /// Orbit representatives under the stored automorphisms fixing `path` pointwise.
  std::vector<std::size_t> orbit_roots(const std::vector<std::size_t>& path) const {
    UnionFind uf(len_);
    for (const auto& g : generators_) {
      bool fixes = true;
      for (auto v : path) fixes = fixes && g[v] == v;
      if (!fixes) continue;
      for (std::size_t c = 0; c < len_; ++c) uf.unite(c, g[c]);
    }
    std::vector<std::size_t> roots(len_);
    for (std::size_t c = 0; c < len_; ++c) roots[c] = uf.find(c);
    return roots;
  }

  std::size_t search(Cells cells, std::vector<std::size_t>& path) {
    refine(cells);
    const auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) return leaf(cells, path);
    const std::size_t target_index = static_cast<std::size_t>(target - cells.begin());
    const std::vector<std::size_t> candidates = *target;
    std::vector<std::size_t> explored;
    const std::size_t depth = path.size();
    for (auto x : candidates) {
      if (!explored.empty()) {
        const auto roots = orbit_roots(path);
        const bool seen = std::any_of(explored.begin(), explored.end(),
                                      [&](std::size_t e) { return roots[e] == roots[x]; });
        if (seen) continue;
      }
      explored.push_back(x);
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t k = 0; k < cells.size(); ++k) {
        if (k != target_index) {
          child.push_back(cells[k]);
          continue;
        }
        child.push_back({x});
        child.emplace_back();
        for (auto c : cells[k]) {
          if (c != x) child.back().push_back(c);
        }
      }
      path.push_back(x);
      const std::size_t level = search(std::move(child), path);
      path.pop_back();
      if (level < depth) return level;
    }
    return depth;
  }

  const std::vector<Subspace>& spaces_;
  std::size_t len_;
  std::vector<std::vector<std::size_t>> colors_;
  std::optional<Leaf> first_;
  std::optional<Leaf> best_;
  std::vector<std::vector<std::size_t>> generators_;
  std::size_t leaves_ = 0;
};

}  // namespace

std::vector<Subspace> CanonicalForm::spaces() const {
  std::vector<Subspace> out;
  for (const auto& m : certificate) out.push_back(Subspace::row_space(m));
  return out;
}

CanonicalForm canonical_form(const std::vector<Subspace>& spaces) {
  if (spaces.empty()) throw InvalidArgument("canonical_form: no spaces given");
  for (const auto& s : spaces) {
    if (s.ambient_len() != spaces.front().ambient_len()) {
      throw DimensionMismatch("canonical_form: spaces have different ambient lengths");
    }
  }
  if (spaces.front().ambient_len() == 0) {
    CanonicalForm out;
    for (const auto& s : spaces) out.certificate.push_back(s.basis());
    out.labeling = Permutation::identity(0);
    return out;
  }
  return Canonizer(spaces).run();
}

Gf2Matrix canonical_code(const Subspace& code) { return canonical_form({code}).certificate.front(); }

}  // namespace z2ring
