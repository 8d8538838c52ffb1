#include "z2ring/hadamard.hpp"

#include "z2ring/errors.hpp"

namespace z2ring {

Gf2Vector hprod(const Gf2Vector& x, const Gf2Vector& y) { return x.hadamard(y); }

Subspace even_subspace_of_length(std::size_t len) {
  return Subspace::row_space(kernel(Gf2Matrix({Gf2Vector::ones(len)}, len)));
}

Subspace even_subspace(std::size_t r) {
  if (r == 0) throw InvalidArgument("even_subspace: r must be positive");
  return even_subspace_of_length(2 * r);
}

Subspace annihilator(const Gf2Vector& v) {
  return Subspace::row_space(kernel(Gf2Matrix({Gf2Vector::ones(v.size()), v}, v.size())));
}

std::pair<Subspace, Subspace> split_annihilator(const Gf2Vector& v) {
  if (v.parity()) throw InvalidArgument("split_annihilator: v has odd weight");
  if (v.is_zero() || v.is_ones()) throw InvalidArgument("split_annihilator: v is 0 or all-ones");
  const std::size_t len = v.size();
  Gf2Vector complement = v + Gf2Vector::ones(len);
  // Even vectors supported on supp(v), and on its complement.
  std::vector<Gf2Vector> inner;
  std::vector<Gf2Vector> outer;
  std::size_t first_in = len;
  std::size_t first_out = len;
  for (std::size_t i = 0; i < len; ++i) {
    if (v.get(i)) {
      if (first_in == len) {
        first_in = i;
      } else {
        Gf2Vector e = Gf2Vector::unit(len, first_in);
        e.set(i);
        inner.push_back(std::move(e));
      }
    } else {
      if (first_out == len) {
        first_out = i;
      } else {
        Gf2Vector e = Gf2Vector::unit(len, first_out);
        e.set(i);
        outer.push_back(std::move(e));
      }
    }
  }
  return {Subspace::span(len, inner), Subspace::span(len, outer)};
}

Subspace annihilator_family(const std::vector<Gf2Vector>& vs, std::size_t len) {
  std::vector<Gf2Vector> constraints{Gf2Vector::ones(len)};
  for (const auto& v : vs) {
    if (v.size() != len) throw DimensionMismatch("annihilator_family: vector length differs");
    constraints.push_back(v);
  }
  return Subspace::row_space(kernel(Gf2Matrix(std::move(constraints), len)));
}

bool symmetric_law_check(const Gf2Vector& u, const Gf2Vector& v) {
  if (u.size() != v.size()) throw DimensionMismatch("symmetric_law_check: lengths differ");
  const Subspace vu = annihilator(u);
  const Subspace vv = annihilator(v);
  const Subspace vuv = annihilator(u + v);
  bool holds = true;
  even_subspace_of_length(u.size()).for_each_member([&](const Gf2Vector& x) {
    const bool in_u = vu.contains(x);
    const bool in_v = vv.contains(x);
    const bool rhs = (in_u && in_v) || (!in_u && !in_v);
    if (vuv.contains(x) != rhs) holds = false;
  });
  return holds;
}

bool is_hadamard_closed(const Subspace& w) {
  const auto& rows = w.basis().row_vectors();
  for (const auto& b : rows) {
    if (b.parity()) throw InvalidArgument("is_hadamard_closed: subspace is not contained in the even subspace");
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (rows[i].dot(rows[j])) return false;
    }
  }
  return true;
}

Subspace product_span(const std::vector<Gf2Vector>& generators, std::size_t len) {
  std::vector<Gf2Vector> products;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = i; j < generators.size(); ++j) products.push_back(hprod(generators[i], generators[j]));
  }
  return Subspace::span(len, products);
}

}  // namespace z2ring
