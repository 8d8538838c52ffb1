#include "z2ring/cohomology.hpp"

#include <numeric>
#include <sstream>
#include <utility>

#include "z2ring/errors.hpp"
#include "z2ring/hadamard.hpp"

namespace z2ring {

Subspace CohomProfile::degree_space(std::size_t d) const {
  if (d < filtration.size()) return filtration[d];
  return Subspace::full(ambient_len());
}

std::string clause_name(ProfileClause clause) {
  switch (clause) {
    case ProfileClause::kShape: return "shape";
    case ProfileClause::kBettiEndpoints: return "betti_endpoints";
    case ProfileClause::kBettiSymmetry: return "betti_symmetry";
    case ProfileClause::kBettiSum: return "betti_sum";
    case ProfileClause::kFiltrationDims: return "filtration_dims";
    case ProfileClause::kUnitBottom: return "unit_bottom";
    case ProfileClause::kNested: return "nested";
    case ProfileClause::kEvenContainment: return "even_containment";
    case ProfileClause::kEvenTop: return "even_top";
    case ProfileClause::kProductClosure: return "product_closure";
  }
  return "unknown";
}

std::vector<ProfileViolation> validate_profile(const CohomProfile& p) {
  std::vector<ProfileViolation> out;
  auto report = [&](ProfileClause c, std::string detail) { out.push_back({c, std::move(detail)}); };

  if (p.n == 0 || p.r == 0) {
    report(ProfileClause::kShape, "n and r must be positive");
    return out;
  }
  if (p.betti.size() != p.n + 1) {
    report(ProfileClause::kShape, "betti has " + std::to_string(p.betti.size()) + " entries, expected n+1");
    return out;
  }
  if (p.filtration.size() != p.n) {
    report(ProfileClause::kShape, "filtration has " + std::to_string(p.filtration.size()) + " spaces, expected n");
    return out;
  }
  const std::size_t len = p.ambient_len();
  for (std::size_t i = 0; i < p.n; ++i) {
    if (p.filtration[i].ambient_len() != len) {
      report(ProfileClause::kShape, "V_" + std::to_string(i) + " has ambient length " +
                                        std::to_string(p.filtration[i].ambient_len()) + ", expected 2r");
      return out;
    }
  }

  if (p.betti.front() != 1 || p.betti.back() != 1) report(ProfileClause::kBettiEndpoints, "b_0 and b_n must be 1");
  for (std::size_t i = 0; i <= p.n; ++i) {
    if (p.betti[i] != p.betti[p.n - i]) {
      report(ProfileClause::kBettiSymmetry, "b_" + std::to_string(i) + " != b_" + std::to_string(p.n - i));
      break;
    }
  }
  const std::size_t total = std::accumulate(p.betti.begin(), p.betti.end(), std::size_t{0});
  if (total != len) report(ProfileClause::kBettiSum, "sum of betti numbers is " + std::to_string(total) + ", expected 2r");

  std::size_t prefix = 0;
  for (std::size_t i = 0; i < p.n; ++i) {
    prefix += p.betti[i];
    if (p.filtration[i].dim() != prefix) {
      report(ProfileClause::kFiltrationDims, "dim V_" + std::to_string(i) + " = " +
                                                 std::to_string(p.filtration[i].dim()) + ", expected " +
                                                 std::to_string(prefix));
    }
  }

  if (p.filtration[0] != Subspace::span(len, {Gf2Vector::ones(len)})) {
    report(ProfileClause::kUnitBottom, "V_0 is not spanned by the all-ones vector");
  }
  for (std::size_t i = 0; i + 1 < p.n; ++i) {
    if (!p.filtration[i].is_subspace_of(p.filtration[i + 1])) {
      report(ProfileClause::kNested, "V_" + std::to_string(i) + " is not inside V_" + std::to_string(i + 1));
    }
  }
  const Subspace even = even_subspace_of_length(len);
  for (std::size_t i = 0; i < p.n; ++i) {
    if (!p.filtration[i].is_subspace_of(even)) {
      report(ProfileClause::kEvenContainment, "V_" + std::to_string(i) + " contains an odd-weight vector");
    }
  }
  if (p.filtration[p.n - 1] != even) report(ProfileClause::kEvenTop, "V_{n-1} is not the even-weight subspace");

  // Multi-factor products follow from the pairwise condition by induction.
  bool closure_ok = true;
  for (std::size_t i = 1; i < p.n && closure_ok; ++i) {
    for (std::size_t j = i; i + j < p.n && closure_ok; ++j) {
      const auto& bi = p.filtration[i].basis().row_vectors();
      const auto& bj = p.filtration[j].basis().row_vectors();
      for (const auto& u : bi) {
        for (const auto& v : bj) {
          if (!p.filtration[i + j].contains(hprod(u, v))) {
            report(ProfileClause::kProductClosure, "V_" + std::to_string(i) + " o V_" + std::to_string(j) +
                                                       " is not inside V_" + std::to_string(i + j));
            closure_ok = false;
            break;
          }
        }
        if (!closure_ok) break;
      }
    }
  }
  return out;
}

void require_valid_profile(const CohomProfile& p) {
  const auto violations = validate_profile(p);
  if (violations.empty()) return;
  std::string msg = "invalid profile:";
  for (const auto& v : violations) msg += " [" + clause_name(v.clause) + "] " + v.detail + ";";
  throw InvalidArgument(msg);
}

std::vector<std::size_t> ring_dimensions(const CohomProfile& p, std::size_t max_degree) {
  require_valid_profile(p);
  std::vector<std::size_t> dims;
  std::size_t prefix = 0;
  for (std::size_t d = 0; d <= max_degree; ++d) {
    if (d < p.n) {
      prefix += p.betti[d];
      dims.push_back(prefix);
    } else {
      dims.push_back(p.ambient_len());
    }
  }
  return dims;
}

ClosedIndex largest_closed_index(const CohomProfile& p) {
  require_valid_profile(p);
  ClosedIndex best;
  for (std::size_t i = 0; i < p.n; ++i) {
    if (is_hadamard_closed(p.filtration[i])) best = {i, p.filtration[i].dim()};
  }
  return best;
}

CohomProfile standard_profile_n2(std::size_t r) {
  if (r == 0) throw InvalidArgument("standard_profile_n2: r must be positive");
  const std::size_t len = 2 * r;
  CohomProfile p;
  p.n = 2;
  p.r = r;
  p.betti = {1, len - 2, 1};
  p.filtration = {Subspace::span(len, {Gf2Vector::ones(len)}), even_subspace(r)};
  return p;
}

CohomProfile profile_from_code(std::size_t n, std::size_t r, const Subspace& middle) {
  if (n != 3) throw InvalidArgument("profile_from_code: only n = 3 is supported");
  if (r == 0) throw InvalidArgument("profile_from_code: r must be positive");
  const std::size_t len = 2 * r;
  if (middle.ambient_len() != len) throw DimensionMismatch("profile_from_code: middle space has wrong ambient length");
  if (middle.dim() != r) throw InvalidArgument("profile_from_code: middle space must have dimension r");
  if (!middle.contains(Gf2Vector::ones(len))) throw InvalidArgument("profile_from_code: middle space must contain all-ones");
  if (!middle.is_subspace_of(even_subspace(r))) throw InvalidArgument("profile_from_code: middle space is not inside V_2r");
  if (!is_hadamard_closed(middle)) throw InvalidArgument("profile_from_code: middle space is not closed under o");
  CohomProfile p;
  p.n = 3;
  p.r = r;
  p.betti = {1, r - 1, r - 1, 1};
  p.filtration = {Subspace::span(len, {Gf2Vector::ones(len)}), middle, even_subspace(r)};
  return p;
}

std::string IndexPolynomial::to_string() const {
  if (support.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto d : support) {
    if (!first) os << " + ";
    first = false;
    if (d == 0) {
      os << "1";
    } else if (d == 1) {
      os << "t";
    } else {
      os << "t^" << d;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// RingElement

RingElement::RingElement(std::shared_ptr<const CohomProfile> profile) : profile_(std::move(profile)) {
  if (!profile_) throw InvalidArgument("RingElement: null profile");
}

RingElement RingElement::monomial(std::shared_ptr<const CohomProfile> profile, const Gf2Vector& v, std::size_t degree) {
  RingElement e(std::move(profile));
  e.add_term(v, degree);
  return e;
}

RingElement RingElement::one(std::shared_ptr<const CohomProfile> profile) {
  const std::size_t len = profile->ambient_len();
  return monomial(std::move(profile), Gf2Vector::ones(len), 0);
}

Gf2Vector RingElement::coefficient(std::size_t degree) const {
  auto it = terms_.find(degree);
  return it == terms_.end() ? Gf2Vector(profile_->ambient_len()) : it->second;
}

void RingElement::add_term(const Gf2Vector& v, std::size_t degree) {
  if (v.size() != profile_->ambient_len()) throw DimensionMismatch("RingElement: coefficient has wrong length");
  auto [it, inserted] = terms_.try_emplace(degree, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) terms_.erase(it);
  } else if (v.is_zero()) {
    terms_.erase(it);
  }
}

bool RingElement::is_valid() const {
  for (const auto& [d, v] : terms_) {
    if (d < profile_->n && !profile_->filtration[d].contains(v)) return false;
  }
  return true;
}

std::size_t RingElement::max_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

RingElement& RingElement::operator+=(const RingElement& other) {
  if (profile_ != other.profile_ && *profile_ != *other.profile_) {
    throw InvalidArgument("RingElement: operands belong to different profiles");
  }
  for (const auto& [d, v] : other.terms_) add_term(v, d);
  return *this;
}

RingElement multiply(const RingElement& a, const RingElement& b) {
  if (a.profile_ptr() != b.profile_ptr() && a.profile() != b.profile()) {
    throw InvalidArgument("multiply: operands belong to different profiles");
  }
  if (!a.is_valid() || !b.is_valid()) throw NotInRing("multiply: operand is not in the ring image");
  RingElement out(a.profile_ptr());
  for (const auto& [da, va] : a.terms()) {
    for (const auto& [db, vb] : b.terms()) out.add_term(hprod(va, vb), da + db);
  }
  return out;
}

IndexPolynomial index(const RingElement& a) {
  if (!a.is_valid()) throw NotInRing("index: element is not in the ring image");
  const std::size_t n = a.profile().n;
  IndexPolynomial out;
  for (const auto& [d, v] : a.terms()) {
    if (!v.parity()) continue;
    // Valid elements have even low-degree coefficients; guard anyway.
    if (d < n) throw NotInRing("index: odd-weight coefficient below degree n");
    out.support.insert(d - n);
  }
  return out;
}

}  // namespace z2ring
