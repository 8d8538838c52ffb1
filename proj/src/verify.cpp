#include "z2ring/verify.hpp"

#include <random>
#include <sstream>

#include "z2ring/classify.hpp"
#include "z2ring/cohomology.hpp"
#include "z2ring/equivalence.hpp"
#include "z2ring/errors.hpp"
#include "z2ring/hadamard.hpp"

namespace z2ring {

bool VerifyReport::all_passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  std::size_t n = 0;
  for (const auto& item : items) n += item.passed ? 0 : 1;
  return n;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"lemmas", "weyl", "classification", "all"};
  return names;
}

namespace {

Gf2Vector random_vector(std::size_t len, std::mt19937_64& rng) {
  Gf2Vector v(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (rng() & 1U) v.set(i);
  }
  return v;
}

class Recorder {
 public:
  Recorder(VerifyReport& report, std::string suite) : report_(report), suite_(std::move(suite)) {}

  void add(std::string name, bool passed, std::string detail) {
    report_.items.push_back({suite_, std::move(name), passed, std::move(detail)});
  }

  /// Records a counted check: passes when `failures` is zero.
  void counted(std::string name, std::size_t checked, std::size_t failures) {
    add(std::move(name), failures == 0,
        std::to_string(checked) + " checked, " + std::to_string(failures) + " failed");
  }

 private:
  VerifyReport& report_;
  std::string suite_;
};

void lemmas_suite(VerifyReport& report, const VerifyOptions& opt) {
  Recorder rec(report, "lemmas");
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> pick_r(1, 6);

  std::size_t checked = 0;
  std::size_t bad = 0;
  for (std::size_t s = 0; s < opt.samples; ++s) {
    const std::size_t r = pick_r(rng);
    const Gf2Vector v = random_vector(2 * r, rng);
    if (v.is_zero() || v.is_ones()) continue;
    ++checked;
    if (annihilator(v).dim() != 2 * r - 2) ++bad;
  }
  rec.counted("dim V(v) = 2r-2", checked, bad);

  checked = bad = 0;
  for (std::size_t s = 0; s < opt.samples; ++s) {
    const std::size_t r = pick_r(rng);
    const Gf2Vector v = random_vector(2 * r, rng);
    ++checked;
    if (annihilator(v) != annihilator(v + Gf2Vector::ones(2 * r))) ++bad;
  }
  rec.counted("V(1+v) = V(v)", checked, bad);

  checked = bad = 0;
  for (std::size_t s = 0; s < opt.samples; ++s) {
    const std::size_t r = pick_r(rng);
    const std::size_t len = 2 * r;
    const std::size_t k = std::uniform_int_distribution<std::size_t>(0, r - 1)(rng);
    std::vector<Gf2Vector> family;
    Subspace spanned = Subspace::span(len, {Gf2Vector::ones(len)});
    while (family.size() < k) {
      Gf2Vector v = random_vector(len, rng);
      if (v.parity()) v.flip(0);
      if (spanned.contains(v)) continue;
      spanned = spanned.sum(Subspace::span(len, {v}));
      family.push_back(std::move(v));
    }
    ++checked;
    if (annihilator_family(family, len).dim() != 2 * r - 1 - k) ++bad;
  }
  rec.counted("dim V(v_1..v_k) = 2r-1-k", checked, bad);

  checked = bad = 0;
  for (std::size_t s = 0; s < opt.samples; ++s) {
    const std::size_t r = std::uniform_int_distribution<std::size_t>(2, 6)(rng);
    const std::size_t len = 2 * r;
    Gf2Vector v = random_vector(len, rng);
    if (v.parity()) v.flip(0);
    if (v.is_zero() || v.is_ones()) continue;
    ++checked;
    const auto [v1, v2] = split_annihilator(v);
    const std::size_t m = v.weight();
    bool ok = v1.dim() == m - 1 && v2.dim() == len - m - 1 && v1.sum(v2) == annihilator(v) &&
              v1.intersect(v2).dim() == 0;
    for (const auto& a : v1.basis().row_vectors()) {
      for (const auto& b : v2.basis().row_vectors()) ok = ok && hprod(a, b).is_zero();
    }
    if (!ok) ++bad;
  }
  rec.counted("V(v) = V1(v) + V2(v) with dims (m-1, 2r-m-1)", checked, bad);

  checked = bad = 0;
  for (std::size_t s = 0; s < opt.samples / 10 + 1; ++s) {
    const std::size_t r = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
    ++checked;
    if (!symmetric_law_check(random_vector(2 * r, rng), random_vector(2 * r, rng))) ++bad;
  }
  rec.counted("V(u+v) symmetric law", checked, bad);

  checked = bad = 0;
  for (std::size_t s = 0; s < opt.samples; ++s) {
    const std::size_t len = 2 * pick_r(rng);
    const Gf2Vector x = random_vector(len, rng);
    const Gf2Vector y = random_vector(len, rng);
    ++checked;
    if ((x + y).weight() + 2 * hprod(x, y).weight() != x.weight() + y.weight()) ++bad;
  }
  rec.counted("|x+y| = |x| + |y| - 2|x o y|", checked, bad);

  checked = bad = 0;
  for (std::size_t r = 1; r <= 6; ++r) {
    const auto dims = ring_dimensions(standard_profile_n2(r), 4);
    const std::vector<std::size_t> expect = {1, 2 * r - 1, 2 * r, 2 * r, 2 * r};
    ++checked;
    if (dims != expect) ++bad;
  }
  rec.counted("ring dimensions of the n = 2 profile", checked, bad);
}

void weyl_suite(VerifyReport& report) {
  Recorder rec(report, "weyl");
  for (std::size_t r = 1; r <= 2; ++r) {
    const WeylCensus c = weyl_census(r);
    const std::size_t expect = r == 1 ? 2 : 24;
    std::ostringstream detail;
    detail << c.automorphisms << " automorphisms among " << c.invertible_scanned << " invertible matrices; "
           << c.full_space_multiplicative << " multiplicative on the full space";
    rec.add("census r = " + std::to_string(r),
            c.automorphisms == expect && c.all_permutation_matrices && c.full_space_multiplicative == expect,
            detail.str());
  }
}

void classification_suite(VerifyReport& report, const VerifyOptions& opt) {
  Recorder rec(report, "classification");
  ClassifyOptions copt;
  copt.budget = std::max<std::size_t>(opt.max_r, 6);
  std::vector<Classification> table;
  for (std::size_t r = 1; r <= opt.max_r; ++r) {
    table.push_back(classify_M(r, copt));
    const auto& c = table.back();
    const auto expect = published_count(r);
    rec.add("N(" + std::to_string(r) + ")", expect && c.count() == *expect,
            "found " + std::to_string(c.count()) + (expect ? ", table " + std::to_string(*expect) : std::string()));
  }

  if (opt.max_r >= 4) {
    const auto& c4 = table[3];
    const auto a = find_class(c4, stacked_identity(4));
    const auto b = find_class(c4, gen_B(4));
    rec.add("r = 4 representatives (I;I) and B(4)", a && b && *a != *b,
            "classes " + (a ? std::to_string(*a) : std::string("none")) + " and " +
                (b ? std::to_string(*b) : std::string("none")));
  }

  const IsotropicMatrix s1(stack_identity_over(reference_p1()));
  const IsotropicMatrix s2(stack_identity_over(reference_p2()));
  const bool same_code = canonical_code(s1) == canonical_code(s2);
  const bool same_coset = double_coset_key(reference_p1()) == double_coset_key(reference_p2());
  rec.add("P1, P2: same M_6 orbit, different double cosets", same_code && !same_coset,
          std::string("same orbit: ") + (same_code ? "yes" : "no") + ", same double coset: " +
              (same_coset ? "yes" : "no"));

  for (std::size_t r = 1; r <= std::min<std::size_t>(4, opt.max_r); ++r) {
    const std::size_t cosets = double_cosets_orthogonal(r);
    const std::size_t n = table[r - 1].count();
    rec.add("N(" + std::to_string(r) + ") <= |S\\O/S|", n <= cosets,
            std::to_string(n) + " <= " + std::to_string(cosets) + (n < cosets ? " (strict)" : ""));
  }

  for (std::size_t r : {2, 3, 5}) {
    if (r > opt.max_r) continue;
    std::size_t irreducible = 0;
    for (const auto& cls : table[r - 1].classes) irreducible += is_irreducible(cls.representative) ? 1 : 0;
    rec.add("no irreducible class at r = " + std::to_string(r), irreducible == 0,
            std::to_string(irreducible) + " irreducible");
  }

  for (std::size_t l : {4, 6, 8, 10}) {
    const IsotropicMatrix b = gen_B(l);
    const std::size_t dim_x = product_span(b).dim();
    rec.add("B(" + std::to_string(l) + ") irreducible", dim_x == 2 * l - 1 && is_irreducible(b),
            "dim X = " + std::to_string(dim_x));
  }
}

}  // namespace

VerifyReport run_suite(const std::string& suite, const VerifyOptions& options) {
  VerifyReport report;
  if (suite == "lemmas" || suite == "all") lemmas_suite(report, options);
  if (suite == "weyl" || suite == "all") weyl_suite(report);
  if (suite == "classification" || suite == "all") classification_suite(report, options);
  if (report.items.empty()) throw InvalidArgument("unknown suite \"" + suite + "\"");
  return report;
}

nlohmann::json report_to_json(const VerifyReport& report) {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& item : report.items) {
    items.push_back({{"suite", item.suite}, {"name", item.name}, {"passed", item.passed}, {"detail", item.detail}});
  }
  return {{"passed", report.all_passed()}, {"failures", report.failures()}, {"items", items}};
}

std::string report_to_text(const VerifyReport& report) {
  std::ostringstream os;
  for (const auto& item : report.items) {
    os << (item.passed ? "PASS" : "FAIL") << "  [" << item.suite << "] " << item.name << ": " << item.detail << '\n';
  }
  os << report.items.size() - report.failures() << "/" << report.items.size() << " passed\n";
  return os.str();
}

}  // namespace z2ring
