#include <gtest/gtest.h>

#include <algorithm>
#include <memory>
#include <random>

#include "generators.hpp"
#include "z2ring/classify.hpp"
#include "z2ring/cohomology.hpp"
#include "z2ring/errors.hpp"
#include "z2ring/hadamard.hpp"
#include "z2ring/profile_io.hpp"

using namespace z2ring;

namespace {

Gf2Vector V(const char* s) { return Gf2Vector::from_string(s); }

CohomProfile n3_r2(const char* middle) {
  CohomProfile p;
  p.n = 3;
  p.r = 2;
  p.betti = {1, 1, 1, 1};
  p.filtration = {Subspace::span(4, {V("1111")}), Subspace::span(4, {V("1111"), V(middle)}), even_subspace(2)};
  return p;
}

bool has_clause(const std::vector<ProfileViolation>& v, ProfileClause c) {
  return std::any_of(v.begin(), v.end(), [&](const ProfileViolation& x) { return x.clause == c; });
}

/// Random valid element with terms in degrees 0..max_degree.
RingElement random_element(const std::shared_ptr<const CohomProfile>& p, std::size_t max_degree,
                           std::mt19937_64& rng) {
  RingElement e(p);
  for (std::size_t d = 0; d <= max_degree; ++d) {
    if (rng() % 3 == 0) continue;
    const Subspace s = p->degree_space(d);
    Gf2Vector v(p->ambient_len());
    for (const auto& b : s.basis().row_vectors()) {
      if (rng() & 1U) v += b;
    }
    e.add_term(v, d);
  }
  return e;
}

}  // namespace

TEST(ValidateProfile, Examples) {
  for (std::size_t r = 1; r <= 16; ++r) EXPECT_TRUE(is_valid_profile(standard_profile_n2(r))) << r;
  EXPECT_TRUE(is_valid_profile(n3_r2("1100")));
  const auto bad = validate_profile(n3_r2("1000"));
  EXPECT_TRUE(has_clause(bad, ProfileClause::kEvenContainment));
}

TEST(ValidateProfile, ReportsEachClause) {
  CohomProfile p = standard_profile_n2(3);
  p.betti = {1, 3, 1};
  EXPECT_TRUE(has_clause(validate_profile(p), ProfileClause::kBettiSum));

  p = standard_profile_n2(3);
  p.betti = {2, 2, 2};
  const auto v = validate_profile(p);
  EXPECT_TRUE(has_clause(v, ProfileClause::kBettiEndpoints));
  EXPECT_TRUE(has_clause(v, ProfileClause::kFiltrationDims));

  CohomProfile q;
  q.n = 4;
  q.r = 3;
  q.betti = {1, 1, 3, 0, 1};
  q.filtration = {Subspace::span(6, {V("111111")}), Subspace::span(6, {V("111111"), V("110000")}),
                  Subspace::span(6, {V("111111"), V("110000"), V("101000"), V("100100"), V("100010")}),
                  even_subspace(3)};
  EXPECT_TRUE(has_clause(validate_profile(q), ProfileClause::kBettiSymmetry));

  p = standard_profile_n2(2);
  p.filtration[0] = Subspace::span(4, {V("1100")});
  EXPECT_TRUE(has_clause(validate_profile(p), ProfileClause::kUnitBottom));

  p = n3_r2("1100");
  p.filtration[2] = Subspace::span(4, {V("1111"), V("1010"), V("1000")});
  const auto w = validate_profile(p);
  EXPECT_TRUE(has_clause(w, ProfileClause::kNested));
  EXPECT_TRUE(has_clause(w, ProfileClause::kEvenTop));

  p = standard_profile_n2(2);
  p.filtration.pop_back();
  EXPECT_TRUE(has_clause(validate_profile(p), ProfileClause::kShape));
  EXPECT_THROW(require_valid_profile(p), InvalidArgument);
}

TEST(ValidateProfile, ProductClosureClause) {
  // n = 4, r = 3; the broken variant has V_1 o V_2 leaving V_3.
  CohomProfile p;
  p.n = 4;
  p.r = 3;
  p.betti = {1, 1, 2, 1, 1};
  const Gf2Vector one = Gf2Vector::ones(6);
  p.filtration = {Subspace::span(6, {one}), Subspace::span(6, {one, V("111100")}),
                  Subspace::span(6, {one, V("111100"), V("110000"), V("101000")}), even_subspace(3)};
  EXPECT_TRUE(is_valid_profile(p));
  p.filtration[1] = Subspace::span(6, {one, V("011110")});
  p.filtration[2] = Subspace::span(6, {one, V("011110"), V("110000"), V("000011")});
  EXPECT_TRUE(has_clause(validate_profile(p), ProfileClause::kProductClosure));
}

TEST(RingDimensions, Examples) {
  EXPECT_EQ(ring_dimensions(standard_profile_n2(3), 4), (std::vector<std::size_t>{1, 5, 6, 6, 6}));
  EXPECT_EQ(ring_dimensions(n3_r2("1100"), 5), (std::vector<std::size_t>{1, 2, 3, 4, 4, 4}));
}

TEST(RingDimensions, StabilizeAndIncrease) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 30; ++i) {
    const CohomProfile p = testgen::random_profile_n3(testgen::pick(1, 5, rng), rng);
    const auto dims = ring_dimensions(p, 10);
    EXPECT_EQ(dims.front(), 1U);
    for (std::size_t d = p.n; d < dims.size(); ++d) EXPECT_EQ(dims[d], 2 * p.r);
    for (std::size_t d = 1; d < dims.size(); ++d) EXPECT_GE(dims[d], dims[d - 1]);
    for (const auto& s : p.filtration) EXPECT_TRUE(s.contains(Gf2Vector::ones(2 * p.r)));
  }
}

TEST(StandardProfile, Examples) {
  const CohomProfile p1 = standard_profile_n2(1);
  EXPECT_EQ(p1.betti, (std::vector<std::size_t>{1, 0, 1}));
  EXPECT_EQ(p1.filtration[0], Subspace::span(2, {V("11")}));
  EXPECT_EQ(standard_profile_n2(3).betti, (std::vector<std::size_t>{1, 4, 1}));
  EXPECT_THROW(standard_profile_n2(0), InvalidArgument);
}

TEST(ProfileFromCode, Examples) {
  EXPECT_TRUE(is_valid_profile(profile_from_code(3, 1, Subspace::span(2, {V("11")}))));
  const CohomProfile p = profile_from_code(3, 2, Subspace::span(4, {V("1111"), V("1100")}));
  EXPECT_EQ(p, n3_r2("1100"));
  EXPECT_TRUE(is_valid_profile(profile_from_code(3, 4, gen_B(4).column_span())));
  EXPECT_THROW(profile_from_code(3, 2, Subspace::span(4, {V("1100"), V("1010")})), InvalidArgument);
  EXPECT_THROW(profile_from_code(3, 2, even_subspace(2)), InvalidArgument);
  EXPECT_THROW(profile_from_code(4, 2, Subspace::span(4, {V("1111"), V("1100")})), InvalidArgument);
}

TEST(LargestClosedIndex, Examples) {
  EXPECT_EQ(largest_closed_index(n3_r2("1100")), (ClosedIndex{1, 2}));
  for (std::size_t r = 2; r <= 6; ++r) EXPECT_EQ(largest_closed_index(standard_profile_n2(r)), (ClosedIndex{0, 1}));
  // For r = 1 the top space span{11} is itself closed.
  EXPECT_EQ(largest_closed_index(standard_profile_n2(1)), (ClosedIndex{1, 1}));

  // n = 4, b_2 = 0: V_1 = V_2 has dimension r.
  CohomProfile p;
  p.n = 4;
  p.r = 2;
  p.betti = {1, 1, 0, 1, 1};
  const Subspace mid = Subspace::span(4, {V("1111"), V("1100")});
  p.filtration = {Subspace::span(4, {V("1111")}), mid, mid, even_subspace(2)};
  ASSERT_TRUE(is_valid_profile(p));
  EXPECT_EQ(largest_closed_index(p), (ClosedIndex{2, 2}));

  // n = 4, b_2 = 2: index n/2 - 1 with dim r - b_2/2.
  p.betti = {1, 0, 2, 0, 1};
  p.filtration = {Subspace::span(4, {V("1111")}), Subspace::span(4, {V("1111")}), even_subspace(2),
                  even_subspace(2)};
  ASSERT_TRUE(is_valid_profile(p));
  EXPECT_EQ(largest_closed_index(p), (ClosedIndex{1, 1}));
}

TEST(LargestClosedIndex, OddNGivesDimensionR) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 30; ++i) {
    const std::size_t r = testgen::pick(2, 5, rng);
    EXPECT_EQ(largest_closed_index(testgen::random_profile_n3(r, rng)), (ClosedIndex{1, r}));
  }
}

TEST(Multiply, Examples) {
  auto p = std::make_shared<const CohomProfile>(n3_r2("1100"));
  const auto v = RingElement::monomial(p, V("1100"), 1);
  EXPECT_EQ(multiply(v, v), RingElement::monomial(p, V("1100"), 2));
  EXPECT_TRUE(multiply(v, v).is_valid());
  EXPECT_EQ(multiply(RingElement::one(p), v), v);
  const auto bad = RingElement::monomial(p, V("1010"), 1);
  EXPECT_FALSE(bad.is_valid());
  EXPECT_THROW(multiply(bad, v), NotInRing);
  auto other = std::make_shared<const CohomProfile>(standard_profile_n2(2));
  EXPECT_THROW(multiply(RingElement::one(other), v), InvalidArgument);
}

TEST(Multiply, RingAxiomsOnRandomElements) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 60; ++i) {
    auto p = std::make_shared<const CohomProfile>(testgen::random_profile_n3(testgen::pick(1, 4, rng), rng));
    const auto a = random_element(p, 3, rng);
    const auto b = random_element(p, 3, rng);
    const auto c = random_element(p, 3, rng);
    EXPECT_EQ(multiply(a, b), multiply(b, a));
    EXPECT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
    EXPECT_EQ(multiply(a, b + c), multiply(a, b) + multiply(a, c));
    EXPECT_TRUE(multiply(a, b).is_valid());
    EXPECT_NO_THROW(index(multiply(a, b)));
  }
}

TEST(Index, Examples) {
  auto p2 = std::make_shared<const CohomProfile>(standard_profile_n2(2));
  EXPECT_TRUE(index(RingElement::monomial(p2, V("1100"), 1)).is_zero());
  EXPECT_EQ(index(RingElement::monomial(p2, V("1000"), 2)).support, (std::set<std::size_t>{0}));
  EXPECT_EQ(index(RingElement::monomial(p2, V("1110"), 3)).support, (std::set<std::size_t>{1}));
  EXPECT_EQ(index(RingElement::monomial(p2, V("1110"), 3)).to_string(), "t");
  EXPECT_THROW(index(RingElement::monomial(p2, V("1000"), 1)), NotInRing);
}

TEST(ProfileJson, RoundTripAndErrors) {
  const CohomProfile p = n3_r2("1100");
  EXPECT_EQ(profile_from_json(profile_to_json(p)), p);
  const auto doc = profile_to_json(p);
  EXPECT_EQ(doc.at("filtration").at(1), (nlohmann::json{"0011", "1100"}));

  EXPECT_THROW(profile_from_json(nlohmann::json::parse(R"({"n":2,"r":1})")), ParseError);
  EXPECT_THROW(profile_from_json(nlohmann::json::parse(R"({"n":2,"r":1,"betti":[1,0,1],"filtration":[["111"],["11"]]})")),
               ParseError);
  EXPECT_THROW(profile_from_json(nlohmann::json::parse(R"({"n":"x","r":1,"betti":[],"filtration":[]})")), ParseError);
  EXPECT_THROW(load_profile("/nonexistent/profile.json"), ParseError);
}
