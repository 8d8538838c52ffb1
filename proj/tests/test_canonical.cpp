#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "oracles.hpp"
#include "z2ring/canonical.hpp"
#include "z2ring/errors.hpp"

using namespace z2ring;

namespace {

oracle::Mask to_mask(const Gf2Vector& v) {
  oracle::Mask m = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v.get(i)) m |= oracle::Mask{1} << i;
  }
  return m;
}

std::vector<oracle::Mask> members(const Subspace& s) {
  std::vector<oracle::Mask> out;
  for (const auto& v : s.members()) out.push_back(to_mask(v));
  return out;
}

std::vector<std::vector<oracle::Mask>> oracle_key(const std::vector<Subspace>& spaces) {
  std::vector<std::vector<oracle::Mask>> m;
  for (const auto& s : spaces) m.push_back(members(s));
  return oracle::min_image(m, spaces.front().ambient_len());
}

/// Small spaces tend to have large automorphism groups, which is what stresses the search.
Subspace structured_subspace(std::size_t len, std::mt19937_64& rng) {
  std::vector<Gf2Vector> gens;
  for (std::size_t k = testgen::pick(1, 3, rng); k > 0; --k) {
    Gf2Vector v(len);
    const std::size_t a = testgen::pick(0, len - 1, rng);
    const std::size_t b = testgen::pick(a, len - 1, rng);
    for (std::size_t i = a; i <= b; ++i) v.set(i);
    gens.push_back(v);
  }
  return Subspace::span(len, gens);
}

}  // namespace

TEST(CanonicalForm, Examples) {
  const Subspace a = Subspace::span(4, {Gf2Vector::from_string("1100")});
  const Subspace b = Subspace::span(4, {Gf2Vector::from_string("0011")});
  EXPECT_EQ(canonical_code(a), canonical_code(b));
  EXPECT_NE(canonical_code(a), canonical_code(Subspace::span(4, {Gf2Vector::from_string("1110")})));
  EXPECT_EQ(canonical_code(Subspace(5)).rows(), 0U);
  EXPECT_THROW(canonical_form({}), InvalidArgument);
  EXPECT_THROW(canonical_form({Subspace(3), Subspace(4)}), DimensionMismatch);
}

TEST(CanonicalForm, LabelingProducesCertificate) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    const std::size_t len = testgen::pick(1, 14, rng);
    const std::vector<Subspace> spaces = {testgen::random_subspace(len, testgen::pick(0, 5, rng), rng),
                                          structured_subspace(len, rng)};
    const CanonicalForm f = canonical_form(spaces);
    ASSERT_EQ(f.certificate.size(), 2U);
    for (std::size_t k = 0; k < 2; ++k) {
      EXPECT_EQ(f.labeling.apply(spaces[k]), f.spaces()[k]);
      EXPECT_EQ(f.certificate[k].rows(), spaces[k].dim());
    }
  }
}

TEST(CanonicalForm, InvariantUnderPermutation) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 300; ++i) {
    const std::size_t len = testgen::pick(1, 20, rng);
    const Subspace s = rng() % 2 ? testgen::random_subspace(len, testgen::pick(0, 6, rng), rng)
                                 : structured_subspace(len, rng);
    const Permutation sigma = Permutation::random(len, rng);
    EXPECT_EQ(canonical_code(s), canonical_code(sigma.apply(s)));
  }
}

TEST(CanonicalForm, AgreesWithBruteForceOnSingleSpaces) {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 150; ++i) {
    const std::size_t len = testgen::pick(2, 7, rng);
    const Subspace a = rng() % 2 ? testgen::random_subspace(len, testgen::pick(1, 3, rng), rng)
                                 : structured_subspace(len, rng);
    const Subspace b = rng() % 3 == 0 ? Permutation::random(len, rng).apply(a)
                                      : testgen::random_subspace(len, a.dim(), rng);
    const bool oracle_same = oracle_key({a}) == oracle_key({b});
    EXPECT_EQ(canonical_code(a) == canonical_code(b), oracle_same);
  }
}

TEST(CanonicalForm, AgreesWithBruteForceOnTuples) {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 150; ++i) {
    const std::size_t len = testgen::pick(2, 7, rng);
    const std::vector<Subspace> p = {structured_subspace(len, rng), testgen::random_subspace(len, 2, rng)};
    std::vector<Subspace> q;
    if (rng() % 2) {
      const Permutation sigma = Permutation::random(len, rng);
      q = {sigma.apply(p[0]), sigma.apply(p[1])};
    } else {
      // Same spaces, independently permuted: usually not jointly equivalent.
      q = {Permutation::random(len, rng).apply(p[0]), Permutation::random(len, rng).apply(p[1])};
    }
    const bool oracle_same = oracle_key(p) == oracle_key(q);
    EXPECT_EQ(canonical_form(p).certificate == canonical_form(q).certificate, oracle_same);
  }
}

TEST(CanonicalForm, HighlySymmetricSpaces) {
  for (std::size_t r = 1; r <= 12; ++r) {
    const Subspace even = even_subspace(r);
    EXPECT_EQ(canonical_code(even), rref(even.basis()).reduced);
  }
  const CanonicalForm f = canonical_form({Subspace::full(32)});
  EXPECT_EQ(f.certificate.front().rows(), 32U);
  EXPECT_LE(f.leaves_visited, 64U);
}
