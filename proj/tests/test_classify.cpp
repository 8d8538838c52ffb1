#include <gtest/gtest.h>

#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "generators.hpp"
#include "oracles.hpp"
#include "z2ring/canonical.hpp"
#include "z2ring/classify.hpp"
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

/// Sorted member list of the column span, as masks.
std::vector<oracle::Mask> code_members(const Subspace& s) {
  std::vector<oracle::Mask> out;
  for (const auto& v : s.members()) out.push_back(to_mask(v));
  std::sort(out.begin(), out.end());
  return out;
}

/// Size of the orbit of `code` under coordinate permutations, by BFS over
/// adjacent transpositions. Every visited code is added to `seen`.
std::size_t orbit_size(const std::vector<oracle::Mask>& code, std::size_t len,
                       std::set<std::vector<oracle::Mask>>& seen) {
  std::deque<std::vector<oracle::Mask>> queue = {code};
  std::size_t size = 0;
  if (!seen.insert(code).second) return 0;
  while (!queue.empty()) {
    const auto cur = std::move(queue.front());
    queue.pop_front();
    ++size;
    for (std::size_t i = 0; i + 1 < len; ++i) {
      std::vector<std::size_t> images(len);
      std::iota(images.begin(), images.end(), std::size_t{0});
      std::swap(images[i], images[i + 1]);
      std::vector<oracle::Mask> next;
      for (oracle::Mask m : cur) next.push_back(oracle::permute(m, images));
      std::sort(next.begin(), next.end());
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return size;
}

Gf2Matrix read_fixture(const std::string& name) {
  std::ifstream in(std::string(Z2RING_DATA_DIR) + "/fixtures/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  return read_matrix(in);
}

}  // namespace

TEST(Isotropic, MembershipExamples) {
  EXPECT_TRUE(is_isotropic_matrix(Gf2Matrix::from_strings({"1", "1"})));
  EXPECT_FALSE(is_isotropic_matrix(Gf2Matrix::from_strings({"1", "0"})));
  EXPECT_TRUE(is_isotropic_matrix(stacked_identity(5).matrix()));
  EXPECT_FALSE(is_isotropic_matrix(Gf2Matrix::from_strings({"11", "11", "00", "00"})));
  EXPECT_THROW(is_isotropic_matrix(Gf2Matrix(3, 1)), DimensionMismatch);
  EXPECT_THROW(IsotropicMatrix(Gf2Matrix::from_strings({"1", "0"})), InvalidArgument);
}

TEST(Isotropic, ClosedUnderMoves) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 200; ++i) {
    const std::size_t r = testgen::pick(1, 6, rng);
    const IsotropicMatrix a = testgen::random_isotropic(r, rng);
    const Gf2Matrix moved = apply_moves(a.matrix(), Permutation::random(2 * r, rng), random_invertible(r, rng));
    EXPECT_TRUE(is_isotropic_matrix(moved));
    EXPECT_EQ(canonical_code(IsotropicMatrix(moved)), canonical_code(a));
    EXPECT_TRUE(a.column_span().contains(Gf2Vector::ones(2 * r)));
  }
}

TEST(StandardForm, Examples) {
  const StandardForm s = standard_form(stacked_identity(3));
  EXPECT_TRUE(s.p.is_identity());
  EXPECT_TRUE(s.sigma.is_identity());
}

TEST(StandardForm, RandomMembersReachOrthogonalP) {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 300; ++i) {
    const std::size_t r = testgen::pick(1, 6, rng);
    const IsotropicMatrix a = testgen::random_isotropic(r, rng);
    const StandardForm s = standard_form(a);
    EXPECT_TRUE(is_orthogonal(s.p));
    EXPECT_EQ(apply_moves(a.matrix(), s.sigma, s.lambda), stack_identity_over(s.p));
  }
}

TEST(Orthogonal, GroupOrdersMatchBruteForce) {
  const std::vector<std::size_t> frozen = {1, 2, 6, 48, 720, 23040};
  for (std::size_t r = 1; r <= 5; ++r) {
    EXPECT_EQ(oracle::orthogonal_count_bruteforce(r), frozen[r - 1]);
  }
  for (std::size_t r = 1; r <= 6; ++r) {
    const auto all = enumerate_orthogonal(r);
    EXPECT_EQ(all.size(), frozen[r - 1]) << r;
    std::set<std::uint64_t> distinct;
    for (const auto& p : all) {
      EXPECT_TRUE(is_orthogonal(p));
      distinct.insert(pack_square(p));
    }
    EXPECT_EQ(distinct.size(), all.size());
  }
  EXPECT_THROW(enumerate_orthogonal(7), BudgetExceeded);
  EXPECT_THROW(enumerate_orthogonal(8, 8), BudgetExceeded);
}

TEST(Orthogonal, PackRoundTrip) {
  for (const auto& p : enumerate_orthogonal(4)) EXPECT_EQ(unpack_square(pack_square(p), 4), p);
}

TEST(DoubleCosets, CountsAgreeWithIndependentKey) {
  const std::vector<std::size_t> frozen = {1, 1, 1, 2, 2, 4};
  for (std::size_t r = 1; r <= 6; ++r) {
    std::set<std::vector<Gf2Vector>> keys;
    for (const auto& p : enumerate_orthogonal(r)) keys.insert(double_coset_key(p));
    EXPECT_EQ(keys.size(), frozen[r - 1]) << r;
    EXPECT_EQ(double_cosets_orthogonal(r), frozen[r - 1]) << r;
    std::set<std::vector<Gf2Vector>> rep_keys;
    for (const auto& p : double_coset_representatives(r)) rep_keys.insert(double_coset_key(p));
    EXPECT_EQ(rep_keys, keys);
  }
}

TEST(DoubleCosets, KeyIsInvariant) {
  std::mt19937_64 rng(54);
  const auto all = enumerate_orthogonal(5);
  for (int i = 0; i < 100; ++i) {
    const Gf2Matrix& p = all[testgen::pick(0, all.size() - 1, rng)];
    const Gf2Matrix moved = Permutation::random(5, rng).apply_rows(p) * Permutation::random(5, rng).matrix();
    EXPECT_EQ(double_coset_key(moved), double_coset_key(p));
  }
}

TEST(Reference, P1AndP2) {
  EXPECT_EQ(read_fixture("p1.txt"), reference_p1());
  EXPECT_EQ(read_fixture("p2.txt"), reference_p2());
  EXPECT_TRUE(is_orthogonal(reference_p1()));
  EXPECT_TRUE(is_orthogonal(reference_p2()));
  const IsotropicMatrix a(stack_identity_over(reference_p1()));
  const IsotropicMatrix b(stack_identity_over(reference_p2()));
  EXPECT_EQ(canonical_code(a), canonical_code(b));
  EXPECT_NE(double_coset_key(reference_p1()), double_coset_key(reference_p2()));
}

TEST(Decompose, Examples) {
  const auto blocks = decompose(stacked_identity(3));
  ASSERT_EQ(blocks.size(), 3U);
  EXPECT_EQ(blocks[0].coordinates, (std::vector<std::size_t>{0, 3}));
  EXPECT_FALSE(is_irreducible(stacked_identity(3)));
  EXPECT_TRUE(is_irreducible(stacked_identity(1)));
  const auto b4 = decompose(gen_B(4));
  ASSERT_EQ(b4.size(), 1U);
  EXPECT_EQ(b4[0].coordinates.size(), 8U);
}

TEST(Decompose, DirectSumsSplitBack) {
  std::mt19937_64 rng(55);
  for (int i = 0; i < 50; ++i) {
    std::vector<IsotropicMatrix> parts;
    std::size_t total = 0;
    while (total < 8) {
      const std::size_t choice = testgen::pick(0, 2, rng);
      if (choice == 0) parts.push_back(stacked_identity(1));
      if (choice == 1) parts.push_back(gen_B(4));
      if (choice == 2) parts.push_back(gen_B(6));
      total += parts.back().r();
    }
    const IsotropicMatrix sum = direct_sum(parts);
    const auto blocks = decompose(sum);
    EXPECT_EQ(blocks.size(), parts.size());
    std::size_t rank = 0;
    for (const auto& b : blocks) {
      EXPECT_EQ(b.coordinates.size(), 2 * b.matrix.r());
      EXPECT_TRUE(is_irreducible(b.matrix));
      rank += b.matrix.r();
    }
    EXPECT_EQ(rank, sum.r());
    const Permutation sigma = Permutation::random(2 * sum.r(), rng);
    const IsotropicMatrix moved(apply_moves(sum.matrix(), sigma, random_invertible(sum.r(), rng)));
    EXPECT_EQ(decompose(moved).size(), parts.size());
  }
}

TEST(Families, ExamplesAndShapes) {
  EXPECT_EQ(gen_A(4).rows(), 7U);
  EXPECT_EQ(gen_A(4).cols(), 3U);
  EXPECT_THROW(gen_A(3), InvalidArgument);
  EXPECT_THROW(gen_B(5), InvalidArgument);
  EXPECT_THROW(gen_C(4, 5), InvalidArgument);
  EXPECT_EQ(gen_C(4, 4).r(), 7U);
  EXPECT_EQ(gen_C(4, 4).matrix().rows(), 14U);
}

TEST(Families, BIrreducibleWithFullProductSpan) {
  for (std::size_t l = 4; l <= 16; l += 2) {
    const IsotropicMatrix b = gen_B(l);
    EXPECT_EQ(product_span(b).dim(), 2 * l - 1) << l;
    EXPECT_TRUE(is_irreducible(b)) << l;
  }
}

TEST(Families, CIrreducible) {
  for (std::size_t s = 4; s <= 12; s += 2) {
    for (std::size_t t = 4; s + t <= 16; t += 2) EXPECT_TRUE(is_irreducible(gen_C(s, t))) << s << "," << t;
  }
}

TEST(Families, CClassesBySize) {
  // r = 7: only C(4,4). r = 11: C(4,8) and C(8,4) coincide, C(6,6) differs.
  EXPECT_EQ(canonical_code(gen_C(4, 8)), canonical_code(gen_C(8, 4)));
  EXPECT_NE(canonical_code(gen_C(4, 8)), canonical_code(gen_C(6, 6)));
  EXPECT_NE(canonical_code(gen_C(4, 4)), canonical_code(stacked_identity(7)));
}

TEST(Classify, CountsMatchTable) {
  const std::vector<std::size_t> expect = {1, 1, 1, 2, 2, 3};
  for (std::size_t r = 1; r <= 6; ++r) {
    const Classification c = testgen::classes(r);
    EXPECT_EQ(c.count(), expect[r - 1]) << r;
    EXPECT_EQ(published_count(r), expect[r - 1]);
    for (const auto& cls : c.classes) {
      EXPECT_TRUE(is_isotropic_matrix(cls.representative.matrix()));
      EXPECT_EQ(canonical_code(cls.representative), cls.canonical);
    }
  }
  EXPECT_FALSE(published_count(7).has_value());
  EXPECT_EQ(published_lower_bound(7), 4U);
  EXPECT_EQ(published_lower_bound(14), 25U);
}

TEST(Classify, OrbitsPartitionAllSelfDualCodes) {
  // Orbit sizes of the class representatives must add up to the number of
  // self-dual codes, with no orbit meeting another.
  for (std::size_t r = 1; r <= 6; ++r) {
    std::set<std::vector<oracle::Mask>> seen;
    std::size_t total = 0;
    for (const auto& cls : testgen::classes(r).classes) {
      const std::size_t size = orbit_size(code_members(cls.representative.column_span()), 2 * r, seen);
      EXPECT_GT(size, 0U) << "orbits overlap at r = " << r;
      total += size;
    }
    EXPECT_EQ(total, oracle::self_dual_code_count(r)) << r;
  }
}

TEST(Classify, BruteForceOrbitCountForSmallR) {
  for (std::size_t r = 1; r <= 4; ++r) {
    const auto codes = oracle::all_self_dual_codes(r);
    EXPECT_EQ(codes.size(), oracle::self_dual_code_count(r));
    std::set<std::vector<std::vector<oracle::Mask>>> orbits;
    for (const auto& code : codes) orbits.insert(oracle::min_image({code}, 2 * r));
    EXPECT_EQ(orbits.size(), testgen::classes(r).count()) << r;
  }
}

TEST(Classify, RandomMembersLandInAClass) {
  std::mt19937_64 rng(56);
  for (int i = 0; i < 200; ++i) {
    const std::size_t r = testgen::pick(1, 6, rng);
    EXPECT_TRUE(find_class(testgen::classes(r), testgen::random_isotropic(r, rng)).has_value());
  }
  const auto& c4 = testgen::classes(4);
  EXPECT_NE(find_class(c4, stacked_identity(4)), find_class(c4, gen_B(4)));
}

TEST(Classify, ParallelMatchesSerial) {
  ClassifyOptions serial;
  ClassifyOptions parallel;
  parallel.jobs = 4;
  for (std::size_t r = 1; r <= 6; ++r) {
    EXPECT_EQ(classification_to_json(classify_M(r, serial)), classification_to_json(classify_M(r, parallel)));
  }
}

TEST(Classify, BudgetAndArguments) {
  EXPECT_THROW(classify_M(0), InvalidArgument);
  EXPECT_THROW(classify_M(7), BudgetExceeded);
  ClassifyOptions forced;
  forced.force = true;
  EXPECT_THROW(classify_M(8, forced), BudgetExceeded);
}

TEST(Classify, JsonShape) {
  const auto j = classification_to_json(testgen::classes(4));
  EXPECT_EQ(j.at("r"), 4);
  EXPECT_EQ(j.at("count"), 2);
  EXPECT_EQ(j.at("double_cosets"), 2);
  EXPECT_EQ(j.at("published_count"), 2);
  EXPECT_EQ(j.at("algorithm_version"), kAlgorithmVersion);
  ASSERT_EQ(j.at("classes").size(), 2U);
  EXPECT_TRUE(j.at("classes").at(0).contains("canonical"));
}

TEST(Classify, NoIrreducibleClassesAtTwoThreeFive) {
  for (std::size_t r : {2, 3, 5}) {
    for (const auto& cls : testgen::classes(r).classes) EXPECT_FALSE(cls.irreducible) << r;
  }
  std::size_t irreducible_at_4 = 0;
  for (const auto& cls : testgen::classes(4).classes) irreducible_at_4 += cls.irreducible ? 1 : 0;
  EXPECT_EQ(irreducible_at_4, 1U);
}
