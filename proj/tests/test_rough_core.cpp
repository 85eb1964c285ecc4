/*
 * SPDX-License-Identifier: Apache-2.0
 */

#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "frod/error.hpp"
#include "frod/rough_core.hpp"
#include "frod/worked_example.hpp"
#include "oracles.hpp"

namespace frod {
namespace {

const std::vector<ObjectId> kLabeled{0, 1, 2, 3, 4};

FuzzyRelation labeled_c1() {
  return relation_for_attribute(example::table().normalize(), 0, kLabeled, 1.0);
}

FuzzySet set(std::vector<double> m) { return FuzzySet(kLabeled, std::move(m)); }

void expect_near(const FuzzySet& s, const std::vector<double>& expected, double tol) {
  ASSERT_EQ(s.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_NEAR(s[i], expected[i], tol) << i;
}

TEST(RoughCore, LowerApproximationOfNormalClass) {
  const auto lower = lower_approximation(labeled_c1(), set({0, 1, 1, 1, 1}));
  expect_near(lower, {0, 1, 1, 1, 1.0 / 3}, 1e-3);
  EXPECT_NEAR(lower.cardinality(), 3.333, 1e-3);
}

TEST(RoughCore, UpperApproximationOfOutlierClass) {
  const auto upper = upper_approximation(labeled_c1(), set({1, 0, 0, 0, 0}));
  expect_near(upper, {1, 0, 0, 0, 2.0 / 3}, 1e-3);
  EXPECT_NEAR(upper.cardinality(), 1.667, 1e-3);
}

TEST(RoughCore, TrivialApproximations) {
  const auto rel = labeled_c1();
  const auto ones = FuzzySet::constant(kLabeled, 1.0);
  const auto zeros = FuzzySet::constant(kLabeled, 0.0);
  expect_near(lower_approximation(rel, ones), {1, 1, 1, 1, 1}, 0.0);
  expect_near(lower_approximation(rel, zeros), {0, 0, 0, 0, 0}, 0.0);
  expect_near(upper_approximation(rel, ones), {1, 1, 1, 1, 1}, 0.0);
  expect_near(upper_approximation(rel, zeros), {0, 0, 0, 0, 0}, 0.0);
}

TEST(RoughCore, ApproximationAccuracy) {
  EXPECT_NEAR(approximation_accuracy(labeled_c1(), set({0, 1, 1, 1, 1})), 3.333 / 4.667, 1e-3);
  EXPECT_EQ(approximation_accuracy(labeled_c1(), FuzzySet::constant(kLabeled, 1.0)), 1.0);
  const auto id = FuzzyRelation::identity(kLabeled);
  EXPECT_EQ(approximation_accuracy(id, set({0, 1, 0, 1, 1})), 1.0);
  try {
    approximation_accuracy(labeled_c1(), FuzzySet::constant(kLabeled, 0.0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegenerateSet);
  }
}

TEST(RoughCore, SimilarityClass) {
  const MixedTable t = example::table().normalize();
  const auto m_c1 = relation_for_attribute(t, 0, std::vector<ObjectId>{5, 6, 7, 8, 9}, 1.0);
  const auto cls = similarity_class(m_c1, 0);
  expect_near(cls, {1, 0, 0, 0.833, 0}, 1e-3);
  EXPECT_NEAR(cls.cardinality(), 1.833, 1e-3);
  EXPECT_EQ(similarity_class(FuzzyRelation::identity(kLabeled), 3).cardinality(), 1.0);
  EXPECT_EQ(similarity_class(FuzzyRelation::all_ones(kLabeled), 3).cardinality(), 5.0);
  try {
    similarity_class(m_c1, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Index);
  }
}

TEST(RoughCore, DecisionFaa) {
  const std::vector<FuzzySet> classes{set({0, 1, 1, 1, 1}), set({1, 0, 0, 0, 0})};
  EXPECT_NEAR(decision_faa(labeled_c1(), classes), 3.667 / 6.333, 1e-3);
  EXPECT_EQ(decision_faa(FuzzyRelation::identity(kLabeled), classes), 1.0);
  const std::vector<FuzzySet> universe{FuzzySet::constant(kLabeled, 1.0)};
  EXPECT_EQ(decision_faa(labeled_c1(), universe), 1.0);
}

TEST(RoughCore, UniverseMismatch) {
  const FuzzySet other({9, 8, 7, 6, 5}, {0, 1, 1, 1, 1});
  try {
    lower_approximation(labeled_c1(), other);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UniverseMismatch);
  }
  EXPECT_THROW(upper_approximation(labeled_c1(), other), Error);
}

TEST(RoughCore, MatchesNaiveOracleExactly) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rel = oracle::random_relation(6, rng);
    const auto m = oracle::random_membership(6, rng);
    const FuzzySet x(rel.subset(), m);
    const auto mat = oracle::to_matrix(rel);
    const auto lo = lower_approximation(rel, x);
    const auto up = upper_approximation(rel, x);
    const auto lo_ref = oracle::lower(mat, m);
    const auto up_ref = oracle::upper(mat, m);
    for (std::size_t i = 0; i < 6; ++i) {
      EXPECT_EQ(lo[i], lo_ref[i]);
      EXPECT_EQ(up[i], up_ref[i]);
    }
  }
}

TEST(RoughCore, OrderDualityAndMonotonicity) {
  constexpr double ulp = std::numeric_limits<double>::epsilon();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = 2 + trial % 15;
    const auto rel = oracle::random_relation(k, rng);
    const FuzzySet x(rel.subset(), oracle::random_membership(k, rng));
    std::vector<double> bigger(x.membership().begin(), x.membership().end());
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (auto& v : bigger) v = v + (1.0 - v) * u(rng);
    const FuzzySet y(rel.subset(), bigger);

    const auto lo = lower_approximation(rel, x);
    const auto up = upper_approximation(rel, x);
    const auto dual = lower_approximation(rel, x.complement());
    const auto lo_y = lower_approximation(rel, y);
    const auto up_y = upper_approximation(rel, y);
    for (std::size_t i = 0; i < k; ++i) {
      EXPECT_LE(lo[i], x[i] + ulp);
      EXPECT_LE(x[i], up[i] + ulp);
      EXPECT_NEAR(up[i], 1.0 - dual[i], ulp);
      EXPECT_LE(lo[i], lo_y[i]);
      EXPECT_LE(up[i], up_y[i]);
    }
  }
}

}  // namespace
}  // namespace frod
