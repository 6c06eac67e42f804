#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "msd/dist.hpp"
#include "msd/errors.hpp"
#include "synthetic.hpp"

using msd::Categorical;

namespace {
// Golden-section minimum for Bernoulli(0.6) vs Bernoulli(0.5), frozen from a
// 50-digit evaluation (alpha* ~ 0.4983).
constexpr double kChernoffB06B05 = 0.005076770485344711;
}  // namespace

TEST(Categorical, RejectsInvalidMasses) {
  EXPECT_THROW(Categorical({}), msd::DomainError);
  EXPECT_THROW(Categorical({0.5, -0.1, 0.6}), msd::DomainError);
  EXPECT_THROW(Categorical({0.5, 0.6}), msd::DomainError);
  EXPECT_THROW(Categorical({0.5, NAN}), msd::DomainError);
  EXPECT_THROW(Categorical({0.5, INFINITY}), msd::DomainError);
}

TEST(Categorical, ErrorNamesOffendingEntry) {
  try {
    Categorical({0.5, -0.1, 0.6});
    FAIL();
  } catch (const msd::DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("probs[1]"), std::string::npos) << e.what();
  }
}

TEST(Categorical, RenormalizesWithinTolerance) {
  const Categorical c({0.5, 0.5 + 5e-13});
  EXPECT_NEAR(c[0] + c[1], 1.0, 1e-15);
}

TEST(Categorical, Factories) {
  const auto b = Categorical::bernoulli(0.6);
  EXPECT_DOUBLE_EQ(b[0], 0.4);
  EXPECT_DOUBLE_EQ(b[1], 0.6);
  EXPECT_EQ(Categorical::uniform(4).support_size(), 4u);
  EXPECT_DOUBLE_EQ(Categorical::from_weights({1, 3})[1], 0.75);
  EXPECT_THROW(Categorical::bernoulli(1.5), msd::DomainError);
  EXPECT_THROW(Categorical::from_weights({0, 0}), msd::DomainError);
}

TEST(ProductSpec, OutcomeCountSaturates) {
  EXPECT_EQ(msd::ProductSpec(Categorical::uniform(3), 4).outcome_count(), 81u);
  EXPECT_EQ(msd::ProductSpec(Categorical::uniform(10), 40).outcome_count(), UINT64_MAX);
  EXPECT_TRUE(msd::ProductSpec(Categorical::uniform(10), 7).within_budget());
  EXPECT_FALSE(msd::ProductSpec(Categorical::uniform(10), 8).within_budget());
  EXPECT_THROW(msd::ProductSpec(Categorical::uniform(2), 0), msd::DomainError);
}

TEST(TvDistance, Examples) {
  const auto p = Categorical::bernoulli(0.6), q = Categorical::bernoulli(0.5);
  EXPECT_DOUBLE_EQ(msd::tv_distance(p, p), 0.0);
  EXPECT_DOUBLE_EQ(msd::tv_distance(Categorical({1, 0}), Categorical({0, 1})), 1.0);
  EXPECT_NEAR(msd::tv_distance(p, q), 0.1, 1e-15);
  EXPECT_THROW(msd::tv_distance(p, Categorical::uniform(3)), msd::DimensionError);
}

TEST(Chernoff, Examples) {
  const auto p = Categorical::bernoulli(0.6), q = Categorical::bernoulli(0.5);
  EXPECT_EQ(msd::chernoff_information(p, p), 0.0);
  EXPECT_NEAR(msd::chernoff_information(Categorical::bernoulli(0.9), Categorical::bernoulli(0.1)),
              -std::log(0.6), 1e-12);
  const auto r = msd::chernoff(p, q);
  EXPECT_NEAR(r.information, kChernoffB06B05, 1e-12);
  EXPECT_NEAR(r.alpha, 0.4983, 1e-4);
  EXPECT_FALSE(r.disjoint);
}

TEST(Chernoff, DisjointSupportsAreInfinite) {
  const auto r = msd::chernoff(Categorical({1, 0}), Categorical({0, 1}));
  EXPECT_TRUE(r.disjoint);
  EXPECT_TRUE(std::isinf(r.information));
}

TEST(Chernoff, PartialSupportOverlap) {
  // Only the shared symbol contributes: sum p^a q^(1-a) = 0.5^a 0.5^(1-a) = 0.5 at
  // every alpha in (0, 1), so I_c = ln 2.
  const auto r = msd::chernoff(Categorical({0.5, 0.5, 0.0}), Categorical({0.0, 0.5, 0.5}));
  EXPECT_FALSE(r.disjoint);
  EXPECT_NEAR(r.information, std::log(2.0), 1e-9);
}

TEST(Dist, SymmetryOnRandomPairs) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t k = 2 + t % 9;
    const auto p = msd::testing::random_categorical(k, rng, 0.2);
    const auto q = msd::testing::random_categorical(k, rng, 0.2);
    EXPECT_DOUBLE_EQ(msd::tv_distance(p, q), msd::tv_distance(q, p));
    const auto a = msd::chernoff(p, q), b = msd::chernoff(q, p);
    if (a.disjoint) {
      EXPECT_TRUE(b.disjoint);
    } else {
      EXPECT_NEAR(a.information, b.information, 1e-10);
      EXPECT_NEAR(a.alpha, 1.0 - b.alpha, 1e-6);
    }
  }
}

TEST(Chernoff, GridSearchAgreement) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const auto p = msd::testing::random_categorical(5, rng);
    const auto q = msd::testing::random_categorical(5, rng);
    double best = INFINITY;
    for (int i = 0; i <= 10000; ++i) {
      const double a = i / 10000.0;
      double s = 0.0;
      for (std::size_t j = 0; j < 5; ++j) s += std::pow(p[j], a) * std::pow(q[j], 1.0 - a);
      best = std::min(best, s);
    }
    EXPECT_NEAR(msd::chernoff_information(p, q), -std::log(best), 1e-7);
  }
}

TEST(ProductTv, Examples) {
  const auto p = Categorical::bernoulli(0.6), q = Categorical::bernoulli(0.5);
  EXPECT_NEAR(msd::product_tv_exact(p, q, 1), msd::tv_distance(p, q), 1e-15);
  EXPECT_NEAR(msd::product_tv_exact(p, q, 2), 0.11, 1e-15);
  EXPECT_EQ(msd::product_tv_exact(p, p, 6), 0.0);
  EXPECT_THROW(msd::product_tv_exact(p, q, 0), msd::DomainError);
}

TEST(ProductTv, BudgetGuard) {
  const auto p = Categorical::uniform(10);
  const auto q = Categorical::from_weights({2, 1, 1, 1, 1, 1, 1, 1, 1, 1});
  EXPECT_NO_THROW(msd::product_tv_exact(p, q, 7));
  EXPECT_THROW(msd::product_tv_exact(p, q, 8), msd::BudgetError);
}

TEST(ProductTv, NondecreasingInN) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const std::size_t k = 2 + t % 3;
    const auto p = msd::testing::random_categorical(k, rng, 0.1);
    const auto q = msd::testing::random_categorical(k, rng, 0.1);
    double prev = 0.0;
    for (std::size_t n = 1; n <= 7; ++n) {
      const double tv = msd::product_tv_exact(p, q, n);
      EXPECT_GE(tv, prev - 1e-12);
      EXPECT_LE(tv, 1.0 + 1e-12);
      prev = tv;
    }
  }
}

TEST(ProductTv, ChernoffRateTrend) {
  // sum_s min(p, q) <= sum_s p^a q^(1-a), so -log(1 - TV_n) / n >= I_c at
  // every n; the excess is the o(n) term and shrinks as n grows.
  std::mt19937_64 rng(19);
  int checked = 0;
  for (int t = 0; t < 40; ++t) {
    const auto p = msd::testing::random_categorical(3, rng);
    const auto q = msd::testing::random_categorical(3, rng);
    const double ic = msd::chernoff_information(p, q);
    double prev = INFINITY;
    for (std::size_t n : {2, 4, 6, 8}) {
      const double tv = msd::product_tv_exact(p, q, n);
      const double rate = -std::log1p(-tv) / static_cast<double>(n);
      EXPECT_GE(rate, ic - 1e-9);
      EXPECT_LE(rate, prev + 1e-12);
      prev = rate;
      ++checked;
    }
  }
  EXPECT_EQ(checked, 160);
}

TEST(MinError, Examples) {
  const auto p = Categorical::bernoulli(0.6), q = Categorical::bernoulli(0.5);
  EXPECT_NEAR(msd::min_error_bruteforce(p, p).min_error, 1.0, 1e-15);
  EXPECT_NEAR(msd::min_error_bruteforce(Categorical({1, 0}), Categorical({0, 1})).min_error, 0.0,
              1e-15);
  const auto r = msd::min_error_bruteforce(p, q);
  EXPECT_NEAR(r.min_error, 0.9, 1e-12);
  EXPECT_EQ(r.lr_region, 0b10u);
  EXPECT_TRUE(r.lr_region_optimal);
}

TEST(MinError, SupportGuard) {
  EXPECT_THROW(msd::min_error_bruteforce(Categorical::uniform(21), Categorical::uniform(21)),
               msd::BudgetError);
}

TEST(MinError, LeCamOnRandomPairs) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 200; ++t) {
    const std::size_t k = 1 + t % 10;
    const auto p = msd::testing::random_categorical(k, rng, 0.15);
    const auto q = msd::testing::random_categorical(k, rng, 0.15);
    const auto r = msd::min_error_bruteforce(p, q);
    EXPECT_NEAR(r.min_error, 1.0 - msd::tv_distance(p, q), 1e-12);
    EXPECT_TRUE(r.lr_region_optimal);
  }
}
