#include "wbshift/seqspace.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "wbshift/conjugacy.hpp"

namespace wbshift {
namespace {

const Exponent kP1{1.0};
const Exponent kP2{2.0};

TEST(Exponent, RejectsBelowOneAndInfinity) {
  EXPECT_THROW(Exponent{0.5}, PreconditionError);
  EXPECT_THROW(Exponent{INFINITY}, PreconditionError);
  EXPECT_THROW(Exponent{NAN}, PreconditionError);
  EXPECT_NO_THROW(Exponent{1.0});
}

TEST(FinSeqVector, TrimsTrailingZerosAndIndexesFromOne) {
  FinSeqVector x(kP2, {1.0, 0.0, 2.0, 0.0, 0.0});
  EXPECT_EQ(x.support_length(), 3u);
  EXPECT_EQ(x[1], Complex(1.0));
  EXPECT_EQ(x[3], Complex(2.0));
  EXPECT_EQ(x[100], Complex(0.0));
  EXPECT_THROW(x[0], IndexOutOfRange);
  EXPECT_TRUE(FinSeqVector(kP2, {0.0, 0.0}).is_zero());
  EXPECT_THROW(FinSeqVector(kP2, {Complex(NAN, 0.0)}), PreconditionError);
}

TEST(LpNorm, Examples) {
  EXPECT_EQ(lp_norm(FinSeqVector::zero(kP2)), 0.0);
  EXPECT_EQ(lp_norm(FinSeqVector::zero(Exponent{3.0})), 0.0);
  EXPECT_DOUBLE_EQ(lp_norm(FinSeqVector(kP2, {3.0, 4.0})), 5.0);
  EXPECT_DOUBLE_EQ(lp_norm(FinSeqVector(kP1, {1.0, 1.0})), 2.0);
}

TEST(LpNorm, SurvivesHugeCoordinates) {
  FinSeqVector x(kP2, {3e200, 4e200});
  EXPECT_DOUBLE_EQ(lp_norm(x), 5e200);
}

TEST(LpNorm, MatchesLongDoubleOracle) {
  SampleSpec spec;
  spec.count = 50;
  for (double p : {1.0, 1.5, 2.0, 3.0}) {
    spec.p = Exponent{p};
    for (const auto& x : random_samples(spec)) {
      const long double want = oracle::norm(oracle::widen(x), p);
      EXPECT_NEAR(lp_norm(x), static_cast<double>(want), 1e-13 * static_cast<double>(want));
    }
  }
}

TEST(TailPowerSum, Examples) {
  FinSeqVector x(kP2, {1.0, 1.0});
  EXPECT_DOUBLE_EQ(tail_power_sum(x, 1), 2.0);
  EXPECT_DOUBLE_EQ(tail_power_sum(x, 2), 1.0);
  EXPECT_EQ(tail_power_sum(x, 3), 0.0);
  EXPECT_EQ(tail_power_sum(x, 50), 0.0);
  EXPECT_THROW(tail_power_sum(x, 0), PreconditionError);
}

TEST(TailPowerSum, TelescopesAndDecreases) {
  SampleSpec spec;
  spec.count = 200;
  spec.zero_fraction = 0.2;
  for (double p : {1.0, 2.0, 3.0}) {
    spec.p = Exponent{p};
    for (const auto& x : random_samples(spec)) {
      const auto tails = tail_power_sums(x);
      ASSERT_EQ(tails.size(), x.support_length() + 1);
      EXPECT_NEAR(tails[0], std::pow(lp_norm(x), p), 1e-12 * tails[0]);
      for (std::size_t k = 1; k <= x.support_length(); ++k) {
        const double here = tail_power_sum(x, k);
        const double next = tail_power_sum(x, k + 1);
        EXPECT_EQ(here, tails[k - 1]);
        EXPECT_LE(next, here);
        EXPECT_NEAR(here - next, modulus_pow(x[k], p), 1e-12 * here);
      }
    }
  }
}

TEST(ApplyShift, Examples) {
  const auto two_b2 = ShiftOperator::constant(2.0, kP2);
  const auto y = apply_shift(two_b2, FinSeqVector(kP2, {1.0, 1.0}));
  EXPECT_EQ(y.support_length(), 1u);
  EXPECT_EQ(y[1], Complex(2.0));

  EXPECT_TRUE(apply_shift(two_b2, FinSeqVector::zero(kP2)).is_zero());

  const ShiftOperator blocks(WeightSequence::balanced_blocks(2.0, 0.5), kP2);
  const auto z = apply_shift(blocks, FinSeqVector(kP2, {0.0, 1.0}));
  EXPECT_EQ(z.support_length(), 1u);
  EXPECT_EQ(z[1], Complex(2.0));
}

TEST(ApplyShift, RejectsExponentMismatch) {
  const auto T = ShiftOperator::constant(2.0, kP2);
  EXPECT_THROW(apply_shift(T, FinSeqVector(kP1, {1.0, 1.0})), ExponentMismatch);
}

TEST(ApplyShift, ExplicitWeightsRunOut) {
  const ShiftOperator T(WeightSequence::explicit_list({2.0}), kP2);
  EXPECT_NO_THROW(apply_shift(T, FinSeqVector(kP2, {1.0, 1.0})));
  EXPECT_THROW(apply_shift(T, FinSeqVector(kP2, {1.0, 1.0, 1.0})), IndexOutOfRange);
}

TEST(ApplyShift, BoundedByWeightSupremum) {
  SampleSpec spec;
  spec.count = 200;
  const std::vector<ShiftOperator> ops = {
      ShiftOperator::constant(Complex(0.0, 3.0), kP2),
      ShiftOperator(WeightSequence::balanced_blocks(2.0, 0.5), kP2),
      ShiftOperator(WeightSequence::power_law(1.5), kP2),
      ShiftOperator(WeightSequence::power_law(-1.0), kP2),
  };
  for (const auto& T : ops) {
    for (const auto& x : random_samples(spec)) {
      EXPECT_LE(lp_norm(apply_shift(T, x)), T.norm_bound() * lp_norm(x) * (1 + 1e-14));
    }
  }
}

TEST(IterateShift, Examples) {
  const auto T = ShiftOperator::constant(2.0, kP2);
  const FinSeqVector x(kP2, {1.0, 2.0, 3.0});
  const auto same = iterate_shift(T, x, 0);
  EXPECT_EQ(same.support_length(), 3u);
  EXPECT_EQ(same[2], Complex(2.0));

  const auto y = iterate_shift(T, FinSeqVector::unit(kP2, 3), 2);
  EXPECT_EQ(y.support_length(), 1u);
  EXPECT_EQ(y[1], Complex(4.0));

  EXPECT_TRUE(iterate_shift(T, x, 3).is_zero());
  EXPECT_TRUE(iterate_shift(T, x, 1000).is_zero());
}

TEST(WeightAt, Examples) {
  EXPECT_EQ(weight_at(WeightSequence::constant(2.0), 17), Complex(2.0));
  const auto t1 = WeightSequence::power_law(0.5);
  EXPECT_EQ(weight_at(t1, 1), Complex(1.0));
  EXPECT_NEAR(weight_at(t1, 4).real(), std::sqrt(4.0 / 3.0), 1e-15);
  EXPECT_NEAR(weight_at(t1, 2).real(), std::sqrt(2.0), 1e-15);
  EXPECT_EQ(weight_at(WeightSequence::balanced_blocks(2.0, 0.5), 3), Complex(2.0));
}

TEST(WeightAt, ExplicitIndexBeyondList) {
  const auto w = WeightSequence::explicit_list({1.0, 2.0});
  EXPECT_EQ(weight_at(w, 2), Complex(2.0));
  EXPECT_THROW(weight_at(w, 3), IndexOutOfRange);
  EXPECT_THROW(weight_at(w, 0), IndexOutOfRange);
}

TEST(WeightAt, RejectsZeroWeights) {
  EXPECT_THROW(WeightSequence::constant(0.0), PreconditionError);
  EXPECT_THROW(WeightSequence::explicit_list({1.0, 0.0}), PreconditionError);
  EXPECT_THROW(WeightSequence::balanced_blocks(0.0, 2.0), PreconditionError);
  EXPECT_THROW(WeightSequence::explicit_list({}), PreconditionError);
}

TEST(WeightAt, BlocksMatchLiteralEnumeration) {
  for (auto order : {BlockOrder::AFirst, BlockOrder::BFirst}) {
    const auto w = WeightSequence::balanced_blocks(3.0, 0.25, order);
    const double lead = order == BlockOrder::AFirst ? 3.0 : 0.25;
    const double trail = order == BlockOrder::AFirst ? 0.25 : 3.0;
    const auto want = oracle::enumerate_blocks(lead, trail, 5000);
    for (std::size_t n = 1; n <= want.size(); ++n) ASSERT_EQ(w.at(n).real(), want[n - 1]) << "n = " << n;
  }
}

TEST(WeightSequence, SupModulus) {
  EXPECT_EQ(WeightSequence::constant(Complex(0.0, -3.0)).sup_modulus(), 3.0);
  EXPECT_EQ(WeightSequence::explicit_list({1.0, -4.0, 2.0}).sup_modulus(), 4.0);
  EXPECT_EQ(WeightSequence::balanced_blocks(0.5, 2.0).sup_modulus(), 2.0);
  EXPECT_NEAR(WeightSequence::power_law(0.5).sup_modulus(), std::sqrt(2.0), 1e-15);
  // every weight is below the reported supremum
  const auto w = WeightSequence::power_law(2.5);
  for (std::size_t n = 1; n < 1000; ++n) EXPECT_LE(std::abs(w.at(n)), w.sup_modulus() * (1 + 1e-15));
}

TEST(Beta, Examples) {
  EXPECT_EQ(beta(WeightSequence::constant(2.0), 10), Complex(1024.0));
  EXPECT_EQ(beta(WeightSequence::balanced_blocks(2.0, 0.5), 2), Complex(1.0));
  const auto t1 = WeightSequence::power_law(0.5);
  for (std::size_t n : {1u, 2u, 10u, 1000u}) EXPECT_NEAR(std::abs(beta(t1, n)), std::sqrt(double(n)), 1e-12 * std::sqrt(double(n)));
}

TEST(Beta, RecurrenceHoldsForEveryGenerator) {
  const std::vector<WeightSequence> gens = {
      WeightSequence::constant(Complex(1.1, 0.3)),
      WeightSequence::explicit_list({2.0, -0.5, Complex(0.0, 1.0), 3.0, 0.7, 1.0, 1.0, 0.2}),
      WeightSequence::balanced_blocks(2.0, 0.5),
      WeightSequence::balanced_blocks(Complex(0.0, 0.5), 2.0, BlockOrder::BFirst),
      WeightSequence::power_law(0.5),
      WeightSequence::power_law(-1.25),
  };
  for (const auto& w : gens) {
    const std::size_t N = w.length().value_or(200);
    for (std::size_t n = 1; n < N; ++n) {
      const Complex lhs = beta(w, n + 1);
      const Complex rhs = beta(w, n) * w.at(n + 1);
      EXPECT_LE(std::abs(lhs - rhs), 1e-12 * std::abs(lhs)) << w.kind() << " n = " << n;
      EXPECT_NEAR(log_abs_beta(w, n), std::log(std::abs(beta(w, n))), 1e-12 * (1 + std::abs(log_abs_beta(w, n))));
    }
  }
}

TEST(Beta, PowerLawHalfIsSqrtN) {
  const auto t1 = WeightSequence::power_law(0.5);
  Complex b = 1.0;
  for (std::size_t n = 1; n <= 10000; ++n) {
    b *= t1.at(n);
    ASSERT_NEAR(std::abs(b), std::sqrt(double(n)), 1e-12 * std::sqrt(double(n))) << n;
  }
  EXPECT_NEAR(std::abs(beta(t1, 10000)), 100.0, 1e-10);
}

TEST(Beta, BalancedPairsCancelInLogSpace) {
  const auto w = WeightSequence::balanced_blocks(2.0, 0.5);
  for (std::size_t k = 1; k <= 60; ++k) EXPECT_NEAR(log_abs_beta(w, k * (k + 1)), 0.0, 1e-10);
}

TEST(Beta, LargeNSwitchesToPolarForm) {
  const auto w = WeightSequence::constant(Complex(0.0, 2.0));  // 2i
  // |beta(500)| = 2^500 > e^300; direct product would still fit, compare with it
  const Complex b = beta(w, 500);
  EXPECT_NEAR(std::log(std::abs(b)), 500 * std::log(2.0), 1e-10);
  // (2i)^500 = 2^500 * i^500 = 2^500
  EXPECT_NEAR(std::arg(b), 0.0, 1e-9);
  EXPECT_NO_THROW(beta(w, 2000));
  EXPECT_NEAR(log_abs_beta(w, 2000), 2000 * std::log(2.0), 1e-9);
}

}  // namespace
}  // namespace wbshift
