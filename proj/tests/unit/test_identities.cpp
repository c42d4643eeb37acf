#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mcf/error.hpp"
#include "mcf/identities.hpp"
#include "mcf/mcf_core.hpp"

namespace mcf {
namespace {

TEST(Factorial, SmallValues) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(1), 1);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(factorial(25), Integer("15511210043330985984000000"));
}

TEST(FactorialMcf, Quotients) {
  const auto pq = factorial_mcf(5);
  EXPECT_EQ(pq.a(0), 4);
  EXPECT_EQ(pq.a(1), 2);
  EXPECT_EQ(pq.a(2), 3);
  EXPECT_EQ(pq.a(5), 6);
  EXPECT_EQ(pq.b(0), 0);
  EXPECT_EQ(pq.b(1), 1);
  EXPECT_EQ(pq.b(2), 1);
  EXPECT_EQ(pq.b(3), 2);
  EXPECT_EQ(pq.c(0), 1);
  EXPECT_EQ(pq.c(1), 0);
  EXPECT_EQ(pq.c(2), 1);
  EXPECT_EQ(pq.c(3), 1);
  EXPECT_EQ(pq.c(4), 2);
}

TEST(FactorialMcf, FirstNumerators) {
  const auto triples = convergents_by_matrix(factorial_mcf(3));
  EXPECT_EQ(triples[0].A, 4);
  EXPECT_EQ(triples[1].A, 9);
  EXPECT_EQ(triples[2].A, 32);
  EXPECT_EQ(triples[3].A, 150);
}

TEST(FactorialMcf, PlaceholdersDoNotMatter) {
  const auto base = convergents_by_matrix(factorial_mcf(12));
  for (int b0 : {-3, 0, 7}) {
    for (int c1 : {-2, 0, 5}) {
      const auto other = convergents_by_matrix(factorial_mcf(12, b0, c1));
      for (std::size_t i = 0; i < base.size(); ++i) {
        EXPECT_EQ(other[i].A, base[i].A);
        EXPECT_EQ(other[i].C, base[i].C);
      }
    }
  }
}

TEST(FactorialIdentity, HoldsUpToForty) {
  const auto report = check_factorial_identity(40);
  EXPECT_TRUE(report.verified());
  EXPECT_EQ(report.verified_up_to, 40);
  EXPECT_EQ(report.max_abs_error, 0.0);
  EXPECT_FALSE(report.witness);
  EXPECT_EQ(report.name, "factorial");
}

TEST(FactorialIdentity, ClosedForm) {
  const auto triples = convergents_by_tail_recurrence(factorial_mcf(20));
  for (std::size_t n = 0; n <= 20; ++n) {
    EXPECT_EQ(triples[n].A, factorial(n + 2) + factorial(n + 1) + factorial(n)) << n;
  }
}

TEST(LimitEstimate, MatchesPrintedDigits) {
  EXPECT_NEAR(estimate_limit(15), 4.54752, 1e-4);
  for (std::size_t n = 10; n < 15; ++n) {
    EXPECT_LT(std::abs(estimate_limit(n + 1) - estimate_limit(n)), 1e-5) << n;
  }
  EXPECT_NEAR(to_double(estimate_limit_exact(15)), estimate_limit(15), 1e-15);
}

TEST(LimitEstimate, RejectsShortPrefix) {
  EXPECT_THROW(estimate_limit(4), Error);
  EXPECT_THROW(estimate_limit_exact(2), Error);
}

TEST(EFraction, Quotients) {
  const auto pq = e_fraction(4);
  EXPECT_EQ(pq.a(0), 2);
  EXPECT_EQ(pq.a(1), 1);
  EXPECT_EQ(pq.a(2), 2);
  EXPECT_EQ(pq.a(4), 4);
  EXPECT_EQ(pq.b(1), 1);
  EXPECT_EQ(pq.b(2), 1);
  EXPECT_EQ(pq.b(4), 3);
  for (std::size_t i = 0; i < pq.size(); ++i) EXPECT_EQ(pq.c(i), i == 0 ? 1 : 0);
}

TEST(EFraction, ApproachesE) {
  const double value = to_double(evaluate_finite(e_fraction(12)).first);
  EXPECT_NEAR(value, std::numbers::e, 1e-6);
  double previous = 1.0;
  for (std::size_t n = 3; n <= 15; ++n) {
    const double error = std::abs(to_double(evaluate_finite(e_fraction(n)).first) - std::numbers::e);
    EXPECT_LE(error, previous) << n;
    previous = error;
  }
}

TEST(EFractionCheck, Verified) {
  const auto report = check_e_fraction(15);
  EXPECT_TRUE(report.verified());
  EXPECT_EQ(report.verified_up_to, 15);
  ASSERT_TRUE(report.limit_error);
  EXPECT_LT(*report.limit_error, 1e-10);
  EXPECT_THROW(check_e_fraction(2), Error);
}

}  // namespace
}  // namespace mcf
