#include <gtest/gtest.h>

#include <cmath>

#include "instances.hpp"
#include "mcf/error.hpp"
#include "mcf/jacobi.hpp"
#include "oracles.hpp"

namespace mcf {
namespace {

using testing::InstanceGenerator;
using V = std::vector<Integer>;

TEST(JacobiExpand, IntegerPairStopsImmediately) {
  const auto r = jacobi_expand(7, 3, 10);
  EXPECT_TRUE(r.terminated());
  EXPECT_TRUE(r.exact());
  EXPECT_EQ(r.last_step, 0u);
  EXPECT_EQ(r.quotients, PartialQuotients(V{7}, V{3}, V{1}));
}

TEST(JacobiExpand, FiveThirdsSevenThirds) {
  const auto r = jacobi_expand(Rational(5, 3), Rational(7, 3), 10);
  EXPECT_EQ(r.stop, StopReason::exact);
  EXPECT_EQ(r.quotients, PartialQuotients(V{1, 3}, V{2, 2}, V{1, 1}));
  ASSERT_EQ(r.states.size(), 2u);
  EXPECT_EQ(r.states[1].alpha, 3);
  EXPECT_EQ(r.states[1].beta, 2);
  EXPECT_EQ(evaluate_finite(r.quotients), (RationalPair{Rational(5, 3), Rational(7, 3)}));
}

TEST(JacobiExpand, NegativeInputsUseTrueFloor) {
  const auto r = jacobi_expand(Rational(-5, 3), Rational(-7, 3), 30);
  ASSERT_TRUE(r.exact());
  EXPECT_EQ(r.quotients, PartialQuotients(V{-2, 1, 2}, V{-3, 0, 1}, V{1, 1, 1}));
  EXPECT_EQ(evaluate_finite(r.quotients), (RationalPair{Rational(-5, 3), Rational(-7, 3)}));

  // -7/2 ends with an integral beta behind a fractional alpha.
  EXPECT_EQ(jacobi_expand(Rational(-5, 3), Rational(-7, 2), 30).stop, StopReason::degenerate);
}

TEST(JacobiExpand, IntegralBetaWithFractionalAlphaIsDegenerate) {
  const auto r = jacobi_expand(Rational(1, 2), 0, 10);
  EXPECT_EQ(r.stop, StopReason::degenerate);
  EXPECT_TRUE(r.terminated());
  EXPECT_FALSE(r.exact());
  EXPECT_EQ(r.last_step, 0u);
}

TEST(JacobiExpand, StepLimit) {
  // Quadratic-looking pair with large denominators still terminates eventually
  // (rationals always do); one step is not enough.
  const auto r = jacobi_expand(Rational(31, 17), Rational(29, 13), 1);
  EXPECT_EQ(r.stop, StopReason::step_limit);
  EXPECT_FALSE(r.terminated());
  EXPECT_EQ(r.quotients.size(), 1u);
  EXPECT_THROW(jacobi_expand(1, 1, 0), Error);
}

TEST(JacobiExpand, CompleteQuotientRelationsHoldExactly) {
  InstanceGenerator gen(8);
  for (int trial = 0; trial < 300; ++trial) {
    const auto r = jacobi_expand(gen.rational(50, 50), gen.rational(50, 50), 30);
    const auto& q = r.quotients;
    for (std::size_t i = 0; i + 1 < r.states.size(); ++i) {
      const auto& now = r.states[i];
      const auto& next = r.states[i + 1];
      EXPECT_EQ(now.alpha, Rational(q.a(i)) + next.beta / next.alpha);
      EXPECT_EQ(now.beta, Rational(q.b(i)) + Rational(1) / next.alpha);
    }
  }
}

TEST(JacobiExpand, ExactTerminationRoundTrips) {
  InstanceGenerator gen(314);
  int exact = 0;
  for (int trial = 0; trial < 800; ++trial) {
    const Rational alpha = gen.rational(50, 50);
    const Rational beta = gen.rational(50, 50);
    const auto r = jacobi_expand(alpha, beta, 30);
    ASSERT_TRUE(r.terminated()) << alpha << ", " << beta;  // rationals always terminate
    if (!r.exact()) continue;
    ++exact;
    EXPECT_EQ(evaluate_finite(r.quotients), (RationalPair{alpha, beta}));
  }
  EXPECT_GE(exact, 300);
}

TEST(JacobiExpandFloat, IntegerPair) {
  const auto r = jacobi_expand_float(2.0, 3.0, 10, 1e-12);
  EXPECT_TRUE(r.exact());
  EXPECT_EQ(r.quotients, PartialQuotients(V{2}, V{3}, V{1}));
}

TEST(JacobiExpandFloat, RationalInputsMatchExactMode) {
  InstanceGenerator gen(2718);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Rational alpha = gen.rational(50, 50);
    const Rational beta = gen.rational(50, 50);
    const auto exact = jacobi_expand(alpha, beta, 30);
    if (!exact.exact() || exact.quotients.size() > 8) continue;
    const auto approx = jacobi_expand_float(to_double(alpha), to_double(beta), 30, 1e-9);
    EXPECT_EQ(approx.quotients, exact.quotients) << alpha << ", " << beta;
    ++checked;
  }
  EXPECT_GT(checked, 50);
  const auto r = jacobi_expand_float(5.0 / 3.0, 7.0 / 3.0, 10, 1e-9);
  EXPECT_EQ(r.quotients, PartialQuotients(V{1, 3}, V{2, 2}, V{1, 1}));
}

TEST(JacobiExpandFloat, CubeRootPairConvergentsApproachInputs) {
  const double alpha = std::cbrt(4.0);
  const double beta = std::cbrt(2.0);
  const auto r = jacobi_expand_float(alpha, beta, 10, 1e-12);
  ASSERT_EQ(r.quotients.size(), 10u);
  const auto triples = convergents_by_matrix(r.quotients);
  std::vector<double> errors;
  for (const auto& t : triples) {
    errors.push_back(std::abs(to_double(ratio(t.A, t.C)) - alpha));
  }
  // Not monotone step to step, but the error shrinks steadily overall.
  EXPECT_LT(errors[6], errors[2] * 1e-2);
  EXPECT_LT(errors.back(), 1e-6);
}

TEST(JacobiExpandFloat, RejectsBadArguments) {
  try {
    jacobi_expand_float(1e20, 1.0, 5, 1e-12);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::numeric_instability);
  }
  EXPECT_THROW(jacobi_expand_float(1.0, NAN, 5, 1e-12), Error);
  EXPECT_THROW(jacobi_expand_float(1.0, 1.0, 5, 0.0), Error);
}

TEST(PerronExpand, DegreeOneIsEuclid) {
  const auto r = perron_expand({Rational(10, 7)}, 30);
  EXPECT_TRUE(r.exact());
  EXPECT_EQ(r.quotients.rows()[0], (V{1, 2, 3}));
  InstanceGenerator gen(1);
  for (int trial = 0; trial < 100; ++trial) {
    const Integer p = gen.uniform(-200, 200);
    const Integer q = gen.uniform(1, 200);
    EXPECT_EQ(perron_expand({Rational(p, q)}, 100).quotients.rows()[0],
              testing::euclid_quotients(p, q));
  }
}

TEST(PerronExpand, DegreeTwoMatchesJacobi) {
  InstanceGenerator gen(4242);
  for (int trial = 0; trial < 150; ++trial) {
    const Rational alpha = gen.rational(50, 50);
    const Rational beta = gen.rational(50, 50);
    const auto j = jacobi_expand(alpha, beta, 30);
    const auto p = perron_expand({alpha, beta}, 30);
    EXPECT_EQ(p.stop, j.stop);
    EXPECT_EQ(to_partial_quotients(p.quotients), j.quotients);
  }
  const auto p = perron_expand({Rational(5, 3), Rational(7, 3)}, 10);
  EXPECT_EQ(p.quotients, QuotientTable({{1, 3}, {2, 2}, {1, 1}}));
}

TEST(PerronExpand, IntegerInputsStopAtStepZero) {
  const auto r = perron_expand({Rational(2), Rational(-3), Rational(4)}, 10);
  EXPECT_TRUE(r.exact());
  EXPECT_EQ(r.last_step, 0u);
  EXPECT_EQ(r.degree(), 3u);
  EXPECT_THROW(perron_expand({}, 10), Error);
}

TEST(PerronExpand, CompleteQuotientRelationsDegreeThree) {
  InstanceGenerator gen(17);
  for (int trial = 0; trial < 100; ++trial) {
    const auto r = perron_expand({gen.rational(30, 30), gen.rational(30, 30), gen.rational(30, 30)}, 20);
    const auto& rows = r.quotients.rows();
    for (std::size_t n = 0; n + 1 < r.states.size(); ++n) {
      const auto& now = r.states[n].values;
      const auto& next = r.states[n + 1].values;
      for (std::size_t i = 1; i < 3; ++i) {
        EXPECT_EQ(now[i - 1], Rational(rows[i - 1][n]) + next[i] / next[0]);
      }
      EXPECT_EQ(now[2], Rational(rows[2][n]) + Rational(1) / next[0]);
    }
  }
}

TEST(PerronExpandFloat, MatchesExactOnRationals) {
  const auto r = perron_expand_float({10.0 / 7.0}, 10, 1e-9);
  EXPECT_EQ(r.quotients.rows()[0], (V{1, 2, 3}));
}

TEST(PerronConvergents, FactorialPrefix) {
  const auto vs = perron_convergents(QuotientTable({{4, 2, 3}, {0, 1, 1}, {1, 0, 1}}));
  EXPECT_EQ(vs[0][0], 4);
  EXPECT_EQ(vs[1][0], 9);
  EXPECT_EQ(vs[2][0], 32);
}

TEST(PerronConvergents, DegreeOneGivesClassicalConvergents) {
  const auto vs = perron_convergents(QuotientTable({{1, 2, 3}, {1, 1, 1}}));
  ASSERT_EQ(vs.size(), 3u);
  EXPECT_EQ(vs[0], (V{1, 1}));
  EXPECT_EQ(vs[1], (V{3, 2}));
  EXPECT_EQ(vs[2], (V{10, 7}));
}

TEST(PerronConvergents, SingleStepDegreeThree) {
  const auto vs = perron_convergents(QuotientTable({{2}, {3}, {4}, {1}}));
  EXPECT_EQ(vs.front(), (V{2, 3, 4, 1}));
}

TEST(PerronConvergents, DegreeTwoEqualsMatrixProduct) {
  InstanceGenerator gen(6);
  for (int trial = 0; trial < 200; ++trial) {
    const PartialQuotients pq = gen.quotients(static_cast<std::size_t>(gen.uniform(0, 10)), -3, 5);
    const auto vs = perron_convergents(to_table(pq));
    const auto ts = convergents_by_matrix(pq);
    ASSERT_EQ(vs.size(), ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
      EXPECT_EQ(vs[i], (V{ts[i].A, ts[i].B, ts[i].C}));
    }
  }
}

}  // namespace
}  // namespace mcf
