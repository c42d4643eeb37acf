#pragma once

#include <cstddef>
#include <vector>

#include "mcf/integer.hpp"
#include "mcf/mcf_core.hpp"

namespace mcf {

/// Why an expansion stopped.
///  - exact: every fractional part at the last step is zero; the produced
///    finite fraction re-evaluates to the input.
///  - degenerate: the divisor's fractional part (beta_i - b_i, or the last
///    Perron component) vanished while another component's did not. The
///    recurrence cannot continue; the finite fraction loses that remainder.
///  - step_limit: max_steps indices were produced without hitting zero.
enum class StopReason { exact, degenerate, step_limit };

const char* to_string(StopReason reason) noexcept;

/// Complete quotients (alpha_i, beta_i) at step i. gamma_i is 1 throughout
/// the algorithm and is not stored.
template <class T>
struct ExpansionState {
  T alpha;
  T beta;
  std::size_t step = 0;
};

template <class T>
struct ExpansionResult {
  PartialQuotients quotients;  // c = (1, 1, ..., 1)
  StopReason stop = StopReason::step_limit;
  std::size_t last_step = 0;
  std::vector<ExpansionState<T>> states;

  bool terminated() const noexcept { return stop != StopReason::step_limit; }
  bool exact() const noexcept { return stop == StopReason::exact; }
};

/// Jacobi expansion of a rational pair:
///   a_i = floor(alpha_i), b_i = floor(beta_i),
///   alpha_{i+1} = 1 / (beta_i - b_i),
///   beta_{i+1}  = (alpha_i - a_i) / (beta_i - b_i).
/// Produces at most max_steps indices (max_steps >= 1).
ExpansionResult<Rational> jacobi_expand(const Rational& alpha, const Rational& beta,
                                        std::size_t max_steps);

/// Same recurrence on doubles. A value within zero_tol of an integer is
/// snapped to it, so fractional parts below zero_tol count as zero. Throws
/// NumericInstability if a complete quotient exceeds 1/zero_tol in magnitude.
ExpansionResult<double> jacobi_expand_float(double alpha, double beta, std::size_t max_steps,
                                            double zero_tol);

template <class T>
struct PerronState {
  std::vector<T> values;  // alpha_n^(1) .. alpha_n^(m)
  std::size_t step = 0;
};

template <class T>
struct PerronResult {
  QuotientTable quotients;  // m rows of partial quotients plus a row of 1s
  StopReason stop = StopReason::step_limit;
  std::size_t last_step = 0;
  std::vector<PerronState<T>> states;

  std::size_t degree() const noexcept { return quotients.degree(); }
  bool terminated() const noexcept { return stop != StopReason::step_limit; }
  bool exact() const noexcept { return stop == StopReason::exact; }
};

/// Perron's degree-m generalisation:
///   a_n^(i) = floor(alpha_n^(i)),
///   alpha_{n+1}^(1) = 1 / (alpha_n^(m) - a_n^(m)),
///   alpha_{n+1}^(i) = (alpha_n^(i-1) - a_n^(i-1)) / (alpha_n^(m) - a_n^(m)).
/// m = 1 is the classical continued fraction, m = 2 is jacobi_expand.
PerronResult<Rational> perron_expand(const std::vector<Rational>& values, std::size_t max_steps);

PerronResult<double> perron_expand_float(const std::vector<double>& values, std::size_t max_steps,
                                         double zero_tol);

/// Convergent vectors of a degree-m table (m+1 rows): column 0 of the running
/// product of (m+1)x(m+1) matrices whose first column is the table column
/// and whose other columns shift. For m = 2 this is convergents_by_matrix.
std::vector<std::vector<Integer>> perron_convergents(const QuotientTable& quotients);

/// Degree-2 table back to PartialQuotients (row 2 becomes c, c_0 reset to 1).
PartialQuotients to_partial_quotients(const QuotientTable& quotients);

}  // namespace mcf
