#include "mcf/jacobi.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "mcf/error.hpp"
#include "mcf/matrix.hpp"

namespace mcf {

const char* to_string(StopReason reason) noexcept {
  switch (reason) {
    case StopReason::exact: return "exact";
    case StopReason::degenerate: return "degenerate";
    case StopReason::step_limit: return "step_limit";
  }
  return "unknown";
}

namespace {

// Numeric policy for the two front ends. `split` returns the integer part and
// the remainder; `is_zero` decides termination.
struct ExactArith {
  using Value = Rational;

  static std::pair<Integer, Rational> split(const Rational& x) {
    Integer q = floor_of(x);
    Rational r = x - Rational(q);
    return {std::move(q), std::move(r)};
  }
  static bool is_zero(const Rational& r) { return r == 0; }
  static Rational reciprocal_of(const Rational& r) { return Rational(1) / r; }
  static void check(const Rational&) {}
};

struct FloatArith {
  using Value = double;
  double zero_tol;

  std::pair<Integer, double> split(double x) const {
    double q = std::round(x);
    if (std::abs(x - q) >= zero_tol) q = std::floor(x);
    return {Integer(q), x - q};
  }
  bool is_zero(double r) const { return std::abs(r) < zero_tol; }
  double reciprocal_of(double r) const { return 1.0 / r; }
  void check(double x) const {
    if (!std::isfinite(x) || std::abs(x) > 1.0 / zero_tol) {
      throw Error(ErrorKind::numeric_instability,
                  "complete quotient " + std::to_string(x) + " exceeds 1/zero_tol");
    }
  }
};

void require_steps(std::size_t max_steps) {
  if (max_steps < 1) throw Error(ErrorKind::invalid_argument, "max_steps must be at least 1");
}

FloatArith float_arith(double zero_tol) {
  if (!(zero_tol > 0.0) || !std::isfinite(zero_tol)) {
    throw Error(ErrorKind::invalid_argument, "zero_tol must be a positive finite number");
  }
  return FloatArith{zero_tol};
}

template <class Arith>
ExpansionResult<typename Arith::Value> run_jacobi(const Arith& arith,
                                                  typename Arith::Value alpha,
                                                  typename Arith::Value beta,
                                                  std::size_t max_steps) {
  using T = typename Arith::Value;
  require_steps(max_steps);
  arith.check(alpha);
  arith.check(beta);

  std::vector<Integer> as, bs;
  std::vector<ExpansionState<T>> states;
  StopReason stop = StopReason::step_limit;
  for (std::size_t i = 0; i < max_steps; ++i) {
    states.push_back({alpha, beta, i});
    auto [a, alpha_rem] = arith.split(alpha);
    auto [b, beta_rem] = arith.split(beta);
    as.push_back(std::move(a));
    bs.push_back(std::move(b));
    if (arith.is_zero(beta_rem)) {
      stop = arith.is_zero(alpha_rem) ? StopReason::exact : StopReason::degenerate;
      break;
    }
    alpha = arith.reciprocal_of(beta_rem);
    beta = alpha_rem / beta_rem;
    arith.check(alpha);
    arith.check(beta);
  }
  const std::size_t count = as.size();
  std::vector<Integer> cs(count, Integer(1));
  return ExpansionResult<T>{PartialQuotients(std::move(as), std::move(bs), std::move(cs)), stop,
                            count - 1, std::move(states)};
}

template <class Arith>
PerronResult<typename Arith::Value> run_perron(const Arith& arith,
                                               std::vector<typename Arith::Value> values,
                                               std::size_t max_steps) {
  using T = typename Arith::Value;
  require_steps(max_steps);
  const std::size_t m = values.size();
  if (m < 1) throw Error(ErrorKind::invalid_argument, "Perron expansion needs m >= 1 values");
  for (const auto& v : values) arith.check(v);

  std::vector<std::vector<Integer>> rows(m + 1);
  std::vector<PerronState<T>> states;
  StopReason stop = StopReason::step_limit;
  std::vector<T> rems(m);
  for (std::size_t n = 0; n < max_steps; ++n) {
    states.push_back({values, n});
    for (std::size_t i = 0; i < m; ++i) {
      auto [q, r] = arith.split(values[i]);
      rows[i].push_back(std::move(q));
      rems[i] = std::move(r);
    }
    rows[m].push_back(Integer(1));
    const T& divisor = rems[m - 1];
    if (arith.is_zero(divisor)) {
      bool all_zero = true;
      for (const auto& r : rems) all_zero = all_zero && arith.is_zero(r);
      stop = all_zero ? StopReason::exact : StopReason::degenerate;
      break;
    }
    std::vector<T> next(m);
    next[0] = arith.reciprocal_of(divisor);
    for (std::size_t i = 1; i < m; ++i) next[i] = rems[i - 1] / divisor;
    for (const auto& v : next) arith.check(v);
    values = std::move(next);
  }
  const std::size_t count = rows[0].size();
  return PerronResult<T>{QuotientTable(std::move(rows)), stop, count - 1, std::move(states)};
}

}  // namespace

ExpansionResult<Rational> jacobi_expand(const Rational& alpha, const Rational& beta,
                                        std::size_t max_steps) {
  return run_jacobi(ExactArith{}, alpha, beta, max_steps);
}

ExpansionResult<double> jacobi_expand_float(double alpha, double beta, std::size_t max_steps,
                                            double zero_tol) {
  const FloatArith arith = float_arith(zero_tol);
  if (!std::isfinite(alpha) || !std::isfinite(beta)) {
    throw Error(ErrorKind::invalid_argument, "inputs must be finite");
  }
  return run_jacobi(arith, alpha, beta, max_steps);
}

PerronResult<Rational> perron_expand(const std::vector<Rational>& values, std::size_t max_steps) {
  return run_perron(ExactArith{}, values, max_steps);
}

PerronResult<double> perron_expand_float(const std::vector<double>& values, std::size_t max_steps,
                                         double zero_tol) {
  const FloatArith arith = float_arith(zero_tol);
  for (double v : values) {
    if (!std::isfinite(v)) throw Error(ErrorKind::invalid_argument, "inputs must be finite");
  }
  return run_perron(arith, values, max_steps);
}

std::vector<std::vector<Integer>> perron_convergents(const QuotientTable& quotients) {
  const std::size_t dim = quotients.degree() + 1;
  std::vector<std::vector<Integer>> out;
  out.reserve(quotients.length());
  SquareMatrix product = SquareMatrix::identity(dim);
  std::vector<Integer> column(dim);
  for (std::size_t n = 0; n < quotients.length(); ++n) {
    for (std::size_t r = 0; r < dim; ++r) column[r] = quotients.at(r, n);
    product = product * SquareMatrix::companion(column);
    out.push_back(product.column(0));
  }
  return out;
}

PartialQuotients to_partial_quotients(const QuotientTable& quotients) {
  if (quotients.degree() != 2) {
    throw Error(ErrorKind::invalid_argument,
                "expected a degree-2 table, got degree " + std::to_string(quotients.degree()));
  }
  const auto& rows = quotients.rows();
  return PartialQuotients::with_unit_c0(rows[0], rows[1], rows[2]);
}

}  // namespace mcf
