#include "mcf/identities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "mcf/error.hpp"

namespace mcf {

Integer factorial(std::size_t n) {
  Integer f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

PartialQuotients factorial_mcf(std::size_t n_max, const Integer& b0, const Integer& c1) {
  std::vector<Integer> a(n_max + 1), b(n_max + 1), c(n_max + 1);
  for (std::size_t i = 0; i <= n_max; ++i) {
    a[i] = i == 0 ? Integer(4) : Integer(i + 1);
    if (i == 0) {
      b[i] = b0;
    } else if (i == 1) {
      b[i] = 1;
    } else {
      b[i] = Integer(i - 1);
    }
    if (i == 0) {
      c[i] = 1;
    } else if (i == 1) {
      c[i] = c1;
    } else if (i == 2) {
      c[i] = 1;
    } else {
      c[i] = Integer(i - 2);
    }
  }
  return PartialQuotients(std::move(a), std::move(b), std::move(c));
}

IdentityReport check_factorial_identity(std::size_t n_max) {
  IdentityReport report{"factorial", -1, 0.0, std::nullopt, std::nullopt};
  const auto triples = convergents_by_tail_recurrence(factorial_mcf(n_max));
  Integer fact_n = 1;  // n!
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (n > 0) fact_n *= n;
    const Integer expected = fact_n * (n + 2) * (n + 1) + fact_n * (n + 1) + fact_n;
    const Integer diff = boost::multiprecision::abs(triples[n].A - expected);
    if (diff != 0) {
      report.max_abs_error = std::max(report.max_abs_error, diff.convert_to<double>());
      if (!report.witness) report.witness = static_cast<long>(n);
    } else if (!report.witness) {
      report.verified_up_to = static_cast<long>(n);
    }
  }
  return report;
}

Rational estimate_limit_exact(std::size_t n_max) {
  if (n_max < 5) throw Error(ErrorKind::invalid_argument, "estimate_limit needs n_max >= 5");
  const auto last = convergents_by_tail_recurrence(factorial_mcf(n_max)).back();
  return ratio(last.A, last.C);
}

double estimate_limit(std::size_t n_max) { return to_double(estimate_limit_exact(n_max)); }

PartialQuotients e_fraction(std::size_t n_max) {
  std::vector<Integer> a(n_max + 1), b(n_max + 1);
  for (std::size_t i = 0; i <= n_max; ++i) {
    a[i] = i == 0 ? Integer(2) : i == 1 ? Integer(1) : Integer(i);
    b[i] = i <= 1 ? Integer(i) : Integer(i - 1);  // b_0 unused
  }
  return classical_as_mcf(a, b);
}

IdentityReport check_e_fraction(std::size_t n_max) {
  if (n_max < 3) throw Error(ErrorKind::invalid_argument, "check_e_fraction needs n_max >= 3");
  IdentityReport report{"e", -1, 0.0, std::nullopt, std::nullopt};
  const auto triples = convergents_by_tail_recurrence(e_fraction(n_max));
  double previous_error = INFINITY;
  Integer fact_n = 1;
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (n > 0) fact_n *= n;
    const Integer expected = fact_n * (n + 1) + fact_n;
    const Integer diff = boost::multiprecision::abs(triples[n].A - expected);
    const double error = std::abs(to_double(ratio(triples[n].A, triples[n].C)) - std::numbers::e);
    const bool ok = diff == 0 && error <= previous_error;
    previous_error = error;
    if (!ok) {
      report.max_abs_error = std::max(report.max_abs_error, diff.convert_to<double>());
      if (!report.witness) report.witness = static_cast<long>(n);
    } else if (!report.witness) {
      report.verified_up_to = static_cast<long>(n);
    }
  }
  report.limit_error = previous_error;
  return report;
}

}  // namespace mcf
