#pragma once

#include <optional>
#include <string>

#include "mcf/integer.hpp"
#include "mcf/mcf_core.hpp"

namespace mcf {

struct IdentityReport {
  std::string name;
  /// Largest n such that the identity held for every index 0..n; -1 if it
  /// already fails at 0.
  long verified_up_to = -1;
  /// Largest |lhs - rhs| over the checked indices; 0 when verified.
  double max_abs_error = 0.0;
  /// For identities with a limit: |value at n_max - limit|.
  std::optional<double> limit_error;
  /// First failing index; present iff verification failed.
  std::optional<long> witness;

  bool verified() const noexcept { return !witness.has_value(); }
};

/// a = (4, 2, 3, 4, ...), b = (b_0, 1, 1, 2, 3, ...), c = (1, c_1, 1, 1, 2, ...),
/// i.e. a_i = i+1, b_i = i-1, c_i = i-2 past the first terms. b_0 and c_1
/// never reach A_n or C_n and default to 0.
PartialQuotients factorial_mcf(std::size_t n_max, const Integer& b0 = 0, const Integer& c1 = 0);

/// Checks A_n = (n+2)! + (n+1)! + n! exactly for n = 0..n_max.
IdentityReport check_factorial_identity(std::size_t n_max);

/// A_n / C_n of the factorial fraction at n = n_max (n_max >= 5).
double estimate_limit(std::size_t n_max);
Rational estimate_limit_exact(std::size_t n_max);

/// The classical fraction 2 + 1/(1 + 1/(2 + 2/(3 + 3/(4 + ...)))) truncated
/// at index n_max: a = (2, 1, 2, 3, ...), b_i = (-, 1, 1, 2, 3, ...).
PartialQuotients e_fraction(std::size_t n_max);

/// Checks numerator_n = (n+1)! + n! exactly for n = 0..n_max and that
/// |value_n - e| never grows from one index to the next. n_max >= 3.
IdentityReport check_e_fraction(std::size_t n_max);

Integer factorial(std::size_t n);

}  // namespace mcf
