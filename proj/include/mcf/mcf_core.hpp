#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mcf/integer.hpp"

namespace mcf {

/// Partial quotients (a, b, c) of a finite degree-2 multidimensional continued
/// fraction [a_0^n, b_0^n, c_0^n]. Immutable once built.
///
/// c_0 never appears in the nested fraction itself, but the 3x3 matrix form
/// of the convergents needs it to be 1, so construction rejects anything else.
/// Entries the result provably ignores (b_0 and c_1 for A, usually written "-")
/// are still stored as ordinary integers chosen by the caller.
class PartialQuotients {
 public:
  PartialQuotients(std::vector<Integer> a, std::vector<Integer> b, std::vector<Integer> c);

  /// Same as the constructor but overwrites c_0 with 1 instead of rejecting.
  static PartialQuotients with_unit_c0(std::vector<Integer> a, std::vector<Integer> b,
                                       std::vector<Integer> c);

  std::size_t size() const noexcept { return a_.size(); }
  std::size_t last_index() const noexcept { return a_.size() - 1; }

  std::span<const Integer> a() const noexcept { return a_; }
  std::span<const Integer> b() const noexcept { return b_; }
  std::span<const Integer> c() const noexcept { return c_; }

  const Integer& a(std::size_t i) const { return a_.at(i); }
  const Integer& b(std::size_t i) const { return b_.at(i); }
  const Integer& c(std::size_t i) const { return c_.at(i); }

  /// Value c_0 held before it was normalised to 1. For a shifted object this
  /// is the parent's c_1; for anything built directly it is 1.
  const Integer& displaced_c0() const noexcept { return displaced_c0_; }

  /// Drops index 0: [a_1^n, b_1^n, c_1^n] with the new leading c reset to 1.
  /// Requires size() >= 2.
  PartialQuotients shifted() const;

  /// Keeps indices 0..n.
  PartialQuotients truncated(std::size_t n) const;

  /// Copy with one entry replaced; c_0 cannot be replaced.
  PartialQuotients with_a(std::size_t i, Integer v) const;
  PartialQuotients with_b(std::size_t i, Integer v) const;
  PartialQuotients with_c(std::size_t i, Integer v) const;

  friend bool operator==(const PartialQuotients&, const PartialQuotients&) = default;

 private:
  PartialQuotients() = default;

  std::vector<Integer> a_;
  std::vector<Integer> b_;
  std::vector<Integer> c_;
  Integer displaced_c0_{1};
};

/// (A_index, B_index, C_index): the first column of the convergent matrix.
struct ConvergentTriple {
  Integer A;
  Integer B;
  Integer C;
  std::ptrdiff_t index = 0;

  friend bool operator==(const ConvergentTriple&, const ConvergentTriple&) = default;
};

/// Seed triples read off the identity product: index -1 is (1,0,0) and
/// index -2 is (0,1,0). Only those two indices are accepted.
ConvergentTriple seed_triple(std::ptrdiff_t index);

struct RationalPair {
  Rational first;
  Rational second;

  friend bool operator==(const RationalPair&, const RationalPair&) = default;
};

/// Rectangular table of integer rows, shared by the degree-m convergents and
/// the degree-m tiling counter. For a degree-m fraction it holds m+1 rows:
/// rows 0..m-1 are the partial quotients a^(1)..a^(m), row m the numerators
/// (the degree-2 "c" row).
class QuotientTable {
 public:
  explicit QuotientTable(std::vector<std::vector<Integer>> rows);

  std::size_t degree() const noexcept { return rows_.size() - 1; }
  std::size_t length() const noexcept { return rows_.front().size(); }
  const std::vector<std::vector<Integer>>& rows() const noexcept { return rows_; }
  const Integer& at(std::size_t row, std::size_t index) const { return rows_.at(row).at(index); }

  friend bool operator==(const QuotientTable&, const QuotientTable&) = default;

 private:
  std::vector<std::vector<Integer>> rows_;
};

QuotientTable to_table(const PartialQuotients& pq);

/// Convergents for indices 0..n as the running product of the matrices
///   | a_i 1 0 |
///   | b_i 0 1 |
///   | c_i 0 0 |
std::vector<ConvergentTriple> convergents_by_matrix(const PartialQuotients& pq);

/// X_k = a_k X_{k-1} + b_k X_{k-2} + c_k X_{k-3} for each of A, B, C.
std::vector<ConvergentTriple> convergents_by_tail_recurrence(const PartialQuotients& pq);

/// A(a_0^n, b_0^n, c_0^n) expanded from the front:
///   A(a_k^n) = a_k A(a_{k+1}^n) + b_{k+1} A(a_{k+2}^n) + c_{k+2} A(a_{k+3}^n),
/// memoised on the suffix start k so the cost is linear.
Integer numerator_by_head_recurrence(const PartialQuotients& pq);

/// n-th convergent (A_n/C_n, B_n/C_n). Throws ZeroDenominator if C_n = 0.
RationalPair evaluate_finite(const PartialQuotients& pq);

/// a_0 + b_1/(a_1 + b_2/(a_2 + ...)) evaluated exactly from the bottom up.
/// `b` is either b_1..b_n (one shorter than `a`) or b_0..b_n with b_0
/// ignored. Throws ZeroDenominator if a tail evaluates to zero.
Rational evaluate_classical_cf(std::span<const Integer> a, std::span<const Integer> b);

/// Classical fraction as the degenerate MCF with c_i = 0 for i >= 1.
PartialQuotients classical_as_mcf(std::span<const Integer> a, std::span<const Integer> b);

}  // namespace mcf
