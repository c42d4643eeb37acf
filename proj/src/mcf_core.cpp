#include "mcf/mcf_core.hpp"

#include <string>
#include <utility>

#include "mcf/error.hpp"
#include "mcf/matrix.hpp"

namespace mcf {

namespace {

void require_shape(const std::vector<Integer>& a, const std::vector<Integer>& b,
                   const std::vector<Integer>& c) {
  if (a.empty()) {
    throw Error(ErrorKind::invalid_argument, "partial quotients must have at least one index");
  }
  if (b.size() != a.size() || c.size() != a.size()) {
    throw Error(ErrorKind::invalid_argument,
                "partial quotient sequences differ in length (a=" + std::to_string(a.size()) +
                    ", b=" + std::to_string(b.size()) + ", c=" + std::to_string(c.size()) + ")");
  }
}

}  // namespace

PartialQuotients::PartialQuotients(std::vector<Integer> a, std::vector<Integer> b,
                                   std::vector<Integer> c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  require_shape(a_, b_, c_);
  if (c_.front() != 1) {
    throw Error(ErrorKind::invalid_argument,
                "c_0 must be 1 (got " + c_.front().str() + ")");
  }
}

PartialQuotients PartialQuotients::with_unit_c0(std::vector<Integer> a, std::vector<Integer> b,
                                                std::vector<Integer> c) {
  require_shape(a, b, c);
  Integer displaced = c.front();
  c.front() = 1;
  PartialQuotients pq(std::move(a), std::move(b), std::move(c));
  pq.displaced_c0_ = std::move(displaced);
  return pq;
}

PartialQuotients PartialQuotients::shifted() const {
  if (size() < 2) {
    throw Error(ErrorKind::invalid_argument, "cannot shift a single-index fraction");
  }
  return with_unit_c0({a_.begin() + 1, a_.end()}, {b_.begin() + 1, b_.end()},
                      {c_.begin() + 1, c_.end()});
}

PartialQuotients PartialQuotients::truncated(std::size_t n) const {
  if (n >= size()) {
    throw Error(ErrorKind::invalid_argument,
                "truncation index " + std::to_string(n) + " out of range");
  }
  PartialQuotients pq({a_.begin(), a_.begin() + n + 1}, {b_.begin(), b_.begin() + n + 1},
                      {c_.begin(), c_.begin() + n + 1});
  pq.displaced_c0_ = displaced_c0_;
  return pq;
}

PartialQuotients PartialQuotients::with_a(std::size_t i, Integer v) const {
  PartialQuotients pq = *this;
  pq.a_.at(i) = std::move(v);
  return pq;
}

PartialQuotients PartialQuotients::with_b(std::size_t i, Integer v) const {
  PartialQuotients pq = *this;
  pq.b_.at(i) = std::move(v);
  return pq;
}

PartialQuotients PartialQuotients::with_c(std::size_t i, Integer v) const {
  if (i == 0) throw Error(ErrorKind::invalid_argument, "c_0 is fixed to 1");
  PartialQuotients pq = *this;
  pq.c_.at(i) = std::move(v);
  return pq;
}

ConvergentTriple seed_triple(std::ptrdiff_t index) {
  switch (index) {
    case -1: return {1, 0, 0, -1};
    case -2: return {0, 1, 0, -2};
    default:
      throw Error(ErrorKind::invalid_argument,
                  "seed triples exist for indices -1 and -2 only");
  }
}

QuotientTable::QuotientTable(std::vector<std::vector<Integer>> rows) : rows_(std::move(rows)) {
  if (rows_.size() < 2) {
    throw Error(ErrorKind::invalid_argument, "a quotient table needs at least two rows");
  }
  const std::size_t len = rows_.front().size();
  if (len == 0) throw Error(ErrorKind::invalid_argument, "quotient table rows are empty");
  for (const auto& row : rows_) {
    if (row.size() != len) {
      throw Error(ErrorKind::invalid_argument, "quotient table is not rectangular");
    }
  }
}

QuotientTable to_table(const PartialQuotients& pq) {
  return QuotientTable({{pq.a().begin(), pq.a().end()},
                        {pq.b().begin(), pq.b().end()},
                        {pq.c().begin(), pq.c().end()}});
}

std::vector<ConvergentTriple> convergents_by_matrix(const PartialQuotients& pq) {
  std::vector<ConvergentTriple> out;
  out.reserve(pq.size());
  SquareMatrix product = SquareMatrix::identity(3);
  for (std::size_t i = 0; i < pq.size(); ++i) {
    product = product * SquareMatrix::companion({pq.a(i), pq.b(i), pq.c(i)});
    out.push_back({product(0, 0), product(1, 0), product(2, 0), static_cast<std::ptrdiff_t>(i)});
  }
  return out;
}

std::vector<ConvergentTriple> convergents_by_tail_recurrence(const PartialQuotients& pq) {
  std::vector<ConvergentTriple> out;
  out.reserve(pq.size());
  // Index 0 directly; from index 1 on the window reaches back at most to -2.
  out.push_back({pq.a(0), pq.b(0), pq.c(0), 0});
  const auto at = [&](std::ptrdiff_t k) -> ConvergentTriple {
    return k >= 0 ? out[static_cast<std::size_t>(k)] : seed_triple(k);
  };
  for (std::size_t i = 1; i < pq.size(); ++i) {
    const auto k = static_cast<std::ptrdiff_t>(i);
    const ConvergentTriple x1 = at(k - 1);
    const ConvergentTriple x2 = at(k - 2);
    const ConvergentTriple x3 = at(k - 3);
    ConvergentTriple next;
    next.A = pq.a(i) * x1.A + pq.b(i) * x2.A + pq.c(i) * x3.A;
    next.B = pq.a(i) * x1.B + pq.b(i) * x2.B + pq.c(i) * x3.B;
    next.C = pq.a(i) * x1.C + pq.b(i) * x2.C + pq.c(i) * x3.C;
    next.index = k;
    out.push_back(std::move(next));
  }
  return out;
}

Integer numerator_by_head_recurrence(const PartialQuotients& pq) {
  const std::size_t n = pq.last_index();
  // suffix[k] = A(a_k^n, b_k^n, c_k^n); suffix[n+1] = 1 (empty board),
  // suffix[n+2] = 0. Filled from the back, each entry once.
  std::vector<Integer> suffix(n + 3);
  suffix[n + 1] = 1;
  suffix[n + 2] = 0;
  for (std::size_t k = n + 1; k-- > 0;) {
    Integer value = pq.a(k) * suffix[k + 1];
    if (k + 1 <= n) value += pq.b(k + 1) * suffix[k + 2];
    if (k + 2 <= n) value += pq.c(k + 2) * suffix[k + 3];
    suffix[k] = std::move(value);
  }
  return suffix[0];
}

RationalPair evaluate_finite(const PartialQuotients& pq) {
  const ConvergentTriple last = convergents_by_tail_recurrence(pq).back();
  if (last.C == 0) {
    throw Error(ErrorKind::zero_denominator,
                "C_" + std::to_string(last.index) + " is zero; convergent undefined");
  }
  return {ratio(last.A, last.C), ratio(last.B, last.C)};
}

namespace {

std::span<const Integer> numerators_from_one(std::span<const Integer> a,
                                             std::span<const Integer> b) {
  if (a.empty()) {
    throw Error(ErrorKind::invalid_argument, "continued fraction needs at least a_0");
  }
  if (b.size() == a.size()) return b.subspan(1);
  if (b.size() + 1 == a.size()) return b;
  throw Error(ErrorKind::invalid_argument,
              "b must hold b_1..b_n or b_0..b_n for a of length " + std::to_string(a.size()));
}

}  // namespace

Rational evaluate_classical_cf(std::span<const Integer> a, std::span<const Integer> b) {
  const auto nums = numerators_from_one(a, b);  // nums[i-1] = b_i
  Rational value(a.back());
  for (std::size_t i = a.size() - 1; i-- > 0;) {
    if (value == 0) {
      throw Error(ErrorKind::zero_denominator,
                  "tail starting at index " + std::to_string(i + 1) + " evaluates to zero");
    }
    value = Rational(a[i]) + Rational(nums[i]) / value;
  }
  return value;
}

PartialQuotients classical_as_mcf(std::span<const Integer> a, std::span<const Integer> b) {
  const auto nums = numerators_from_one(a, b);
  std::vector<Integer> bb(a.size()), cc(a.size());
  for (std::size_t i = 1; i < a.size(); ++i) bb[i] = nums[i - 1];
  cc[0] = 1;
  return PartialQuotients({a.begin(), a.end()}, std::move(bb), std::move(cc));
}

}  // namespace mcf
