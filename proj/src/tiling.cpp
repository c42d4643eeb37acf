#include "mcf/tiling.hpp"

#include <string>
#include <utility>

#include "board_enumerator.hpp"
#include "mcf/error.hpp"

namespace mcf {

const char* to_string(TileKind kind) noexcept {
  switch (kind) {
    case TileKind::square: return "square";
    case TileKind::domino: return "domino";
    case TileKind::bar: return "bar";
  }
  return "?";
}

std::string to_string(const Tiling& tiling) {
  std::string out;
  for (const auto& p : tiling.placements) {
    if (!out.empty()) out += ' ';
    out += to_string(p.kind);
    out += '@';
    out += std::to_string(p.start);
    out += "\xC3\x97";  // U+00D7 multiplication sign
    out += std::to_string(p.height);
  }
  return out;
}

std::optional<std::string> check_mixed_conditions(std::span<const Integer> a,
                                                  std::span<const Integer> b,
                                                  std::span<const Integer> c) {
  using boost::multiprecision::abs;
  for (std::size_t k = 1; k < a.size(); ++k) {
    const Integer& ak = a[k];
    const Integer& bk = b[k];
    const Integer ck = k >= 2 ? c[k] : Integer(0);
    const auto where = [&] {
      return " at position " + std::to_string(k) + " (a=" + ak.str() + ", b=" + bk.str() +
             ", c=" + ck.str() + ")";
    };
    if (bk < 0 && ck >= 0 && !(ak > abs(bk))) {
      return "mixed condition b<0,c>=0 requires a>|b|" + where();
    }
    if (bk >= 0 && ck < 0 && !(ak > abs(ck) || bk > abs(ck))) {
      return "mixed condition b>=0,c<0 requires a>|c| or b>|c|" + where();
    }
    if (bk < 0 && ck < 0 && !(ak > abs(bk) + abs(ck))) {
      return "mixed condition b<0,c<0 requires a>|b|+|c|" + where();
    }
  }
  return std::nullopt;
}

HeightConditions::HeightConditions(std::vector<Integer> a, std::vector<Integer> b,
                                   std::vector<Integer> c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_.empty()) {
    throw Error(ErrorKind::invalid_argument, "a board needs at least one cell");
  }
  if (b_.size() != a_.size() || c_.size() != a_.size()) {
    throw Error(ErrorKind::invalid_argument, "height condition sequences differ in length");
  }
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_[i] < 1) {
      throw Error(ErrorKind::invalid_argument,
                  "square bound a_" + std::to_string(i) + " must be positive (got " +
                      a_[i].str() + ")");
    }
  }
  if (auto problem = check_mixed_conditions(a_, b_, c_)) {
    throw Error(ErrorKind::invalid_mixed_conditions, *problem);
  }
}

HeightConditions HeightConditions::from_quotients(const PartialQuotients& pq) {
  return HeightConditions({pq.a().begin(), pq.a().end()}, {pq.b().begin(), pq.b().end()},
                          {pq.c().begin(), pq.c().end()});
}

bool HeightConditions::is_plain() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (b_[i] < 0 || c_[i] < 0) return false;
  }
  return true;
}

HeightConditions HeightConditions::shifted() const {
  if (size() < 2) throw Error(ErrorKind::invalid_argument, "cannot shift a one-cell board");
  return HeightConditions({a_.begin() + 1, a_.end()}, {b_.begin() + 1, b_.end()},
                          {c_.begin() + 1, c_.end()});
}

HeightConditions HeightConditions::truncated(std::size_t n) const {
  if (n >= size()) {
    throw Error(ErrorKind::invalid_argument, "truncation index " + std::to_string(n) + " out of range");
  }
  const auto end = static_cast<std::ptrdiff_t>(n + 1);
  return HeightConditions({a_.begin(), a_.begin() + end}, {b_.begin(), b_.begin() + end},
                          {c_.begin(), c_.begin() + end});
}

PartialQuotients HeightConditions::as_quotients() const {
  return PartialQuotients::with_unit_c0(a_, b_, c_);
}

namespace {

void require_plain(const HeightConditions& h) {
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h.b(i) < 0 || h.c(i) < 0) {
      throw Error(ErrorKind::mixed_mode_required,
                  "negative bound at position " + std::to_string(i) + " (b=" + h.b(i).str() +
                      ", c=" + h.c(i).str() + "); use the mixed counters");
    }
  }
}

std::vector<ConvergentTriple> triples(const HeightConditions& h) {
  return convergents_by_tail_recurrence(h.as_quotients());
}

// Bounds by absolute cell: squares on `end`, dominoes and bars ending there.
// Cells below 0 take nothing, which makes cell -1 of the B board domino/bar only.
detail::BoundFn linear_bounds(const HeightConditions& h) {
  return [&h](int length, std::ptrdiff_t end) -> Integer {
    if (end < 0 || end > static_cast<std::ptrdiff_t>(h.last_index())) return 0;
    const auto i = static_cast<std::size_t>(end);
    switch (length) {
      case 1: return h.a(i);
      case 2: return h.b(i);
      case 3: return h.c(i);
      default: return 0;
    }
  };
}

Tiling to_tiling(const std::vector<detail::Stack>& stacks) {
  Tiling t;
  t.placements.reserve(stacks.size());
  for (const auto& s : stacks) {
    t.placements.push_back({static_cast<TileKind>(s.length), s.start, s.height});
  }
  return t;
}

std::vector<Tiling> collect(const detail::BoardEnumerator& e) {
  std::vector<Tiling> out;
  e.for_each([&](const std::vector<detail::Stack>& stacks) { out.push_back(to_tiling(stacks)); });
  return out;
}

}  // namespace

TilingCount count_fast(const HeightConditions& h) {
  require_plain(h);
  return triples(h).back().A;
}

TilingCount count_B(const HeightConditions& h) {
  require_plain(h);
  return triples(h).back().B;
}

TilingCount count_C(const HeightConditions& h) {
  require_plain(h);
  if (h.size() < 2) {
    throw Error(ErrorKind::invalid_argument, "count_C needs n >= 1");
  }
  return triples(h).back().C;
}

TilingCount count_circular(const HeightConditions& h, const Integer& wrap_bar) {
  require_plain(h);
  if (wrap_bar < 0) throw Error(ErrorKind::invalid_argument, "wrap-bar bound must be nonnegative");
  const auto t = triples(h);
  const std::size_t n = h.last_index();
  TilingCount total = t[n].A;
  if (n >= 1) total += t[n - 1].B;
  // C_{n-2} = A(a_1^{n-2}): what is left once a bar covers n-1, n, 0.
  if (n >= 2) total += wrap_bar * t[n - 2].C;
  return total;
}

TilingCount count_degree_m(const QuotientTable& bounds) {
  const std::size_t m = bounds.degree();
  const std::size_t len = bounds.length();
  for (std::size_t j = 0; j <= m; ++j) {
    for (std::size_t i = 0; i < len; ++i) {
      const Integer& v = bounds.at(j, i);
      if (v < 0 || (j == 0 && v == 0)) {
        throw Error(ErrorKind::invalid_argument,
                    "degree-m bounds must be nonnegative with positive length-1 bounds (row " +
                        std::to_string(j) + ", index " + std::to_string(i) + ")");
      }
    }
  }
  // x[k + 1] = X_k; X_{-1} = 1 and anything further left is 0.
  std::vector<Integer> x(len + 1);
  x[0] = 1;
  for (std::size_t k = 0; k < len; ++k) {
    Integer value = 0;
    for (std::size_t j = 0; j <= m && j <= k; ++j) {
      value += bounds.at(j, k) * x[k - j];
    }
    x[k + 1] = std::move(value);
  }
  return x[len];
}

std::vector<Tiling> enumerate_plain(const HeightConditions& h, const EnumerationOptions& opts) {
  require_plain(h);
  const detail::BoardEnumerator e(0, static_cast<std::ptrdiff_t>(h.last_index()), 3,
                                  linear_bounds(h));
  e.require_within(opts.budget);
  return collect(e);
}

std::vector<Tiling> enumerate_B(const HeightConditions& h, const EnumerationOptions& opts) {
  require_plain(h);
  const detail::BoardEnumerator e(-1, static_cast<std::ptrdiff_t>(h.last_index()), 3,
                                  linear_bounds(h));
  e.require_within(opts.budget);
  return collect(e);
}

std::vector<Tiling> enumerate_circular(const HeightConditions& h, const Integer& wrap_bar,
                                       const EnumerationOptions& opts) {
  require_plain(h);
  if (wrap_bar < 0) throw Error(ErrorKind::invalid_argument, "wrap-bar bound must be nonnegative");
  const auto n = static_cast<std::ptrdiff_t>(h.last_index());
  const auto bounds = linear_bounds(h);

  struct Wrap {
    Placement head;  // height filled in per stack
    Integer cap;
    detail::BoardEnumerator rest;
  };
  std::vector<Wrap> wraps;
  if (n >= 1) {
    wraps.push_back({{TileKind::domino, n, 0}, h.b(0), detail::BoardEnumerator(1, n - 1, 3, bounds)});
  }
  if (n >= 2) {
    wraps.push_back({{TileKind::bar, n, 0}, h.c(1), detail::BoardEnumerator(2, n - 1, 3, bounds)});
    wraps.push_back({{TileKind::bar, n - 1, 0}, wrap_bar, detail::BoardEnumerator(1, n - 2, 3, bounds)});
  }

  const detail::BoardEnumerator linear(0, n, 3, bounds);
  Integer candidates = linear.candidate_count();
  for (const auto& w : wraps) {
    if (w.cap > 0) candidates += w.cap * w.rest.candidate_count();
  }
  if (candidates > opts.budget) {
    throw Error(ErrorKind::instance_too_large,
                "instance has " + candidates.str() + " candidate tilings, budget is " +
                    std::to_string(opts.budget));
  }

  std::vector<Tiling> out = collect(linear);
  for (const auto& w : wraps) {
    if (w.cap <= 0) continue;
    const long long top = to_int64(w.cap);
    for (long long height = 1; height <= top; ++height) {
      w.rest.for_each([&](const std::vector<detail::Stack>& stacks) {
        Tiling t = to_tiling(stacks);
        Placement head = w.head;
        head.height = height;
        t.placements.push_back(head);
        out.push_back(std::move(t));
      });
    }
  }
  return out;
}

TilingCount count_degree_m_by_enumeration(const QuotientTable& bounds,
                                          const EnumerationOptions& opts) {
  const detail::BoardEnumerator e(
      0, static_cast<std::ptrdiff_t>(bounds.length()) - 1, static_cast<int>(bounds.degree() + 1),
      [&bounds](int length, std::ptrdiff_t end) -> Integer {
        return bounds.at(static_cast<std::size_t>(length - 1), static_cast<std::size_t>(end));
      });
  e.require_within(opts.budget);
  std::uint64_t count = 0;
  e.for_each([&](const std::vector<detail::Stack>&) { ++count; });
  return TilingCount(count);
}

bool fits_plain(const HeightConditions& h, const Tiling& tiling) {
  std::ptrdiff_t next = 0;
  const auto bounds = linear_bounds(h);
  for (const auto& p : tiling.placements) {
    if (p.start != next || p.height < 1) return false;
    const std::ptrdiff_t end = p.start + length_of(p.kind) - 1;
    if (end > static_cast<std::ptrdiff_t>(h.last_index())) return false;
    if (Integer(p.height) > bounds(length_of(p.kind), end)) return false;
    next = end + 1;
  }
  return next == static_cast<std::ptrdiff_t>(h.size());
}

}  // namespace mcf
