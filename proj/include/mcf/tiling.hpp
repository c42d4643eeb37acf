#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mcf/integer.hpp"
#include "mcf/mcf_core.hpp"

namespace mcf {

enum class TileKind { square = 1, domino = 2, bar = 3 };

constexpr int length_of(TileKind kind) noexcept { return static_cast<int>(kind); }
const char* to_string(TileKind kind) noexcept;

/// One stack of identical tiles. `start` is the leftmost covered cell; on a
/// circular board a wrapping stack starts at cell n (or n-1) and continues
/// at cell 0.
struct Placement {
  TileKind kind = TileKind::square;
  std::ptrdiff_t start = 0;
  long long height = 1;

  friend auto operator<=>(const Placement&, const Placement&) = default;
};

struct Tiling {
  std::vector<Placement> placements;

  friend auto operator<=>(const Tiling&, const Tiling&) = default;
};

/// "square@0×2 domino@1×1 ..." in placement order.
std::string to_string(const Tiling& tiling);

using TilingCount = Integer;

/// Stacking bounds for an (n+1)-board, cells 0..n:
///   a_i  squares on cell i (a_i >= 1),
///   b_i  dominoes on cells i-1, i,
///   c_i  bars on cells i-2, i-1, i.
/// b and c may be negative (mixed tilings). Construction enforces the side
/// conditions that keep full square stacks admissible:
///   b_k < 0, c_k >= 0  requires  a_k > |b_k|
///   b_k >= 0, c_k < 0  requires  a_k > |c_k| or b_k > |c_k|
///   b_k < 0, c_k < 0   requires  a_k > |b_k| + |c_k|
/// checked for k >= 1 with c_1 taken as 0 (a bar cannot end at cell 1).
class HeightConditions {
 public:
  HeightConditions(std::vector<Integer> a, std::vector<Integer> b, std::vector<Integer> c);

  static HeightConditions from_quotients(const PartialQuotients& pq);

  std::size_t size() const noexcept { return a_.size(); }
  std::size_t last_index() const noexcept { return a_.size() - 1; }

  std::span<const Integer> a() const noexcept { return a_; }
  std::span<const Integer> b() const noexcept { return b_; }
  std::span<const Integer> c() const noexcept { return c_; }
  const Integer& a(std::size_t i) const { return a_.at(i); }
  const Integer& b(std::size_t i) const { return b_.at(i); }
  const Integer& c(std::size_t i) const { return c_.at(i); }

  /// True when no b_i or c_i is negative.
  bool is_plain() const;

  /// Conditions for cells 1..n, relabelled 0..n-1. Requires size() >= 2.
  HeightConditions shifted() const;
  HeightConditions truncated(std::size_t n) const;

  /// Same data as partial quotients, c_0 reset to 1.
  PartialQuotients as_quotients() const;

  friend bool operator==(const HeightConditions&, const HeightConditions&) = default;

 private:
  std::vector<Integer> a_;
  std::vector<Integer> b_;
  std::vector<Integer> c_;
};

/// Describes the first violated mixed side condition, if any.
std::optional<std::string> check_mixed_conditions(std::span<const Integer> a,
                                                  std::span<const Integer> b,
                                                  std::span<const Integer> c);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

struct EnumerationOptions {
  /// Refuse instances with more candidate tilings than this.
  std::uint64_t budget = kDefaultEnumerationBudget;
};

// Fast counters. Plain-mode counters throw MixedModeRequired on any negative
// b_i or c_i.

/// Tilings of the (n+1)-board: A(a_0^n, b_0^n, c_0^n).
TilingCount count_fast(const HeightConditions& h);
/// Tilings of the board -1..n starting with a domino or a bar: B_n.
TilingCount count_B(const HeightConditions& h);
/// Tilings of cells 1..n: C_n. Requires n >= 1.
TilingCount count_C(const HeightConditions& h);
/// Tilings of the circular board: A_n + B_{n-1}, plus wrap_bar * C_{n-2} for
/// bars over cells n-1, n, 0 when wrap_bar > 0.
TilingCount count_circular(const HeightConditions& h, const Integer& wrap_bar = 0);
/// Mixed tilings: A_n with the signed b, c.
TilingCount count_mixed(const HeightConditions& h);

/// Degree-m tilings with tiles of length 1..m+1; row j of `bounds` caps the
/// stacks of length-(j+1) tiles ending at each cell. Bounds must be
/// nonnegative, length-1 bounds positive.
TilingCount count_degree_m(const QuotientTable& bounds);

// Brute-force enumerators (oracles). Output is in canonical order: depth
// first, tile kinds square < domino < bar at each cell, heights ascending.
// Throw InstanceTooLarge when the candidate count exceeds the budget.

std::vector<Tiling> enumerate_plain(const HeightConditions& h, const EnumerationOptions& opts = {});
/// Tilings of cells -1..n whose first stack is a domino (bound b_0) or a bar
/// (bound c_1); cell -1 takes no squares.
std::vector<Tiling> enumerate_B(const HeightConditions& h, const EnumerationOptions& opts = {});
/// Linear tilings, then wrapping dominoes on (n, 0) bounded by b_0, wrapping
/// bars on (n, 0, 1) bounded by c_1 and, when wrap_bar > 0, wrapping bars on
/// (n-1, n, 0).
std::vector<Tiling> enumerate_circular(const HeightConditions& h, const Integer& wrap_bar = 0,
                                       const EnumerationOptions& opts = {});
std::vector<Tiling> enumerate_mixed(const HeightConditions& h, const EnumerationOptions& opts = {});

/// Brute-force count of degree-m tilings (never materialised).
TilingCount count_degree_m_by_enumeration(const QuotientTable& bounds,
                                          const EnumerationOptions& opts = {});

/// True if the tiling covers 0..n left to right with each stack within its
/// (nonnegative) bound.
bool fits_plain(const HeightConditions& h, const Tiling& tiling);

enum class MixedRule {
  /// b_k < 0 <= c_k: full squares at k-1, at most |b_k| squares at k.
  negative_domino,
  /// c_k < 0 <= b_k, a_k > |c_k|: full squares at k-2, k-1, at most |c_k| squares at k.
  negative_bar_on_squares,
  /// c_k < 0 <= b_k, a_k <= |c_k|: full squares at k-2, at most |c_k| dominoes on k-1, k.
  negative_bar_on_dominoes,
  /// b_k, c_k < 0: full squares at k-2, k-1, at most |b_k|+|c_k| squares at k.
  negative_both_pair,
  /// b_k, c_k < 0: full squares at k-1, at most |b_k| squares at k.
  negative_both_single,
};

const char* to_string(MixedRule rule) noexcept;

struct MixedViolation {
  std::size_t position = 0;
  MixedRule rule = MixedRule::negative_domino;
};

/// First inadmissibility rule the tiling triggers, scanning positions left to
/// right. The tiling is assumed to fit the nonnegative part of the bounds.
std::optional<MixedViolation> find_mixed_violation(const HeightConditions& h, const Tiling& tiling);

}  // namespace mcf
