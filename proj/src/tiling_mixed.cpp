#include "mcf/tiling.hpp"

#include <vector>

#include "board_enumerator.hpp"
#include "mcf/error.hpp"

namespace mcf {

const char* to_string(MixedRule rule) noexcept {
  switch (rule) {
    case MixedRule::negative_domino: return "negative_domino";
    case MixedRule::negative_bar_on_squares: return "negative_bar_on_squares";
    case MixedRule::negative_bar_on_dominoes: return "negative_bar_on_dominoes";
    case MixedRule::negative_both_pair: return "negative_both_pair";
    case MixedRule::negative_both_single: return "negative_both_single";
  }
  return "?";
}

namespace {

// Per-cell view of a linear tiling: square stack heights and heights of
// domino stacks by their right cell (0 when absent).
struct CellView {
  std::vector<long long> square;
  std::vector<long long> domino_ending;

  explicit CellView(const Tiling& tiling, std::size_t cells)
      : square(cells, 0), domino_ending(cells, 0) {
    for (const auto& p : tiling.placements) {
      if (p.start < 0) continue;
      const auto s = static_cast<std::size_t>(p.start);
      if (p.kind == TileKind::square && s < cells) square[s] = p.height;
      if (p.kind == TileKind::domino && s + 1 < cells) domino_ending[s + 1] = p.height;
    }
  }
};

bool in_range(long long height, const Integer& cap) { return height >= 1 && Integer(height) <= cap; }

}  // namespace

std::optional<MixedViolation> find_mixed_violation(const HeightConditions& h, const Tiling& tiling) {
  using boost::multiprecision::abs;
  const CellView cells(tiling, h.size());
  const auto full = [&](std::ptrdiff_t j) {
    return j >= 0 && Integer(cells.square[static_cast<std::size_t>(j)]) == h.a(static_cast<std::size_t>(j));
  };

  for (std::size_t k = 1; k < h.size(); ++k) {
    const auto kk = static_cast<std::ptrdiff_t>(k);
    const Integer& b = h.b(k);
    const Integer c = k >= 2 ? h.c(k) : Integer(0);  // no bar can end at cell 1
    const long long squares = cells.square[k];

    if (b < 0 && c >= 0) {
      if (full(kk - 1) && in_range(squares, abs(b))) {
        return MixedViolation{k, MixedRule::negative_domino};
      }
    } else if (b >= 0 && c < 0) {
      if (h.a(k) > abs(c)) {
        if (full(kk - 2) && full(kk - 1) && in_range(squares, abs(c))) {
          return MixedViolation{k, MixedRule::negative_bar_on_squares};
        }
      } else if (full(kk - 2) && in_range(cells.domino_ending[k], abs(c))) {
        return MixedViolation{k, MixedRule::negative_bar_on_dominoes};
      }
    } else if (b < 0 && c < 0) {
      if (full(kk - 2) && full(kk - 1) && in_range(squares, abs(b) + abs(c))) {
        return MixedViolation{k, MixedRule::negative_both_pair};
      }
      if (full(kk - 1) && in_range(squares, abs(b))) {
        return MixedViolation{k, MixedRule::negative_both_single};
      }
    }
  }
  return std::nullopt;
}

std::vector<Tiling> enumerate_mixed(const HeightConditions& h, const EnumerationOptions& opts) {
  // Candidates: ordinary tilings where negative bounds admit no stacks.
  const detail::BoardEnumerator e(
      0, static_cast<std::ptrdiff_t>(h.last_index()), 3,
      [&h](int length, std::ptrdiff_t end) -> Integer {
        const auto i = static_cast<std::size_t>(end);
        switch (length) {
          case 1: return h.a(i);
          case 2: return h.b(i);
          case 3: return h.c(i);
          default: return 0;
        }
      });
  e.require_within(opts.budget);

  std::vector<Tiling> out;
  e.for_each([&](const std::vector<detail::Stack>& stacks) {
    Tiling t;
    t.placements.reserve(stacks.size());
    for (const auto& s : stacks) {
      t.placements.push_back({static_cast<TileKind>(s.length), s.start, s.height});
    }
    if (!find_mixed_violation(h, t)) out.push_back(std::move(t));
  });
  return out;
}

TilingCount count_mixed(const HeightConditions& h) {
  // Side conditions were checked when h was built.
  return convergents_by_tail_recurrence(h.as_quotients()).back().A;
}

}  // namespace mcf
