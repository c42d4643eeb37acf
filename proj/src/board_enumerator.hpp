#pragma once

// Depth-first enumeration of stacked tilings of a contiguous cell range.
// Shared by the plain, B, circular, mixed and degree-m oracles.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mcf/error.hpp"
#include "mcf/integer.hpp"

namespace mcf::detail {

struct Stack {
  int length = 1;
  std::ptrdiff_t start = 0;
  long long height = 1;
};

/// Bound for a stack of length-`length` tiles whose last cell is `end`.
/// Non-positive means no such stack.
using BoundFn = std::function<Integer(int length, std::ptrdiff_t end)>;

class BoardEnumerator {
 public:
  BoardEnumerator(std::ptrdiff_t first, std::ptrdiff_t last, int max_length, BoundFn bound)
      : first_(first), last_(last), max_length_(max_length), bound_(std::move(bound)) {}

  /// Number of tilings the enumerator would visit, by a right-to-left DP.
  Integer candidate_count() const {
    if (last_ < first_) return 1;
    const auto cells = static_cast<std::size_t>(last_ - first_ + 1);
    std::vector<Integer> from(cells + 1);  // from[i]: tilings of first+i..last
    from[cells] = 1;
    for (std::size_t i = cells; i-- > 0;) {
      const auto pos = first_ + static_cast<std::ptrdiff_t>(i);
      Integer total = 0;
      for (int len = 1; len <= max_length_; ++len) {
        const std::ptrdiff_t end = pos + len - 1;
        if (end > last_) break;
        const Integer cap = bound_(len, end);
        if (cap > 0) total += cap * from[i + static_cast<std::size_t>(len)];
      }
      from[i] = std::move(total);
    }
    return from[0];
  }

  void require_within(std::uint64_t budget) const {
    const Integer count = candidate_count();
    if (count > budget) {
      throw Error(ErrorKind::instance_too_large,
                  "instance has " + count.str() + " candidate tilings, budget is " +
                      std::to_string(budget));
    }
  }

  /// Calls visit(stacks) for every tiling in canonical order.
  template <class Visit>
  void for_each(Visit&& visit) const {
    std::vector<Stack> stacks;
    recurse(first_, stacks, visit);
  }

 private:
  template <class Visit>
  void recurse(std::ptrdiff_t pos, std::vector<Stack>& stacks, Visit& visit) const {
    if (pos > last_) {
      visit(static_cast<const std::vector<Stack>&>(stacks));
      return;
    }
    for (int len = 1; len <= max_length_; ++len) {
      const std::ptrdiff_t end = pos + len - 1;
      if (end > last_) break;
      const Integer cap = bound_(len, end);
      if (cap <= 0) continue;
      const long long top = to_int64(cap);
      for (long long h = 1; h <= top; ++h) {
        stacks.push_back({len, pos, h});
        recurse(end + 1, stacks, visit);
        stacks.pop_back();
      }
    }
  }

  std::ptrdiff_t first_;
  std::ptrdiff_t last_;
  int max_length_;
  BoundFn bound_;
};

}  // namespace mcf::detail
