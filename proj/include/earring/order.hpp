#pragma once

#include <span>
#include <string>

#include "earring/points.hpp"

namespace earring {

enum class Ordering { less, equal_up_to_depth, greater };

struct OrderVerdict {
  Ordering outcome = Ordering::equal_up_to_depth;
  int decided_at = 0;  // minimal level where the words differ; 0 when undecided

  bool is_less() const { return outcome == Ordering::less; }
  bool is_greater() const { return outcome == Ordering::greater; }
  bool undecided() const { return outcome == Ordering::equal_up_to_depth; }
};

std::string to_string(const OrderVerdict& v);

// Recursive linear order on coherent points: find the minimal level n where
// the words differ (their level-(n-1) words then agree), compare reduced
// images there first — shortlex, with the reduction of the shared context
// declared minimal — and break reduced ties by (length, letterwise lex) on
// the raw words. Two finite-stage points always decide; lazily presented
// points may agree to any finite depth, hence the distinct
// equal-up-to-depth verdict.
OrderVerdict cmp_X(const Point& x, const Point& y, int depth);

// Order on group elements via their minimal representatives.
OrderVerdict cmp_G(const GroupPoint& g, const GroupPoint& h, int depth);

// Unique minimum of a finite nonempty set under cmp_G. Throws on an empty
// set, and on a pair that is equal-up-to-depth without being the same
// finite-stage class (undecided-pair).
GroupPoint min_of(std::span<const GroupPoint> points, int depth);

}  // namespace earring
