#include "earring/order.hpp"

#include <algorithm>

#include "earring/errors.hpp"

namespace earring {

std::string to_string(const OrderVerdict& v) {
  switch (v.outcome) {
    case Ordering::less:
      return "less@" + std::to_string(v.decided_at);
    case Ordering::greater:
      return "greater@" + std::to_string(v.decided_at);
    case Ordering::equal_up_to_depth:
      return "equal-up-to-depth";
  }
  return "?";
}

OrderVerdict cmp_X(const Point& x, const Point& y, int depth) {
  if (depth < 0) throw InputError("depth must be >= 0");
  // truncation is encoded in the verdict: scan only what both points support
  int bound = std::min({depth, x.probe_depth(), y.probe_depth()});
  if (x.finite_stage_presentation() && y.finite_stage_presentation()) {
    // no difference can appear past both stages
    bound = std::min(bound, std::max(x.stage_word().level(), y.stage_word().level()));
  }
  MonoidWord context;  // shared level-(n-1) word
  for (int n = 1; n <= bound; ++n) {
    MonoidWord wx = x.word_at(n);
    MonoidWord wy = y.word_at(n);
    if (wx == wy) {
      context = std::move(wx);
      continue;
    }
    GroupWord qx = reduce(wx);
    GroupWord qy = reduce(wy);
    if (qx != qy) {
      GroupWord qc = reduce(context);
      if (qx == qc) return OrderVerdict{Ordering::less, n};
      if (qy == qc) return OrderVerdict{Ordering::greater, n};
      auto c = shortlex_cmp(qx, qy);
      return OrderVerdict{c < 0 ? Ordering::less : Ordering::greater, n};
    }
    auto c = length_lex_cmp(wx, wy);
    return OrderVerdict{c < 0 ? Ordering::less : Ordering::greater, n};
  }
  return OrderVerdict{Ordering::equal_up_to_depth, 0};
}

OrderVerdict cmp_G(const GroupPoint& g, const GroupPoint& h, int depth) {
  return cmp_X(sigma(g, depth), sigma(h, depth), depth);
}

GroupPoint min_of(std::span<const GroupPoint> points, int depth) {
  if (points.empty()) throw InputError("min of an empty set");
  const GroupPoint* best = &points[0];
  for (std::size_t i = 1; i < points.size(); ++i) {
    OrderVerdict v = cmp_G(points[i], *best, depth);
    if (v.is_less()) {
      best = &points[i];
    } else if (v.undecided()) {
      if (!same_class_finite(points[i], *best) &&
          !points[i].rep().same_presentation(best->rep()))
        throw InputError("undecided pair at depth " + std::to_string(depth) + ": " +
                         points[i].to_string() + " vs " + best->to_string());
    }
  }
  return *best;
}

}  // namespace earring
