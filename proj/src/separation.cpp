#include "earring/separation.hpp"

#include <algorithm>
#include <sstream>

#include "earring/errors.hpp"

namespace earring {

std::string SeparationTrace::to_text() const {
  std::ostringstream os;
  for (const TraceStep& s : steps) {
    os << s.index << " | kappa=" << s.anchor.to_string() << " | eta=" << s.eta
       << " | U=" << to_string(s.shape) << " | K=" << to_string(s.removed)
       << " | gamma=" << to_string(s.piece) << "\n";
  }
  os << "V=" << to_string(outcome) << "\n";
  return os.str();
}

int min_separating_level(const GroupPoint& a, const GroupPoint& b, int depth) {
  if (!cmp_G(a, b, depth).is_less())
    throw InputError("min_separating_level: a is not below b");
  for (int n = 1; n <= depth; ++n) {
    if (cmp_G(a, embed(project_group(b, n)), depth).is_less()) return n;
  }
  // a < b forces such a level to exist
  throw InvariantError("no separating level within depth " + std::to_string(depth));
}

int min_clearing_level(const ClopenExpr& w, std::span<const GroupPoint> tracked,
                       const GroupPoint& b, const Universe& u, int depth) {
  if (!set_less(w, tracked, b, u, depth))
    throw InputError("min_clearing_level: the set does not lie below b");
  for (int n = 1; n <= depth; ++n) {
    if (set_less(w, tracked, embed(project_group(b, n)), u, depth)) return n;
  }
  throw InputError("no clearing level within depth " + std::to_string(depth));
}

namespace {

// Shared step engine for thicken and separate.
struct Builder {
  const Universe& u;
  int depth;

  Builder(const Universe& universe, int probe_depth) : u(universe), depth(probe_depth) {}

  ClopenExpr w;                      // union built so far
  std::vector<GroupPoint> tracked;   // known members of w (bases, covered targets)
  int w_max_rank = -1;               // over the universe

  bool below_all_w(const GroupPoint& target) const {
    if (w_max_rank >= 0 &&
        !cmp_G(u.element_point(u.index_of_rank(w_max_rank)), target, depth).is_less())
      return false;
    for (const GroupPoint& t : tracked)
      if (!cmp_G(t, target, depth).is_less()) return false;
    return true;
  }

  // Universe members of Cyl(level; base) minus `removed`; returns their
  // max rank (-1 when none) and min rank via out-parameter.
  int piece_max_rank(const Cylinder& c, const ClopenExpr& removed, int* min_rank) const {
    int mx = -1, mn = -1;
    for (int i = 0; i < u.size(); ++i) {
      if (!u.elem_member(i, c)) continue;
      if (!removed.is_empty() && u.elem_member(i, removed)) continue;
      int r = u.rank(i);
      mx = std::max(mx, r);
      if (mn < 0 || r < mn) mn = r;
    }
    if (min_rank) *min_rank = mn;
    return mx;
  }

  void absorb(const ClopenTerm& term, int max_rank, std::vector<GroupPoint> new_tracked) {
    if (w_max_rank >= 0 && max_rank >= 0) {
      int mn = -1;
      // strict increase of the pieces over the universe
      Cylinder c = std::get<Cylinder>(term.shape);
      ClopenExpr rm;
      for (const ClopenAtom& d : term.subtracted) {
        ClopenTerm t{d, {}};
        rm.add_term(std::move(t));
      }
      piece_max_rank(c, rm, &mn);
      if (mn >= 0 && mn <= w_max_rank)
        throw InvariantError("piece is not above the union built so far");
    }
    w.add_term(term);
    w_max_rank = std::max(w_max_rank, max_rank);
    for (auto& t : new_tracked) tracked.push_back(std::move(t));
  }
};

bool member_in_term(const GroupPoint& g, const Cylinder& c, const ClopenExpr& removed,
                    int depth) {
  return member(g, c, depth) && !member(g, removed, depth);
}

}  // namespace

ThickenResult thicken(const GroupPoint& a, std::span<const GroupPoint> targets,
                      const Universe& u, int depth) {
  if (targets.empty()) throw InputError("thicken: the target set is empty");
  for (const GroupPoint& b : targets) {
    if (!cmp_G(a, b, depth).is_less())
      throw InputError("thicken: a is not below target " + b.to_string());
  }

  Builder st(u, depth);
  SeparationTrace trace;
  std::vector<GroupPoint> remaining(targets.begin(), targets.end());
  ClopenExpr no_removed;
  int step = 0;

  while (!remaining.empty()) {
    if (step > static_cast<int>(targets.size()))
      throw InvariantError("thicken did not terminate within |B| steps");
    GroupPoint b_i = min_of(remaining, depth);

    int eta = -1;
    GroupWord base;
    int cand_max = -1;
    std::vector<char> swallowed;
    for (int n = 1; n <= depth && eta < 0; ++n) {
      GroupWord cand_base = project_group(b_i, n);
      Cylinder cand(n, cand_base);
      GroupPoint cand_min = embed(cand_base);
      if (step == 0) {
        if (!cmp_G(a, cand_min, depth).is_less()) continue;
      } else {
        if (!st.below_all_w(cand_min)) continue;
      }
      // the piece, and everything it swallows, must stay below every target
      // left outside it
      int mx = st.piece_max_rank(cand, no_removed, nullptr);
      std::vector<char> inside(remaining.size(), 0);
      for (std::size_t q = 0; q < remaining.size(); ++q)
        inside[q] = member(remaining[q], cand, depth) ? 1 : 0;
      bool ok = true;
      for (std::size_t q = 0; q < remaining.size() && ok; ++q) {
        if (inside[q]) continue;
        if (mx >= 0 &&
            !cmp_G(u.element_point(u.index_of_rank(mx)), remaining[q], depth).is_less())
          ok = false;
        for (std::size_t p = 0; p < remaining.size() && ok; ++p)
          if (inside[p] && !cmp_G(remaining[p], remaining[q], depth).is_less()) ok = false;
      }
      if (!ok) continue;
      eta = n;
      base = cand_base;
      cand_max = mx;
      swallowed = std::move(inside);
    }
    if (eta < 0)
      throw InputError("thicken: no admissible level within depth " +
                       std::to_string(depth));

    Cylinder piece(eta, base);
    trace.steps.emplace_back(step, b_i, eta, piece, ClopenExpr::empty(),
                             ClopenExpr(piece), true);

    std::vector<GroupPoint> new_tracked;
    new_tracked.push_back(embed(base));
    std::vector<GroupPoint> rest;
    for (std::size_t q = 0; q < remaining.size(); ++q) {
      if (swallowed[q])
        new_tracked.push_back(remaining[q]);
      else
        rest.push_back(remaining[q]);
    }
    st.absorb(ClopenTerm{ClopenAtom(piece), {}}, cand_max, std::move(new_tracked));
    remaining = std::move(rest);
    ++step;
  }

  // exact postconditions
  if (member(a, st.w, depth)) throw InvariantError("thicken: a landed inside the cover");
  for (const GroupPoint& b : targets)
    if (!member(b, st.w, depth)) throw InvariantError("thicken: a target is uncovered");

  trace.outcome = st.w;
  return ThickenResult{st.w, std::move(trace)};
}

SeparateResult separate(std::span<const GroupPoint> a_set,
                        std::span<const GroupPoint> b_set, const Universe& u, int depth) {
  if (a_set.empty() || b_set.empty()) throw InputError("separate: both sets must be nonempty");
  for (const GroupPoint& x : a_set)
    for (const GroupPoint& y : b_set)
      if (equal_up_to_depth(x, y, depth))
        throw InputError("separate: the sets are not disjoint (" + x.to_string() + ")");

  struct Item {
    GroupPoint point;
    bool in_a;
  };
  std::vector<Item> remaining;
  for (const GroupPoint& x : a_set) remaining.push_back(Item{x, true});
  for (const GroupPoint& y : b_set) remaining.push_back(Item{y, false});
  const int total = static_cast<int>(remaining.size());

  Builder st(u, depth);
  SeparationTrace trace;
  SeparateResult result;
  int step = 0;

  while (!remaining.empty()) {
    if (step > total) throw InvariantError("separate did not terminate within |A|+|B| steps");

    std::vector<GroupPoint> pool;
    for (const Item& it : remaining) pool.push_back(it.point);
    GroupPoint kappa = min_of(pool, depth);
    std::size_t kappa_at = 0;
    for (; kappa_at < pool.size(); ++kappa_at)
      if (pool[kappa_at].rep().same_presentation(kappa.rep())) break;
    bool side_a = remaining[kappa_at].in_a;

    std::vector<GroupPoint> opposite;
    for (const Item& it : remaining)
      if (it.in_a != side_a) opposite.push_back(it.point);

    ClopenExpr removed;
    if (!opposite.empty()) removed = thicken(kappa, opposite, u, depth).cover;
    if (member(kappa, removed, depth))
      throw InvariantError("separate: the shield covers its own anchor");

    int eta = -1;
    GroupWord base;
    int cand_max = -1;
    std::vector<char> swallowed;
    for (int n = 1; n <= depth && eta < 0; ++n) {
      GroupWord cand_base = project_group(kappa, n);
      Cylinder cand(n, cand_base);
      GroupPoint cand_min = embed(cand_base);
      if (step > 0 && !st.below_all_w(cand_min)) continue;
      int mx = st.piece_max_rank(cand, removed, nullptr);
      std::vector<char> inside(remaining.size(), 0);
      for (std::size_t q = 0; q < remaining.size(); ++q)
        inside[q] = member_in_term(remaining[q].point, cand, removed, depth) ? 1 : 0;
      bool ok = true;
      for (std::size_t q = 0; q < remaining.size() && ok; ++q) {
        if (inside[q]) continue;
        if (mx >= 0 && !cmp_G(u.element_point(u.index_of_rank(mx)), remaining[q].point,
                              depth)
                            .is_less())
          ok = false;
        for (std::size_t p = 0; p < remaining.size() && ok; ++p)
          if (inside[p] &&
              !cmp_G(remaining[p].point, remaining[q].point, depth).is_less())
            ok = false;
      }
      if (!ok) continue;
      eta = n;
      base = cand_base;
      cand_max = mx;
      swallowed = std::move(inside);
    }
    if (eta < 0)
      throw InputError("separate: no admissible level within depth " +
                       std::to_string(depth));

    Cylinder shape(eta, base);
    // drop cuts that cannot meet the cylinder
    ClopenTerm gamma_term{ClopenAtom(shape), {}};
    for (const ClopenTerm& kt : removed.terms()) {
      const Cylinder& kc = std::get<Cylinder>(kt.shape);
      if (!cyl_disjoint(shape, kc)) gamma_term.subtracted.push_back(kt.shape);
    }
    ClopenExpr gamma;
    gamma.add_term(gamma_term);

    // a piece never meets both sides
    bool meets_a = false, meets_b = false;
    for (const GroupPoint& x : a_set)
      if (member(x, gamma, depth)) meets_a = true;
    for (const GroupPoint& y : b_set)
      if (member(y, gamma, depth)) meets_b = true;
    if (meets_a && meets_b)
      throw InvariantError("separate: a piece meets both sides");

    trace.steps.emplace_back(step, kappa, eta, shape, removed, gamma, side_a);
    (side_a ? result.side_a : result.side_b).add_union(gamma);

    std::vector<GroupPoint> new_tracked;
    new_tracked.push_back(kappa);
    if (!member(embed(base), removed, depth)) new_tracked.push_back(embed(base));
    std::vector<Item> rest;
    for (std::size_t q = 0; q < remaining.size(); ++q) {
      if (swallowed[q])
        new_tracked.push_back(remaining[q].point);
      else
        rest.push_back(remaining[q]);
    }
    st.absorb(gamma_term, cand_max, std::move(new_tracked));
    remaining = std::move(rest);
    ++step;
  }

  for (const GroupPoint& x : a_set)
    if (!member(x, result.side_a, depth))
      throw InvariantError("separate: A is not covered by its side");
  for (const GroupPoint& y : b_set) {
    if (member(y, result.side_a, depth))
      throw InvariantError("separate: B meets the A side");
    if (!member(y, result.side_b, depth))
      throw InvariantError("separate: B is not covered by its side");
  }

  trace.outcome = result.side_a;
  result.trace = std::move(trace);
  return result;
}

}  // namespace earring
