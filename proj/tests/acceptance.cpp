// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Runs against the default universe (three generators, words up to length
// six) with probe depth 8.

#include <chrono>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "earring/hefront.hpp"
#include "earring/separation.hpp"
#include "sep_check.hpp"
#include "test_util.hpp"

using namespace earring;

namespace {

constexpr int kDepth = 8;

struct Report {
  int passed = 0;
  int failed = 0;

  void line(int index, const std::string& name, bool ok, const std::string& detail) {
    std::cout << "[" << index << "] " << name << " ... " << (ok ? "PASS" : "FAIL");
    if (!detail.empty()) std::cout << " — " << detail;
    std::cout << "\n";
    (ok ? passed : failed) += 1;
  }
};

std::string plural(long n, const char* what) {
  return std::to_string(n) + " " + what + (n == 1 ? "" : "s");
}

GroupPoint wk(int k) { return GroupPoint(Point::finite_stage(testutil::w_fixture(k))); }

// --- criterion 1 -----------------------------------------------------------

bool reduction_confluence(std::string& detail) {
  long words = 0, checks = 0;
  for (const MonoidWord& w : testutil::all_monoid_words(8, 2)) {
    ++words;
    GroupWord target = reduce(w);
    auto nexts = delete_inessential(w);
    // endpoints of the deletion relation are exactly the reduced words,
    // and every single deletion preserves the reduced form; by induction on
    // length, every maximal chain ends at reduce(w)
    if (nexts.empty() != is_reduced(w)) {
      detail = "endpoint mismatch at " + to_string(w);
      return false;
    }
    for (const MonoidWord& v : nexts) {
      ++checks;
      if (!(reduce(v) == target)) {
        detail = "deletion changed the reduction of " + to_string(w);
        return false;
      }
    }
    // walk one maximal chain explicitly
    MonoidWord cur = w;
    while (true) {
      auto step = delete_inessential(cur);
      if (step.empty()) break;
      cur = step.front();
    }
    if (!(cur == target.word())) {
      detail = "a maximal chain missed the reduction of " + to_string(w);
      return false;
    }
  }
  detail = plural(words, "word") + ", " + plural(checks, "single-step check");
  return true;
}

// --- criterion 2 -----------------------------------------------------------

bool axiom_audit(const Universe& u, std::string& detail) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> pick(0, u.size() - 1);

  long compose_fail = 0;
  for (int t = 0; t < 1000; ++t) {
    GroupPoint g = u.element_point(pick(rng));
    for (int n = 1; n < kDepth; ++n)
      if (!(project_group(embed(project_group(g, n + 1)), n) == project_group(g, n)))
        ++compose_fail;
  }

  long chain_fail = 0;
  for (int t = 0; t < 1000; ++t) {
    GroupPoint g(Point::finite_stage(testutil::random_monoid_word(rng, 10, 3)));
    for (int n = 1; n < kDepth; ++n) {
      OrderVerdict a =
          cmp_G(embed(project_group(g, n)), embed(project_group(g, n + 1)), kDepth);
      OrderVerdict b = cmp_G(embed(project_group(g, n)), g, kDepth);
      if (a.is_greater() || b.is_greater()) ++chain_fail;
    }
  }

  // nesting law: build the hypothesis directly — k1 a strict projection of
  // k3, k2 anything strictly between
  long nest_checked = 0, nest_fail = 0;
  std::string example;
  while (nest_checked < 1000) {
    GroupPoint k3 = u.element_point(pick(rng));
    GroupWord g3 = project_group(k3, kDepth);
    if (g3.level() < 2) continue;
    std::uniform_int_distribution<int> lv(1, g3.level() - 1);
    GroupWord g1 = reduce(retract(g3.word(), lv(rng)));
    if (g1 == g3) continue;
    GroupPoint k1 = embed(g1);
    if (!cyl_contains(blowup(k1), blowup(k3))) continue;
    if (!cmp_G(k1, k3, kDepth).is_less()) continue;
    int r1 = u.rank(u.index_of(g1));
    int r3 = u.rank(u.index_of(g3));
    if (r3 - r1 < 2) continue;
    std::uniform_int_distribution<int> mid(r1 + 1, r3 - 1);
    GroupPoint k2 = u.element_point(u.index_of_rank(mid(rng)));
    ++nest_checked;
    if (!cyl_contains(blowup(k1), blowup(k2))) {
      ++nest_fail;
      if (example.empty())
        example = to_string(g1) + " < " + k2.to_string() + " < " + to_string(g3);
    }
  }

  std::ostringstream os;
  os << "compose " << (compose_fail == 0 ? "ok" : "FAILED") << ", chain "
     << (chain_fail == 0 ? "ok" : "FAILED") << ", blowup nesting " << nest_fail << "/"
     << nest_checked << " violations";
  if (nest_fail > 0)
    os << " (e.g. " << example
       << "; the nesting law fails for this order: projections constrain reduced"
          " words while the order grades by unreduced ones, and no admissible"
          " instantiation avoids it — only transfinite limit stages, which finite"
          " runs never reach, would need it)";
  detail = os.str();
  return compose_fail == 0 && chain_fail == 0 && nest_fail == 0;
}

// --- criterion 3 -----------------------------------------------------------

bool order_constraint_audit(std::string& detail) {
  long contexts = 0, members = 0;
  auto words = testutil::all_monoid_words(5, 3);
  for (int n = 1; n <= 3; ++n) {
    std::map<std::string, std::vector<const MonoidWord*>> by_context;
    for (const MonoidWord& w : words) {
      if (w.level() > n) continue;
      by_context[word_key(retract(w, n - 1))].push_back(&w);
    }
    for (auto& [ckey, group] : by_context) {
      const MonoidWord* context = nullptr;
      for (const MonoidWord* w : group)
        if (word_key(*w) == ckey) context = w;
      if (!context) {
        detail = "context missing from its own class";
        return false;
      }
      ++contexts;
      GroupWord qc = reduce(*context);
      for (const MonoidWord* w : group) {
        ++members;
        GroupWord q = reduce(*w);
        if (!(q == qc)) {
          if (shortlex_cmp(qc, q) != std::strong_ordering::less) {
            detail = "reduced image of context " + to_string(*context) +
                     " is not least against " + to_string(*w);
            return false;
          }
        } else if (!(*w == *context)) {
          if (length_lex_cmp(*context, *w) != std::strong_ordering::less) {
            detail = "context " + to_string(*context) + " is not least in its fiber";
            return false;
          }
        }
      }
    }
  }
  detail = plural(contexts, "context") + ", " + plural(members, "member");
  return true;
}

// --- criterion 4 -----------------------------------------------------------

bool convergence_fixtures(std::string& detail) {
  SequenceSpec conj;
  conj.name = "conj";
  conj.rule = WordTemplate::parse("x1 x%n X1");
  ConvergenceVerdict v1 = converge(conj, kDepth);
  if (!v1.converges() || !same_class_finite(*v1.limit, embed(GroupWord()))) {
    detail = "the conjugate family must converge to the identity";
    return false;
  }

  SequenceSpec pow;
  pow.name = "pow";
  pow.rule = WordTemplate::parse("(x1 x%n X1 x%n)^%n");
  ConvergenceVerdict v2 = converge(pow, kDepth);
  if (!v2.diverges() || !v2.evidence.growth.has_value()) {
    detail = "the powered family must diverge with a growth certificate";
    return false;
  }
  if (v2.evidence.growth->level != 1 || v2.evidence.growth->slope != 2) {
    detail = "unexpected growth certificate";
    return false;
  }
  for (const LevelEvidence& le : v2.evidence.levels)
    if (!le.projection_stabilized) {
      detail = "the powered family's projections must stabilize";
      return false;
    }

  for (int n = 2; n <= 10; ++n) {
    std::string w = "x1 x" + std::to_string(n) + " X1";
    if (!(sigma(parse_group_point(w), 12).word_at(1) == parse_word("x1 X1"))) {
      detail = "minimal representatives must keep the level-1 word x1 X1";
      return false;
    }
  }
  if (!sigma(parse_group_point("e"), 12).word_at(1).empty()) {
    detail = "the identity's minimal representative is empty";
    return false;
  }
  detail = "limit e, growth slope 2 at level 1, representative jump witnessed";
  return true;
}

// --- criterion 5 -----------------------------------------------------------

bool naive_vs_correct(const Universe& u, std::string& detail) {
  ClopenExpr naive(CylinderFamily{1, WordTemplate::parse("x%n")});
  ClopennessVerdict bad = relatively_clopen(naive, u, kDepth);
  if (bad.ok || !bad.witness.has_value() ||
      !same_class_finite(bad.witness->limit, embed(GroupWord())) ||
      !bad.witness->inside_to_outside) {
    detail = "the small-index union must be rejected with limit e";
    return false;
  }

  std::vector<GroupPoint> targets;
  for (int k = 1; k <= 5; ++k) targets.push_back(wk(k));
  auto r = thicken(embed(GroupWord()), targets, u, kDepth);
  if (member(embed(GroupWord()), r.cover, kDepth)) {
    detail = "the cover must exclude the identity";
    return false;
  }
  for (const GroupPoint& t : targets)
    if (!member(t, r.cover, kDepth)) {
      detail = "the cover must contain every target";
      return false;
    }
  ClopennessVerdict good = relatively_clopen(r.cover, u, kDepth);
  if (!good.ok) {
    detail = "the constructed cover must pass the witness families";
    return false;
  }
  std::ostringstream os;
  os << "rejected by witness " << bad.witness->sequence_name << " (limit e); cover = "
     << to_string(r.cover);
  detail = os.str();
  return true;
}

// --- criterion 6 -----------------------------------------------------------

bool randomized_thicken(const Universe& u, std::string& detail) {
  std::mt19937 rng(66);
  std::uniform_int_distribution<int> pick(0, u.size() - 1);
  std::uniform_int_distribution<int> size_d(1, 8);
  int done = 0;
  while (done < 500) {
    GroupPoint a = u.element_point(pick(rng));
    int want = size_d(rng);
    std::vector<GroupPoint> b;
    std::set<std::string> seen;
    for (int tries = 0; static_cast<int>(b.size()) < want && tries < 200; ++tries) {
      GroupPoint c = u.element_point(pick(rng));
      if (!cmp_G(a, c, kDepth).is_less()) continue;
      if (!seen.insert(word_key(c.rep().stage_word())).second) continue;
      b.push_back(c);
    }
    if (b.empty()) continue;
    auto r = thicken(a, b, u, kDepth);
    if (r.trace.steps.size() > b.size()) {
      detail = "instance " + std::to_string(done) + ": too many steps";
      return false;
    }
    if (member(a, r.cover, kDepth)) {
      detail = "instance " + std::to_string(done) + ": anchor inside the cover";
      return false;
    }
    for (const GroupPoint& t : b)
      if (!member(t, r.cover, kDepth)) {
        detail = "instance " + std::to_string(done) + ": target uncovered";
        return false;
      }
    if (!sepcheck::universe_above(a, r.cover, u, kDepth)) {
      detail = "instance " + std::to_string(done) + ": cover dips below the anchor";
      return false;
    }
    std::string what;
    if (!sepcheck::trace_monotone(r.trace, u, &what)) {
      detail = "instance " + std::to_string(done) + ": " + what;
      return false;
    }
    if (!sepcheck::eta_minimal(r.trace, a, b, u, kDepth, &what)) {
      detail = "instance " + std::to_string(done) + ": " + what;
      return false;
    }
    ++done;
  }
  detail = "500 instances, all postconditions and trace invariants held";
  return true;
}

// --- criterion 7 -----------------------------------------------------------

bool randomized_separate(const Universe& u, std::string& detail) {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> pick(0, u.size() - 1);
  std::uniform_int_distribution<int> size_d(1, 5);
  int done = 0;
  while (done < 200) {
    std::set<std::string> seen;
    std::vector<GroupPoint> a, b;
    int wa = size_d(rng), wb = size_d(rng);
    for (int tries = 0; static_cast<int>(a.size()) < wa && tries < 100; ++tries) {
      GroupPoint c = u.element_point(pick(rng));
      if (seen.insert(word_key(c.rep().stage_word())).second) a.push_back(c);
    }
    for (int tries = 0; static_cast<int>(b.size()) < wb && tries < 100; ++tries) {
      GroupPoint c = u.element_point(pick(rng));
      if (seen.insert(word_key(c.rep().stage_word())).second) b.push_back(c);
    }
    if (a.empty() || b.empty()) continue;
    auto r = separate(a, b, u, kDepth);
    for (const GroupPoint& x : a)
      if (!member(x, r.side_a, kDepth)) {
        detail = "instance " + std::to_string(done) + ": A uncovered";
        return false;
      }
    for (const GroupPoint& y : b)
      if (member(y, r.side_a, kDepth)) {
        detail = "instance " + std::to_string(done) + ": B meets the A side";
        return false;
      }
    for (const TraceStep& s : r.trace.steps) {
      bool ma = false, mb = false;
      for (const GroupPoint& x : a) ma = ma || member(x, s.piece, kDepth);
      for (const GroupPoint& y : b) mb = mb || member(y, s.piece, kDepth);
      if (ma && mb) {
        detail = "instance " + std::to_string(done) + ": a piece meets both sides";
        return false;
      }
    }
    if (!relatively_clopen(r.side_a, u, kDepth).ok) {
      detail = "instance " + std::to_string(done) + ": A side rejected by a witness";
      return false;
    }
    std::string what;
    if (!sepcheck::trace_monotone(r.trace, u, &what)) {
      detail = "instance " + std::to_string(done) + ": " + what;
      return false;
    }
    ++done;
  }
  detail = "200 disjoint pairs, all postconditions held";
  return true;
}

// --- criterion 8 -----------------------------------------------------------

bool loop_soundness(std::string& detail) {
  std::mt19937 rng(88);
  for (int t = 0; t < 1000; ++t) {
    MonoidWord a = testutil::random_monoid_word(rng, 9, 4);
    MonoidWord b = testutil::random_monoid_word(rng, 9, 4);
    bool eq = loop_eq(LoopItinerary{a}, LoopItinerary{b});
    bool levelwise = true;
    for (int n = 1; n <= std::max({a.level(), b.level(), 1}) && levelwise; ++n)
      levelwise = reduce(retract(a, n)) == reduce(retract(b, n));
    if (eq != levelwise || eq != (reduce(a) == reduce(b))) {
      detail = "pair " + std::to_string(t) + ": equality disagreement";
      return false;
    }
    GroupPoint cab = loop_class(LoopItinerary{concat(a, b)});
    for (int n = 1; n <= 4; ++n) {
      GroupWord lhs = project_group(cab, n);
      GroupWord rhs = reduced_product(reduce(retract(a, n)), reduce(retract(b, n)));
      if (!(lhs == rhs)) {
        detail = "pair " + std::to_string(t) + ": concatenation mismatch at level " +
                 std::to_string(n);
        return false;
      }
    }
  }
  detail = "1000 pairs, levelwise equality and products agree";
  return true;
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  Universe u = Universe::make(3, 6);
  Report r;
  std::string d;

  bool ok;
  ok = reduction_confluence(d);
  r.line(1, "reduction confluence (exhaustive, length <= 8, two generators)", ok, d);
  ok = axiom_audit(u, d);
  r.line(2, "axiom audit (compose, chain, nesting; >= 1000 samples each)", ok, d);
  ok = order_constraint_audit(d);
  r.line(3, "order constraint audit (exhaustive contexts, length <= 5)", ok, d);
  ok = convergence_fixtures(d);
  r.line(4, "convergence fixtures", ok, d);
  ok = naive_vs_correct(u, d);
  r.line(5, "naive vs constructed thickening", ok, d);
  ok = randomized_thicken(u, d);
  r.line(6, "randomized thicken (500 instances)", ok, d);
  ok = randomized_separate(u, d);
  r.line(7, "randomized separate (200 instances)", ok, d);
  ok = loop_soundness(d);
  r.line(8, "loop equivalence soundness (1000 pairs)", ok, d);

  auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - t0);
  std::cout << "ACCEPTANCE: " << r.passed << "/" << (r.passed + r.failed)
            << " criteria passed in " << std::fixed << std::setprecision(1)
            << dt.count() / 1000.0 << " s\n";
  return r.failed == 0 ? 0 : 1;
}
