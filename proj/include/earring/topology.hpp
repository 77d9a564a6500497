#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "earring/order.hpp"
#include "earring/points.hpp"
#include "earring/templates.hpp"

namespace earring {

// Unbounded union of cylinders Cyl(k; base(k)) for k >= from. Needed to
// express the naive small-index thickening of an infinite family, whose
// failure to be clopen is the whole point of the construction; finite
// expressions can never be rejected by a convergent witness.
struct CylinderFamily {
  int from = 1;
  WordTemplate base;
};

using ClopenAtom = std::variant<Cylinder, CylinderFamily>;

struct ClopenTerm {
  ClopenAtom shape;
  std::vector<ClopenAtom> subtracted;
};

// Finite union of (atom minus atoms). The empty expression denotes the
// empty set. Membership is decided pointwise through the projections.
class ClopenExpr {
 public:
  ClopenExpr() = default;
  explicit ClopenExpr(Cylinder c);
  explicit ClopenExpr(CylinderFamily f);

  static ClopenExpr empty() { return ClopenExpr(); }

  bool is_empty() const { return terms_.empty(); }
  const std::vector<ClopenTerm>& terms() const { return terms_; }

  void add_term(ClopenTerm t) { terms_.push_back(std::move(t)); }
  void add_union(const ClopenExpr& other);

 private:
  std::vector<ClopenTerm> terms_;
};

std::string to_string(const ClopenAtom& a);
std::string to_string(const ClopenExpr& e);

// Textual form: Cyl(N; <word>) or Cyl(%k; <template>), '+' unions,
// '-' differences, parentheses around a term with subtractions.
ClopenExpr parse_clopen_expr(std::string_view text);

bool member(const GroupPoint& g, const Cylinder& c, int depth);
bool member(const GroupPoint& g, const CylinderFamily& f, int depth);
bool member(const GroupPoint& g, const ClopenAtom& a, int depth);
bool member(const GroupPoint& g, const ClopenExpr& e, int depth);

// Exact containment: level(outer) <= level(inner) and the projection chain
// of inner's base down to outer's level equals outer's base.
bool cyl_contains(const Cylinder& outer, const Cylinder& inner);

bool cyl_disjoint(const Cylinder& a, const Cylinder& b);

// The embedded base, which the projection chain makes the least element.
GroupPoint cyl_min(const Cylinder& c);

// Explicit term sequence plus an optional %n rule for the tail.
struct SequenceSpec {
  std::string name;
  std::vector<MonoidWord> explicit_terms;
  std::optional<WordTemplate> rule;

  bool has_rule() const { return rule.has_value(); }
  int explicit_count() const { return static_cast<int>(explicit_terms.size()); }
  MonoidWord term(int n) const;  // 1-based

  // One word per line and/or a single "rule: <template>" line; '#' comments.
  static SequenceSpec parse(std::istream& in, std::string name = "seq");
};

// The finite fragment of the group over which global quantifiers are
// evaluated exactly: every reduced word of level <= max_level and length
// <= max_len, closed under projections, ranked by the canonical order.
// Carries a catalog of witness sequences and optional extra points.
class Universe {
 public:
  static Universe make(int max_level, int max_len);

  int max_level() const { return max_level_; }
  int max_len() const { return max_len_; }
  int size() const { return static_cast<int>(elements_.size()); }

  const GroupWord& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
  GroupPoint element_point(int i) const { return embed(element(i)); }
  int index_of(const GroupWord& g) const;       // -1 when absent
  int rank(int i) const { return ranks_[static_cast<std::size_t>(i)]; }
  int index_of_rank(int r) const { return by_rank_[static_cast<std::size_t>(r)]; }

  // Projection of element i to `level` as an element index.
  int projection_index(int i, int level) const;

  bool elem_member(int i, const Cylinder& c) const;
  bool elem_member(int i, const ClopenAtom& a) const;
  bool elem_member(int i, const ClopenTerm& t) const;
  bool elem_member(int i, const ClopenExpr& e) const;

  // Largest-rank universe member of e; -1 when e misses the universe.
  int max_rank_member(const ClopenExpr& e) const;
  int min_rank_member(const ClopenExpr& e) const;

  std::vector<int> members_of(const ClopenExpr& e) const;  // element indices

  std::vector<SequenceSpec> witnesses;
  std::vector<GroupPoint> extras;  // optional stream points at fixed probe depth

 private:
  int max_level_ = 0;
  int max_len_ = 0;
  std::vector<GroupWord> elements_;
  std::vector<int> ranks_;
  std::vector<int> by_rank_;
  std::vector<std::vector<int>> proj_;  // proj_[i][n], n = 0..max_level
  // key -> index
  std::vector<std::pair<std::string, int>> key_index_;
  int identity_index_ = 0;
};

// "L=<n>,len=<n>"
Universe parse_universe_spec(std::string_view text);

// Every tracked point and every universe member of E precedes b. The
// universe part is exact over the enumerated fragment; tracked points cover
// known members outside it.
bool set_less(const ClopenExpr& e, std::span<const GroupPoint> tracked,
              const GroupPoint& b, const Universe& u, int depth);
bool set_less(std::span<const GroupPoint> finite_set, const GroupPoint& b, int depth);

struct AffineGrowthCert {
  int level = 0;
  std::int64_t slope = 0;       // >= 1
  std::int64_t base_value = 0;  // count at window_from
  int window_from = 0;
  int window_to = 0;
};

struct PeriodicityCert {
  int level = 0;
  int period = 0;  // >= 2
  int window_from = 0;
  int window_to = 0;
};

struct LevelEvidence {
  int level = 0;
  bool projection_stabilized = false;
  int stabilized_at = 0;       // first index of the constant tail
  GroupWord projection_value;  // valid when stabilized
  bool counts_bounded = false;
  int last_new_value_at = 0;  // last index contributing a new sigma-retract
  int max_count = 0;
};

struct ConvergenceEvidence {
  int depth = 0;
  int window = 0;  // terms 1..window were materialized
  std::vector<LevelEvidence> levels;
  std::optional<AffineGrowthCert> growth;
  std::optional<PeriodicityCert> periodicity;
  bool limit_materialized_at_depth = false;
};

struct ConvergenceVerdict {
  enum class Kind { converges, diverges, inconclusive } kind = Kind::inconclusive;
  std::optional<GroupPoint> limit;
  ConvergenceEvidence evidence;

  bool converges() const { return kind == Kind::converges; }
  bool diverges() const { return kind == Kind::diverges; }
};

std::string to_string(const ConvergenceVerdict& v);

// Sequence convergence oracle. Converges when every projection level
// stabilizes and the sigma-retract sets stop growing; diverges only on a
// certificate (exact affine letter-count growth along the rule, or exact
// projection periodicity); inconclusive otherwise.
ConvergenceVerdict converge(const SequenceSpec& seq, int depth);

struct BoundaryWitness {
  std::string sequence_name;
  GroupPoint limit;
  bool inside_to_outside = false;  // terms eventually inside, limit outside
};

struct ClopennessVerdict {
  bool ok = true;
  std::optional<BoundaryWitness> witness;
};

// Desk-scale clopen check: no cataloged convergent sequence crosses the
// boundary of e (terms eventually inside with limit outside, or the
// reverse).
ClopennessVerdict relatively_clopen(const ClopenExpr& e, const Universe& u, int depth);

}  // namespace earring
