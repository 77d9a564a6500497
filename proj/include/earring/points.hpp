#pragma once

#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "earring/templates.hpp"
#include "earring/words.hpp"

namespace earring {

inline constexpr int kUnboundedDepth = std::numeric_limits<int>::max() / 2;

// A point of the inverse limit of the word monoids: a coherent sequence of
// unreduced words, one per level, with retract(word_at(n+1), n) == word_at(n).
//
// Three presentations:
//  - finite stage: a single word, constant from its level upward;
//  - stream: base word plus a tail template appending, at each level n past
//    the base, a block of letters of index exactly n (coherent by
//    construction);
//  - materialized: explicit words for levels 1..probe_depth (coherence
//    validated), as produced by the minimal-representative map on streams.
//
// probe_depth bounds how deep a stream/materialized point may be inspected;
// any answer a deeper level could falsify is labeled "-up-to-depth".
class Point {
 public:
  static Point finite_stage(MonoidWord w);
  static Point stream(MonoidWord base, WordTemplate tail, int probe_depth);
  static Point materialized(std::vector<MonoidWord> level_words);

  MonoidWord word_at(int level) const;  // level >= 0; throws past probe_depth
  int probe_depth() const { return probe_depth_; }

  bool finite_stage_presentation() const { return kind_ == Kind::finite; }
  const MonoidWord& stage_word() const;

  bool same_presentation(const Point& other) const;
  std::string to_string() const;

 private:
  enum class Kind { finite, stream, materialized };
  Point() = default;

  Kind kind_ = Kind::finite;
  MonoidWord word_;            // finite stage / stream base
  WordTemplate tail_;          // stream
  int tail_start_ = 1;         // first level the tail contributes to
  std::vector<MonoidWord> levels_;  // materialized, levels_[k-1] = level-k word
  int probe_depth_ = kUnboundedDepth;
};

// Element of the limit group: a class of coherent points with equal reduced
// projections at every level, carried by a representative point.
class GroupPoint {
 public:
  explicit GroupPoint(Point rep) : rep_(std::move(rep)) {}
  const Point& rep() const { return rep_; }
  int probe_depth() const { return rep_.probe_depth(); }
  std::string to_string() const { return rep_.to_string(); }

 private:
  Point rep_;
};

GroupPoint embed(const GroupWord& g);

// Basic clopen set {g : projection at `level` equals `base`}. Nonempty: it
// always contains the embedded base, which is also its minimum.
struct Cylinder {
  int level = 1;
  GroupWord base;

  Cylinder(int level, GroupWord base);
  friend bool operator==(const Cylinder&, const Cylinder&) = default;
};

std::string to_string(const Cylinder& c);

// Reduced projection at a level: reduce(word_at(level)).
GroupWord project_group(const GroupPoint& p, int level);

// The projection sequence (level 1, ..., depth).
std::vector<GroupWord> phi(const GroupPoint& p, int depth);

struct FiniteStageVerdict {
  bool yes = false;
  int stage = 0;  // minimal level from which the words are constant
};

// Detects eventual constancy of the underlying word sequence within depth.
FiniteStageVerdict is_finite_stage(const GroupPoint& p, int depth);

// Minimal representative of the class of p, materialized to `depth` levels:
// per level N, the stabilized value of retract(reduced(word_at(n)), N) as n
// grows. Exact for finite-stage points; for streams the stabilization is
// confirmed within the probe depth or reported as undetected.
Point sigma(const GroupPoint& p, int depth);

// Cylinder pinning the minimal finite stage of p: level = minimal group
// level of the class (1 for the identity, by convention), base = the
// projection there. Requires a finite-stage point.
Cylinder blowup(const GroupPoint& p);

// Induced maps between consecutive group levels: induced_r drops to level n
// (reduce after retract), induced_j is the inclusion. r after j is the
// identity.
GroupWord induced_r(const GroupWord& g, int n);
GroupWord induced_j(const GroupWord& g, int n);

// True iff the reduced projections agree at every level <= depth.
bool equal_up_to_depth(const GroupPoint& a, const GroupPoint& b, int depth);

// Exact class equality for finite-stage points.
bool same_class_finite(const GroupPoint& a, const GroupPoint& b);

// Point literal: a word, or "stream <base-word> :: <tail-template>".
Point parse_point(std::string_view text, int probe_depth = 32);
GroupPoint parse_group_point(std::string_view text, int probe_depth = 32);

}  // namespace earring
