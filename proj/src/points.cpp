#include "earring/points.hpp"

#include <algorithm>
#include <cctype>

#include "earring/errors.hpp"

namespace earring {

Point Point::finite_stage(MonoidWord w) {
  Point p;
  p.kind_ = Kind::finite;
  p.word_ = std::move(w);
  p.probe_depth_ = kUnboundedDepth;
  return p;
}

Point Point::stream(MonoidWord base, WordTemplate tail, int probe_depth) {
  if (!tail.pure_level_block())
    throw InputError("stream tail must use letters of index exactly %n");
  if (probe_depth < 1) throw InputError("probe depth must be >= 1");
  Point p;
  p.kind_ = Kind::stream;
  p.word_ = std::move(base);
  p.tail_ = std::move(tail);
  p.tail_start_ = p.word_.level() + 1;
  p.probe_depth_ = probe_depth;
  return p;
}

Point Point::materialized(std::vector<MonoidWord> level_words) {
  if (level_words.empty()) throw InputError("materialized point needs at least one level");
  for (std::size_t k = 0; k + 1 < level_words.size(); ++k) {
    if (retract(level_words[k + 1], static_cast<int>(k) + 1) != level_words[k])
      throw InvariantError("materialized point is not coherent at level " +
                           std::to_string(k + 1));
  }
  Point p;
  p.kind_ = Kind::materialized;
  p.levels_ = std::move(level_words);
  p.probe_depth_ = static_cast<int>(p.levels_.size());
  return p;
}

MonoidWord Point::word_at(int level) const {
  if (level < 0) throw InputError("level must be >= 0");
  switch (kind_) {
    case Kind::finite:
      return retract(word_, level);
    case Kind::stream: {
      if (level > probe_depth_)
        throw InputError("probe depth exceeded: level " + std::to_string(level) +
                         " > " + std::to_string(probe_depth_));
      // tail templates are %n-pure, so block n uses index n only
      MonoidWord w = retract(word_, level);
      for (int n = tail_start_; n <= level; ++n) w = concat(w, tail_.materialize(n));
      return w;
    }
    case Kind::materialized:
      if (level == 0) return MonoidWord();
      if (level > probe_depth_)
        throw InputError("probe depth exceeded: level " + std::to_string(level) +
                         " > " + std::to_string(probe_depth_));
      return levels_[static_cast<std::size_t>(level) - 1];
  }
  throw InvariantError("unreachable point kind");
}

const MonoidWord& Point::stage_word() const {
  if (kind_ != Kind::finite) throw InputError("not a finite-stage presentation");
  return word_;
}

bool Point::same_presentation(const Point& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::finite:
      return word_ == other.word_;
    case Kind::stream:
      return word_ == other.word_ && tail_.source() == other.tail_.source() &&
             probe_depth_ == other.probe_depth_;
    case Kind::materialized:
      return levels_ == other.levels_;
  }
  return false;
}

std::string Point::to_string() const {
  switch (kind_) {
    case Kind::finite:
      return earring::to_string(word_);
    case Kind::stream:
      return "stream " + earring::to_string(word_) + " :: " + tail_.source();
    case Kind::materialized:
      return earring::to_string(levels_.back()) + " (materialized to level " +
             std::to_string(probe_depth_) + ")";
  }
  return "?";
}

GroupPoint embed(const GroupWord& g) { return GroupPoint(Point::finite_stage(g.word())); }

Cylinder::Cylinder(int level_, GroupWord base_) : level(level_), base(std::move(base_)) {
  if (level < 1) throw InputError("cylinder level must be >= 1");
  if (base.level() > level)
    throw InputError("cylinder base " + earring::to_string(base) +
                     " exceeds level " + std::to_string(level));
}

std::string to_string(const Cylinder& c) {
  return "Cyl(" + std::to_string(c.level) + "; " + to_string(c.base) + ")";
}

GroupWord project_group(const GroupPoint& p, int level) {
  return reduce(p.rep().word_at(level));
}

std::vector<GroupWord> phi(const GroupPoint& p, int depth) {
  if (depth < 0) throw InputError("depth must be >= 0");
  std::vector<GroupWord> out;
  out.reserve(static_cast<std::size_t>(depth));
  for (int n = 1; n <= depth; ++n) out.push_back(project_group(p, n));
  return out;
}

FiniteStageVerdict is_finite_stage(const GroupPoint& p, int depth) {
  const Point& rep = p.rep();
  if (rep.finite_stage_presentation()) {
    // constant exactly from the word's own level upward
    return FiniteStageVerdict{true, rep.stage_word().level()};
  }
  int bound = std::min(depth, rep.probe_depth());
  if (bound < 1) return FiniteStageVerdict{false, 0};
  MonoidWord last = rep.word_at(bound);
  int stage = bound;
  for (int n = bound - 1; n >= 0; --n) {
    if (rep.word_at(n) != last) break;
    stage = n;
  }
  // a single unconfirmed sample at the end proves nothing
  if (stage == bound) return FiniteStageVerdict{false, 0};
  return FiniteStageVerdict{true, stage};
}

Point sigma(const GroupPoint& p, int depth) {
  if (depth < 1) throw InputError("sigma depth must be >= 1");
  const Point& rep = p.rep();
  if (rep.finite_stage_presentation()) {
    return Point::finite_stage(reduce(rep.stage_word()).word());
  }
  FiniteStageVerdict fs = is_finite_stage(p, std::min(depth, rep.probe_depth()));
  if (fs.yes) {
    return Point::finite_stage(reduce(rep.word_at(fs.stage)).word());
  }
  if (depth > rep.probe_depth())
    throw InputError("sigma depth exceeds probe depth of the point");
  // confirmation window past `depth`, capped by the probe depth
  int window_end = std::min(rep.probe_depth(), depth + 4);
  std::vector<MonoidWord> reduced_reps;  // index n-1: reduced word of word_at(n)
  reduced_reps.reserve(static_cast<std::size_t>(window_end));
  for (int n = 1; n <= window_end; ++n)
    reduced_reps.push_back(reduce(rep.word_at(n)).word());

  std::vector<MonoidWord> levels;
  levels.reserve(static_cast<std::size_t>(depth));
  for (int N = 1; N <= depth; ++N) {
    MonoidWord last = retract(reduced_reps.back(), N);
    int stable_from = window_end;
    for (int n = window_end - 1; n >= N; --n) {
      if (retract(reduced_reps[static_cast<std::size_t>(n) - 1], N) != last) break;
      stable_from = n;
    }
    if (stable_from >= window_end)
      throw InputError("sigma stabilization not detected at level " + std::to_string(N) +
                       " within probe depth " + std::to_string(window_end));
    levels.push_back(std::move(last));
  }
  return Point::materialized(std::move(levels));
}

Cylinder blowup(const GroupPoint& p) {
  FiniteStageVerdict fs = is_finite_stage(p, p.rep().probe_depth());
  if (!fs.yes && !p.rep().finite_stage_presentation())
    throw InputError("blowup requires a finite-stage point");
  GroupWord g = reduce(p.rep().word_at(fs.stage));
  int level = g.level();
  if (level == 0) return Cylinder(1, GroupWord());  // identity convention
  return Cylinder(level, g);
}

GroupWord induced_r(const GroupWord& g, int n) {
  if (n < 0) throw InputError("level must be >= 0");
  if (g.level() > n + 1)
    throw InputError("induced_r: word level exceeds n+1");
  return reduce(retract(g.word(), n));
}

GroupWord induced_j(const GroupWord& g, int n) {
  if (g.level() > n) throw InputError("induced_j: word level exceeds n");
  return g;
}

bool equal_up_to_depth(const GroupPoint& a, const GroupPoint& b, int depth) {
  if (a.rep().finite_stage_presentation() && b.rep().finite_stage_presentation()) {
    GroupWord ra = reduce(a.rep().stage_word());
    GroupWord rb = reduce(b.rep().stage_word());
    int bound = std::min(depth, std::max(ra.level(), rb.level()));
    for (int n = 1; n <= bound; ++n)
      if (reduce(retract(ra.word(), n)) != reduce(retract(rb.word(), n))) return false;
    return true;
  }
  for (int n = 1; n <= depth; ++n)
    if (project_group(a, n) != project_group(b, n)) return false;
  return true;
}

bool same_class_finite(const GroupPoint& a, const GroupPoint& b) {
  if (!a.rep().finite_stage_presentation() || !b.rep().finite_stage_presentation())
    return false;
  return reduce(a.rep().stage_word()) == reduce(b.rep().stage_word());
}

Point parse_point(std::string_view text, int probe_depth) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  std::string_view rest = text.substr(i);
  if (rest.substr(0, 6) == "stream") {
    rest.remove_prefix(6);
    std::size_t sep = rest.find("::");
    if (sep == std::string_view::npos)
      throw InputError("stream literal needs '<base> :: <tail-template>'");
    MonoidWord base = parse_word(rest.substr(0, sep));
    WordTemplate tail = WordTemplate::parse(rest.substr(sep + 2));
    return Point::stream(std::move(base), std::move(tail), probe_depth);
  }
  return Point::finite_stage(parse_word(text));
}

GroupPoint parse_group_point(std::string_view text, int probe_depth) {
  return GroupPoint(parse_point(text, probe_depth));
}

}  // namespace earring
