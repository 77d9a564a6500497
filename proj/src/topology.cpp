#include "earring/topology.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <set>
#include <sstream>

#include "earring/errors.hpp"

namespace earring {

ClopenExpr::ClopenExpr(Cylinder c) { terms_.push_back(ClopenTerm{ClopenAtom(std::move(c)), {}}); }
ClopenExpr::ClopenExpr(CylinderFamily f) {
  terms_.push_back(ClopenTerm{ClopenAtom(std::move(f)), {}});
}

void ClopenExpr::add_union(const ClopenExpr& other) {
  terms_.insert(terms_.end(), other.terms().begin(), other.terms().end());
}

std::string to_string(const ClopenAtom& a) {
  if (const Cylinder* c = std::get_if<Cylinder>(&a)) return to_string(*c);
  const CylinderFamily& f = std::get<CylinderFamily>(a);
  std::string s = "Cyl(%n";
  if (f.from != 1) s += ">=" + std::to_string(f.from);
  s += "; " + f.base.source() + ")";
  return s;
}

std::string to_string(const ClopenExpr& e) {
  if (e.is_empty()) return "empty";
  std::string s;
  for (std::size_t i = 0; i < e.terms().size(); ++i) {
    if (i) s += " + ";
    const ClopenTerm& t = e.terms()[i];
    if (t.subtracted.empty()) {
      s += to_string(t.shape);
    } else {
      s += "(" + to_string(t.shape);
      for (const ClopenAtom& d : t.subtracted) s += " - " + to_string(d);
      s += ")";
    }
  }
  return s;
}

namespace {

struct ECursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool eat_word(std::string_view w) {
    skip_ws();
    if (text.substr(pos, w.size()) == w) {
      pos += w.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  int read_nat() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected a number");
    long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000) fail("number too large");
      ++pos;
    }
    return static_cast<int>(v);
  }

  // body of Cyl(...) up to the matching ')', honoring nested parens
  std::string_view read_balanced_until_close() {
    skip_ws();
    std::size_t start = pos;
    int depth = 0;
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '(') ++depth;
      if (c == ')') {
        if (depth == 0) return text.substr(start, pos - start);
        --depth;
      }
      ++pos;
    }
    fail("expected ')'");
  }
};

ClopenAtom parse_atom(ECursor& c) {
  if (!c.eat_word("Cyl")) c.fail("expected 'Cyl'");
  if (!c.eat('(')) c.fail("expected '(' after Cyl");
  c.skip_ws();
  if (c.peek() == '%') {
    ++c.pos;
    if (!c.eat('n')) c.fail("expected %n");
    int from = 1;
    if (c.eat_word(">=")) from = c.read_nat();
    if (!c.eat(';')) c.fail("expected ';'");
    std::string_view body = c.read_balanced_until_close();
    if (!c.eat(')')) c.fail("expected ')'");
    return ClopenAtom(CylinderFamily{from, WordTemplate::parse(body)});
  }
  int level = c.read_nat();
  if (!c.eat(';')) c.fail("expected ';'");
  std::string_view body = c.read_balanced_until_close();
  if (!c.eat(')')) c.fail("expected ')'");
  return ClopenAtom(Cylinder(level, GroupWord(parse_word(body))));
}

ClopenTerm parse_term(ECursor& c) {
  bool parenthesized = false;
  c.skip_ws();
  if (c.peek() == '(') {
    std::size_t save = c.pos;
    ++c.pos;
    c.skip_ws();
    if (c.text.substr(c.pos, 3) == "Cyl") {
      parenthesized = true;
    } else {
      c.pos = save;
    }
  }
  ClopenTerm t{parse_atom(c), {}};
  while (c.eat('-')) t.subtracted.push_back(parse_atom(c));
  if (parenthesized && !c.eat(')')) c.fail("expected ')' closing the term");
  return t;
}

}  // namespace

ClopenExpr parse_clopen_expr(std::string_view text) {
  ECursor c{text};
  c.skip_ws();
  ClopenExpr e;
  if (c.eat_word("empty")) {
    if (!c.done()) c.fail("trailing text after 'empty'");
    return e;
  }
  e.add_term(parse_term(c));
  while (c.eat('+')) e.add_term(parse_term(c));
  if (!c.done()) c.fail("trailing text in clopen expression");
  return e;
}

bool member(const GroupPoint& g, const Cylinder& c, int depth) {
  if (c.level > depth)
    throw InputError("depth exceeded: cylinder level " + std::to_string(c.level) +
                     " > depth " + std::to_string(depth));
  return project_group(g, c.level) == c.base;
}

bool member(const GroupPoint& g, const CylinderFamily& f, int depth) {
  const Point& rep = g.rep();
  int bound;
  if (rep.finite_stage_presentation()) {
    GroupWord rho = reduce(rep.stage_word());
    // past this bound a parametric base outgrows rho in level or length,
    // and the projections of g are already constant
    bound = std::max(f.from, std::max(rho.level(), rho.size()) + 1);
  } else {
    bound = std::min(rep.probe_depth(), std::max(f.from, depth));
  }
  for (int k = f.from; k <= bound; ++k) {
    GroupWord base(f.base.materialize(k));
    Cylinder c(k, std::move(base));
    if (project_group(g, k) == c.base) return true;
  }
  return false;
}

bool member(const GroupPoint& g, const ClopenAtom& a, int depth) {
  if (const Cylinder* c = std::get_if<Cylinder>(&a)) return member(g, *c, depth);
  return member(g, std::get<CylinderFamily>(a), depth);
}

bool member(const GroupPoint& g, const ClopenExpr& e, int depth) {
  for (const ClopenTerm& t : e.terms()) {
    if (!member(g, t.shape, depth)) continue;
    bool cut = false;
    for (const ClopenAtom& d : t.subtracted) {
      if (member(g, d, depth)) {
        cut = true;
        break;
      }
    }
    if (!cut) return true;
  }
  return false;
}

bool cyl_contains(const Cylinder& outer, const Cylinder& inner) {
  if (outer.level > inner.level) return false;
  return reduce(retract(inner.base.word(), outer.level)) == outer.base;
}

bool cyl_disjoint(const Cylinder& a, const Cylinder& b) {
  return !cyl_contains(a, b) && !cyl_contains(b, a);
}

GroupPoint cyl_min(const Cylinder& c) { return embed(c.base); }

MonoidWord SequenceSpec::term(int n) const {
  if (n < 1) throw InputError("sequence index must be >= 1");
  if (n <= explicit_count()) return explicit_terms[static_cast<std::size_t>(n) - 1];
  if (rule) return rule->materialize(n);
  throw InputError("sequence has only " + std::to_string(explicit_count()) +
                   " explicit terms and no rule");
}

SequenceSpec SequenceSpec::parse(std::istream& in, std::string name) {
  SequenceSpec s;
  s.name = std::move(name);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size() || line[i] == '#') continue;
    std::string_view rest = std::string_view(line).substr(i);
    if (rest.substr(0, 5) == "rule:") {
      if (s.rule) throw InputError("sequence file has more than one rule: line");
      s.rule = WordTemplate::parse(rest.substr(5));
      continue;
    }
    s.explicit_terms.push_back(parse_word(rest));
  }
  if (s.explicit_terms.empty() && !s.rule)
    throw InputError("empty sequence specification");
  return s;
}

namespace {

void enumerate_reduced(int max_level, int max_len, std::vector<Letter>& cur,
                       std::vector<GroupWord>& out) {
  out.push_back(GroupWord(MonoidWord(cur)));
  if (static_cast<int>(cur.size()) >= max_len) return;
  for (int idx = 1; idx <= max_level; ++idx) {
    for (Sign s : {Sign::plus, Sign::minus}) {
      Letter l{idx, s};
      if (!cur.empty() && cur.back() == inverse(l)) continue;
      cur.push_back(l);
      enumerate_reduced(max_level, max_len, cur, out);
      cur.pop_back();
    }
  }
}

}  // namespace

Universe Universe::make(int max_level, int max_len) {
  if (max_level < 1 || max_len < 0) throw InputError("universe needs L >= 1, len >= 0");
  Universe u;
  u.max_level_ = max_level;
  u.max_len_ = max_len;
  {
    std::vector<Letter> cur;
    enumerate_reduced(max_level, max_len, cur, u.elements_);
  }
  const int n = u.size();
  u.key_index_.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    u.key_index_.emplace_back(word_key(u.elements_[static_cast<std::size_t>(i)].word()), i);
  std::sort(u.key_index_.begin(), u.key_index_.end());
  u.identity_index_ = u.index_of(GroupWord());

  u.proj_.assign(static_cast<std::size_t>(n), {});
  for (int i = 0; i < n; ++i) {
    auto& row = u.proj_[static_cast<std::size_t>(i)];
    row.resize(static_cast<std::size_t>(max_level) + 1);
    for (int lv = 0; lv <= max_level; ++lv) {
      GroupWord p = reduce(retract(u.elements_[static_cast<std::size_t>(i)].word(), lv));
      int pi = u.index_of(p);
      if (pi < 0) throw InvariantError("universe not closed under projections");
      row[static_cast<std::size_t>(lv)] = pi;
    }
  }

  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    pts.push_back(Point::finite_stage(u.elements_[static_cast<std::size_t>(i)].word()));
  u.by_rank_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) u.by_rank_[static_cast<std::size_t>(i)] = i;
  std::sort(u.by_rank_.begin(), u.by_rank_.end(), [&](int a, int b) {
    return cmp_X(pts[static_cast<std::size_t>(a)], pts[static_cast<std::size_t>(b)],
                 max_level)
        .is_less();
  });
  u.ranks_.resize(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) u.ranks_[static_cast<std::size_t>(u.by_rank_[static_cast<std::size_t>(r)])] = r;

  // default witness catalog: the two named convergent families
  {
    SequenceSpec a;
    a.name = "xk-xk+1";
    a.rule = WordTemplate::parse("x%n x%(n+1)");
    u.witnesses.push_back(std::move(a));
    SequenceSpec b;
    b.name = "x1-xk-X1";
    b.rule = WordTemplate::parse("x1 x%n X1");
    u.witnesses.push_back(std::move(b));
  }
  return u;
}

int Universe::index_of(const GroupWord& g) const {
  std::string k = word_key(g.word());
  auto it = std::lower_bound(key_index_.begin(), key_index_.end(), k,
                             [](const auto& p, const std::string& key) { return p.first < key; });
  if (it == key_index_.end() || it->first != k) return -1;
  return it->second;
}

int Universe::projection_index(int i, int level) const {
  if (level >= max_level_) return i;
  if (level < 0) throw InputError("level must be >= 0");
  return proj_[static_cast<std::size_t>(i)][static_cast<std::size_t>(level)];
}

bool Universe::elem_member(int i, const Cylinder& c) const {
  // from max_level_ upward the projection is the element itself
  if (c.level >= max_level_) return element(i) == c.base;
  int bi = index_of(c.base);
  if (bi < 0) return false;
  return projection_index(i, c.level) == bi;
}

bool Universe::elem_member(int i, const ClopenAtom& a) const {
  if (const Cylinder* c = std::get_if<Cylinder>(&a)) return elem_member(i, *c);
  return member(element_point(i), a, max_level_ + 1);
}

bool Universe::elem_member(int i, const ClopenTerm& t) const {
  if (!elem_member(i, t.shape)) return false;
  for (const ClopenAtom& d : t.subtracted)
    if (elem_member(i, d)) return false;
  return true;
}

bool Universe::elem_member(int i, const ClopenExpr& e) const {
  for (const ClopenTerm& t : e.terms())
    if (elem_member(i, t)) return true;
  return false;
}

int Universe::max_rank_member(const ClopenExpr& e) const {
  int best = -1;
  for (int i = 0; i < size(); ++i)
    if (elem_member(i, e)) best = std::max(best, rank(i));
  return best;
}

int Universe::min_rank_member(const ClopenExpr& e) const {
  int best = -1;
  for (int i = 0; i < size(); ++i)
    if (elem_member(i, e) && (best < 0 || rank(i) < best)) best = rank(i);
  return best;
}

std::vector<int> Universe::members_of(const ClopenExpr& e) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (elem_member(i, e)) out.push_back(i);
  return out;
}

Universe parse_universe_spec(std::string_view text) {
  int l = -1, len = -1;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view part = text.substr(pos, comma == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : comma - pos);
    std::size_t eq = part.find('=');
    if (eq == std::string_view::npos) throw InputError("universe spec: expected key=value");
    std::string_view key = part.substr(0, eq);
    int val = 0;
    try {
      val = std::stoi(std::string(part.substr(eq + 1)));
    } catch (...) {
      throw InputError("universe spec: bad number");
    }
    if (key == "L")
      l = val;
    else if (key == "len")
      len = val;
    else
      throw InputError("universe spec: unknown key '" + std::string(key) + "'");
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (l < 1 || len < 0) throw InputError("universe spec needs L=<n>,len=<n>");
  return Universe::make(l, len);
}

namespace {

// strictly-less, with honest failure on a lazy tie between distinct points
bool decided_less(const GroupPoint& a, const GroupPoint& b, int depth) {
  OrderVerdict v = cmp_G(a, b, depth);
  if (v.undecided() && !same_class_finite(a, b) &&
      !a.rep().same_presentation(b.rep()))
    throw InputError("undecided pair at depth " + std::to_string(depth) + ": " +
                     a.to_string() + " vs " + b.to_string());
  return v.is_less();
}

}  // namespace

bool set_less(const ClopenExpr& e, std::span<const GroupPoint> tracked,
              const GroupPoint& b, const Universe& u, int depth) {
  int mr = u.max_rank_member(e);
  if (mr >= 0) {
    GroupPoint m = u.element_point(u.index_of_rank(mr));
    if (!decided_less(m, b, depth)) return false;
  }
  for (const GroupPoint& t : tracked)
    if (!decided_less(t, b, depth)) return false;
  for (const GroupPoint& x : u.extras)
    if (member(x, e, depth) && !decided_less(x, b, depth)) return false;
  return true;
}

bool set_less(std::span<const GroupPoint> finite_set, const GroupPoint& b, int depth) {
  for (const GroupPoint& g : finite_set)
    if (!decided_less(g, b, depth)) return false;
  return true;
}

std::string to_string(const ConvergenceVerdict& v) {
  switch (v.kind) {
    case ConvergenceVerdict::Kind::converges:
      return "converges " + (v.limit ? v.limit->to_string() : std::string("?"));
    case ConvergenceVerdict::Kind::diverges:
      return "diverges";
    case ConvergenceVerdict::Kind::inconclusive:
      return "inconclusive";
  }
  return "?";
}

ConvergenceVerdict converge(const SequenceSpec& seq, int depth) {
  if (depth < 1) throw InputError("depth must be >= 1");
  int window = seq.has_rule() ? std::max(depth + 4, 8)
                              : seq.explicit_count();
  if (window < 1) throw InputError("sequence has no terms");

  std::vector<MonoidWord> raw;
  std::vector<MonoidWord> sigmas;  // reduced representatives
  raw.reserve(static_cast<std::size_t>(window));
  for (int n = 1; n <= window; ++n) {
    raw.push_back(seq.term(n));
    sigmas.push_back(reduce(raw.back()).word());
  }

  ConvergenceVerdict out;
  out.evidence.depth = depth;
  out.evidence.window = window;

  bool all_stable = true;
  bool all_bounded = true;

  for (int N = 1; N <= depth; ++N) {
    LevelEvidence le;
    le.level = N;

    std::vector<GroupWord> projs;
    projs.reserve(static_cast<std::size_t>(window));
    for (int n = 0; n < window; ++n)
      projs.push_back(reduce(retract(raw[static_cast<std::size_t>(n)], N)));

    int stable_from = window;  // 1-based index of the constant tail
    for (int n = window - 1; n >= 1; --n) {
      if (projs[static_cast<std::size_t>(n) - 1] != projs.back()) break;
      stable_from = n;
    }
    le.projection_stabilized = stable_from < window;
    le.stabilized_at = stable_from;
    le.projection_value = projs.back();

    {
      std::set<std::string> seen;
      for (int n = 1; n <= window; ++n) {
        std::string k = word_key(retract(sigmas[static_cast<std::size_t>(n) - 1], N));
        if (seen.insert(std::move(k)).second) le.last_new_value_at = n;
      }
      int slack = std::max(2, window / 4);
      le.counts_bounded = le.last_new_value_at <= window - slack;
    }

    std::vector<int> counts;
    counts.reserve(static_cast<std::size_t>(window));
    for (int n = 1; n <= window; ++n)
      counts.push_back(letter_count(sigmas[static_cast<std::size_t>(n) - 1], N));
    le.max_count = *std::max_element(counts.begin(), counts.end());

    if (seq.has_rule() && !out.evidence.growth) {
      // exact affine fit over the rule-generated tail certifies unbounded
      // letter counts
      int from = std::max(seq.explicit_count() + 1,
                          window - std::max(4, window / 2) + 1);
      if (window - from + 1 >= 4) {
        std::int64_t d = counts[static_cast<std::size_t>(from)] -
                         counts[static_cast<std::size_t>(from) - 1];
        bool affine = true;
        for (int n = from; n < window; ++n) {
          if (counts[static_cast<std::size_t>(n)] -
                  counts[static_cast<std::size_t>(n) - 1] !=
              d) {
            affine = false;
            break;
          }
        }
        if (affine && d >= 1) {
          out.evidence.growth = AffineGrowthCert{
              N, d, counts[static_cast<std::size_t>(from) - 1], from, window};
        }
      }
    }

    if (seq.has_rule() && !le.projection_stabilized && !out.evidence.periodicity) {
      // an unstabilized tail repeating with an exact period certifies that
      // this projection level never settles
      int from = std::max(seq.explicit_count() + 1, window / 2);
      int span = window - from + 1;
      for (int p = 2; p * 3 <= span; ++p) {
        bool periodic = true;
        for (int n = from; n + p <= window; ++n) {
          if (projs[static_cast<std::size_t>(n) - 1] !=
              projs[static_cast<std::size_t>(n + p) - 1]) {
            periodic = false;
            break;
          }
        }
        if (periodic) {
          out.evidence.periodicity = PeriodicityCert{N, p, from, window};
          break;
        }
      }
    }

    all_stable = all_stable && le.projection_stabilized;
    all_bounded = all_bounded && le.counts_bounded;
    out.evidence.levels.push_back(std::move(le));
  }

  if (out.evidence.growth || out.evidence.periodicity) {
    out.kind = ConvergenceVerdict::Kind::diverges;
    return out;
  }
  if (all_stable && all_bounded) {
    out.kind = ConvergenceVerdict::Kind::converges;
    // the stabilized projections are the projection chain of the last term
    GroupWord g = out.evidence.levels.back().projection_value;
    int target = std::max(g.level(), 1);
    int settle = depth;
    for (int N = depth - 1; N >= target; --N) {
      if (out.evidence.levels[static_cast<std::size_t>(N) - 1].projection_value != g) break;
      settle = N;
    }
    out.evidence.limit_materialized_at_depth = settle > target;
    out.limit = embed(g);
    return out;
  }
  out.kind = ConvergenceVerdict::Kind::inconclusive;
  return out;
}

ClopennessVerdict relatively_clopen(const ClopenExpr& e, const Universe& u, int depth) {
  for (const SequenceSpec& seq : u.witnesses) {
    ConvergenceVerdict v = converge(seq, depth);
    if (!v.converges()) continue;
    int window = v.evidence.window;
    std::vector<bool> inside;
    inside.reserve(static_cast<std::size_t>(window));
    for (int n = 1; n <= window; ++n)
      inside.push_back(member(embed(reduce(seq.term(n))), e, depth));
    int last_change = 0;
    for (int n = 2; n <= window; ++n)
      if (inside[static_cast<std::size_t>(n) - 1] != inside[static_cast<std::size_t>(n) - 2])
        last_change = n;
    // demand a confirmed tail before certifying a crossing
    if (last_change > window - 3) continue;
    bool tail_in = inside.back();
    bool limit_in = member(*v.limit, e, depth);
    if (tail_in && !limit_in)
      return ClopennessVerdict{false, BoundaryWitness{seq.name, *v.limit, true}};
    if (!tail_in && limit_in)
      return ClopennessVerdict{false, BoundaryWitness{seq.name, *v.limit, false}};
  }
  return ClopennessVerdict{};
}

}  // namespace earring
