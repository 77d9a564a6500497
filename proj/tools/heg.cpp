// heg — command-line front end for the earring-kit library: word reduction,
// level projections, minimal representatives, the canonical order, the
// convergence oracle, and the clopen thickening/separation constructions.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "earring/errors.hpp"
#include "earring/hefront.hpp"
#include "earring/separation.hpp"

using namespace earring;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInput = 2;
constexpr int kExitInvariant = 3;

std::vector<GroupPoint> load_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open set file: " + path);
  std::vector<GroupPoint> out;
  for (MonoidWord& w : read_word_lines(in)) out.push_back(embed(reduce(w)));
  if (out.empty()) throw InputError("set file is empty: " + path);
  return out;
}

SequenceSpec load_sequence(const std::string& arg) {
  if (arg.rfind("rule:", 0) == 0) {
    SequenceSpec s;
    s.name = "cli";
    s.rule = WordTemplate::parse(std::string_view(arg).substr(5));
    return s;
  }
  std::ifstream in(arg);
  if (!in) throw InputError("cannot open sequence file: " + arg);
  return SequenceSpec::parse(in, arg);
}

void write_trace(const std::string& path, const SeparationTrace& trace) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw InputError("cannot open trace file: " + path);
  out << trace.to_text();
}

// ---------------------------------------------------------------------------
// property suites for `heg axioms`

struct Suite {
  const Universe& u;
  int samples;
  std::mt19937 rng;
  int depth;
  bool all_ok = true;

  void report(const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS " : "FAIL ") << name;
    if (!ok && !detail.empty()) std::cout << ": " << detail;
    std::cout << "\n";
    all_ok = all_ok && ok;
  }

  GroupPoint pick() {
    std::uniform_int_distribution<int> d(0, u.size() - 1);
    return u.element_point(d(rng));
  }
};

void run_suites(Suite& s) {
  const int depth = s.depth;

  {  // projections drop one level at a time
    bool ok = true;
    std::string bad;
    for (int t = 0; t < s.samples && ok; ++t) {
      GroupPoint g = s.pick();
      for (int n = 1; n < depth && ok; ++n) {
        ok = project_group(embed(project_group(g, n + 1)), n) == project_group(g, n);
        if (!ok) bad = g.to_string();
      }
    }
    s.report("retracts: projections compose", ok, bad);
  }

  {  // finite stages settle pointwise
    bool ok = true;
    for (int t = 0; t < s.samples && ok; ++t) {
      GroupPoint g = s.pick();
      auto fs = is_finite_stage(g, depth);
      ok = fs.yes;
      for (int n = fs.stage; n <= depth && ok; ++n)
        ok = project_group(g, n) == project_group(g, fs.stage);
    }
    s.report("retracts: projections settle at the finite stage", ok);
  }

  {  // the projection sequence separates distinct elements
    bool ok = true;
    for (int t = 0; t < s.samples && ok; ++t) {
      GroupPoint g = s.pick(), h = s.pick();
      if (same_class_finite(g, h)) continue;
      bool differ = false;
      for (int n = 1; n <= depth && !differ; ++n)
        differ = !(project_group(g, n) == project_group(h, n));
      ok = differ;
    }
    s.report("retracts: the projection sequence is injective", ok);
  }

  {  // linear order: trichotomy and transitivity on sampled triples
    bool ok = true;
    for (int t = 0; t < s.samples && ok; ++t) {
      GroupPoint a = s.pick(), b = s.pick(), c = s.pick();
      OrderVerdict ab = cmp_G(a, b, depth), ba = cmp_G(b, a, depth);
      ok = ab.is_less() == ba.is_greater() && ab.undecided() == ba.undecided() &&
           (ab.undecided() == same_class_finite(a, b));
      if (ok && cmp_G(a, b, depth).is_less() && cmp_G(b, c, depth).is_less())
        ok = cmp_G(a, c, depth).is_less();
    }
    s.report("order: trichotomy and transitivity", ok);
  }

  {  // every sampled finite set has a unique least element
    bool ok = true;
    for (int t = 0; t < s.samples && ok; ++t) {
      std::uniform_int_distribution<int> szd(1, 6);
      std::vector<GroupPoint> set;
      for (int i = szd(s.rng); i > 0; --i) set.push_back(s.pick());
      GroupPoint m = min_of(set, depth);
      for (const GroupPoint& x : set)
        if (!same_class_finite(m, x)) ok = ok && cmp_G(m, x, depth).is_less();
    }
    s.report("order: finite sets have least elements", ok);
  }

  {  // projection chain below the identity map
    bool ok = true;
    for (int t = 0; t < s.samples && ok; ++t) {
      GroupPoint g = s.pick();
      for (int n = 1; n < depth && ok; ++n) {
        OrderVerdict v =
            cmp_G(embed(project_group(g, n)), embed(project_group(g, n + 1)), depth);
        ok = v.is_less() || v.undecided();
        if (ok) {
          v = cmp_G(embed(project_group(g, n)), g, depth);
          ok = v.is_less() || v.undecided();
        }
      }
    }
    s.report("order: projections never exceed the point", ok);
  }

  {  // blowup nesting: project k3 down to force the outer containment, then
     // check every sampled middle element
    bool ok = true;
    int checked = 0;
    for (int t = 0; t < s.samples * 20 && checked < s.samples && ok; ++t) {
      GroupPoint k3 = s.pick();
      GroupWord g3 = project_group(k3, depth);
      if (g3.level() < 1) continue;
      std::uniform_int_distribution<int> lv(1, g3.level());
      GroupPoint k1 = embed(project_group(k3, lv(s.rng)));
      if (!cmp_G(k1, k3, depth).is_less()) continue;
      if (!cyl_contains(blowup(k1), blowup(k3))) continue;
      GroupPoint k2 = s.pick();
      if (!cmp_G(k1, k2, depth).is_less() || !cmp_G(k2, k3, depth).is_less()) continue;
      ++checked;
      ok = cyl_contains(blowup(k1), blowup(k2));
    }
    s.report("clopen: blowup nesting law (" + std::to_string(checked) + " triples)", ok);
  }

  {  // cylinder minima
    bool ok = true;
    for (int t = 0; t < s.samples && ok; ++t) {
      GroupPoint g = s.pick();
      Cylinder c = blowup(g);
      GroupPoint mn = cyl_min(c);
      GroupPoint h = s.pick();
      if (member(h, c, depth) && !same_class_finite(h, mn))
        ok = cmp_G(mn, h, depth).is_less();
    }
    s.report("clopen: the embedded base is least in its cylinder", ok);
  }

  {  // separating levels exist below every larger element
    bool ok = true;
    for (int t = 0; t < s.samples && ok; ++t) {
      GroupPoint a = s.pick(), b = s.pick();
      if (!cmp_G(a, b, depth).is_less()) continue;
      int n = min_separating_level(a, b, depth);
      ok = n >= 1 && cmp_G(a, embed(project_group(b, n)), depth).is_less();
      if (ok && n > 1) ok = !cmp_G(a, embed(project_group(b, n - 1)), depth).is_less();
    }
    s.report("order: minimal separating levels", ok);
  }

  {  // clearing levels exist for sets lying below an element
    bool ok = true;
    int checked = 0;
    for (int t = 0; t < s.samples * 10 && checked < s.samples && ok; ++t) {
      GroupPoint a = s.pick(), b = s.pick();
      if (!cmp_G(a, b, depth).is_less()) continue;
      ClopenExpr w(blowup(a));
      if (!set_less(w, {}, b, s.u, depth)) continue;
      ++checked;
      int n = min_clearing_level(w, {}, b, s.u, depth);
      ok = set_less(w, {}, embed(project_group(b, n)), s.u, depth);
    }
    s.report("clopen: minimal clearing levels (" + std::to_string(checked) + " pairs)", ok);
  }

  {  // the minimal representative lies in its class and separates classes
    bool ok = true;
    for (int t = 0; t < s.samples && ok; ++t) {
      GroupPoint g = s.pick();
      GroupPoint sg{sigma(g, depth)};
      ok = equal_up_to_depth(g, sg, depth);
      GroupPoint h = s.pick();
      if (ok && !same_class_finite(g, h)) {
        Point a = sigma(g, depth), b = sigma(h, depth);
        bool differ = false;
        for (int n = 1; n <= depth && !differ; ++n) differ = !(a.word_at(n) == b.word_at(n));
        ok = differ;
      }
    }
    s.report("convergence: minimal representatives are faithful", ok);
  }

  {  // the three named limit fixtures
    SequenceSpec conj;
    conj.name = "conj";
    conj.rule = WordTemplate::parse("x1 x%n X1");
    ConvergenceVerdict v1 = converge(conj, depth);
    bool ok = v1.converges() && same_class_finite(*v1.limit, embed(GroupWord()));

    SequenceSpec pow;
    pow.name = "pow";
    pow.rule = WordTemplate::parse("(x1 x%n X1 x%n)^%n");
    ConvergenceVerdict v2 = converge(pow, depth);
    ok = ok && v2.diverges() && v2.evidence.growth.has_value();

    bool sigma_jumps = true;
    for (int n = 2; n <= depth && sigma_jumps; ++n) {
      std::string w = "x1 x" + std::to_string(n) + " X1";
      sigma_jumps = sigma(parse_group_point(w), depth).word_at(1) == parse_word("x1 X1");
    }
    ok = ok && sigma_jumps;
    s.report("convergence: named fixtures", ok);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"earring-kit: exact word calculus for the shrinking-circles limit group"};
  app.require_subcommand(1);

  int depth = 8;
  app.add_option("--depth", depth, "probe depth for limits and comparisons")
      ->capture_default_str();

  std::string word1, word2, file_a, file_b, universe_spec, trace_path, seq_arg;

  auto* cmd_reduce = app.add_subcommand("reduce", "reduce a word");
  cmd_reduce->add_option("word", word1)->required();

  int proj_level = 1;
  auto* cmd_project = app.add_subcommand("project", "project a point to a level");
  cmd_project->add_option("-N,--level", proj_level)->required();
  cmd_project->add_option("point", word1)->required();

  auto* cmd_sigma = app.add_subcommand("sigma", "minimal representative of a point");
  cmd_sigma->add_option("point", word1)->required();

  auto* cmd_cmp = app.add_subcommand("cmp", "compare two points: prints <, = or >");
  cmd_cmp->add_option("left", word1)->required();
  cmd_cmp->add_option("right", word2)->required();

  auto* cmd_min = app.add_subcommand("min", "least element of a set file");
  cmd_min->add_option("-f,--file", file_a)->required();

  auto* cmd_thicken =
      app.add_subcommand("thicken", "clopen cover of a set, excluding a point");
  cmd_thicken->add_option("-a,--anchor", word1)->required();
  cmd_thicken->add_option("-B,--targets", file_b)->required();
  cmd_thicken->add_option("--universe", universe_spec)->required();
  cmd_thicken->add_option("--trace", trace_path);

  auto* cmd_separate =
      app.add_subcommand("separate", "disjoint clopen split of two set files");
  cmd_separate->add_option("-A", file_a)->required();
  cmd_separate->add_option("-B", file_b)->required();
  cmd_separate->add_option("--universe", universe_spec)->required();
  cmd_separate->add_option("--trace", trace_path);

  auto* cmd_converge =
      app.add_subcommand("converge", "convergence verdict for a sequence");
  cmd_converge->add_option("-f,--sequence", seq_arg,
                           "sequence file, or an inline rule:<template>")
      ->required();

  auto* cmd_loopeq = app.add_subcommand("loopeq", "path-homotopy test for two loops");
  cmd_loopeq->add_option("left", word1)->required();
  cmd_loopeq->add_option("right", word2)->required();

  int samples = 500;
  unsigned seed = 1;
  auto* cmd_axioms = app.add_subcommand("axioms", "run the sampled property suites");
  cmd_axioms->add_option("--universe", universe_spec)->required();
  cmd_axioms->add_option("--samples", samples)->capture_default_str();
  cmd_axioms->add_option("--seed", seed)->capture_default_str();

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    int probe = depth + 8;
    if (cmd_reduce->parsed()) {
      std::cout << to_string(reduce(parse_word(word1))) << "\n";
      return kExitTrue;
    }
    if (cmd_project->parsed()) {
      std::cout << to_string(project_group(parse_group_point(word1, probe), proj_level))
                << "\n";
      return kExitTrue;
    }
    if (cmd_sigma->parsed()) {
      Point s = sigma(parse_group_point(word1, probe), depth);
      if (s.finite_stage_presentation()) {
        std::cout << to_string(s.stage_word()) << "\n";
      } else {
        for (int n = 1; n <= std::min(depth, s.probe_depth()); ++n)
          std::cout << "level " << n << ": " << to_string(s.word_at(n)) << "\n";
      }
      return kExitTrue;
    }
    if (cmd_cmp->parsed()) {
      OrderVerdict v = cmp_G(parse_group_point(word1, probe),
                             parse_group_point(word2, probe), depth);
      std::cout << (v.is_less() ? "<" : v.is_greater() ? ">" : "=") << "\n";
      return kExitTrue;
    }
    if (cmd_min->parsed()) {
      auto set = load_set_file(file_a);
      std::cout << min_of(set, depth).to_string() << "\n";
      return kExitTrue;
    }
    if (cmd_thicken->parsed()) {
      Universe u = parse_universe_spec(universe_spec);
      auto targets = load_set_file(file_b);
      auto r = thicken(parse_group_point(word1, probe), targets, u, depth);
      write_trace(trace_path, r.trace);
      std::cout << "V=" << to_string(r.cover) << "\n";
      return kExitTrue;
    }
    if (cmd_separate->parsed()) {
      Universe u = parse_universe_spec(universe_spec);
      auto a = load_set_file(file_a);
      auto b = load_set_file(file_b);
      auto r = separate(a, b, u, depth);
      write_trace(trace_path, r.trace);
      std::cout << "U_A=" << to_string(r.side_a) << "\n";
      std::cout << "U_B=" << r.complement_descriptor() << "\n";
      std::cout << "U_B_pieces=" << to_string(r.side_b) << "\n";
      return kExitTrue;
    }
    if (cmd_converge->parsed()) {
      ConvergenceVerdict v = converge(load_sequence(seq_arg), depth);
      std::cout << to_string(v) << "\n";
      if (v.diverges() && v.evidence.growth) {
        const auto& g = *v.evidence.growth;
        std::cout << "certificate: level-" << g.level << " letter count grows by "
                  << g.slope << " per step on [" << g.window_from << ", " << g.window_to
                  << "]\n";
      }
      if (v.diverges() && v.evidence.periodicity) {
        const auto& p = *v.evidence.periodicity;
        std::cout << "certificate: level-" << p.level << " projections repeat with period "
                  << p.period << "\n";
      }
      return v.converges() ? kExitTrue : kExitFalse;
    }
    if (cmd_loopeq->parsed()) {
      bool eq = loop_eq(LoopItinerary{parse_word(word1)}, LoopItinerary{parse_word(word2)});
      std::cout << (eq ? "equal" : "not-equal") << "\n";
      return eq ? kExitTrue : kExitFalse;
    }
    if (cmd_axioms->parsed()) {
      Universe u = parse_universe_spec(universe_spec);
      Suite s{u, samples, std::mt19937(seed), depth};
      run_suites(s);
      std::cout << (s.all_ok ? "all properties hold" : "property failures detected")
                << "\n";
      return s.all_ok ? kExitTrue : kExitFalse;
    }
  } catch (const InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
