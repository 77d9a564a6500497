#include "earring/hefront.hpp"

#include <deque>
#include <set>

#include "earring/errors.hpp"

namespace earring {

GroupPoint loop_class(const LoopItinerary& loop) {
  return GroupPoint(Point::finite_stage(loop.word));
}

bool loop_eq(const LoopItinerary& f, const LoopItinerary& g) {
  int bound = std::max(f.word.level(), g.word.level());
  GroupPoint cf = loop_class(f);
  GroupPoint cg = loop_class(g);
  for (int n = 1; n <= bound; ++n)
    if (project_group(cf, n) != project_group(cg, n)) return false;
  return true;
}

std::vector<MonoidWord> deletion_closure(const LoopItinerary& beta, int level,
                                         int budget) {
  if (budget < 1) throw InputError("budget must be >= 1");
  MonoidWord start = retract(beta.word, level);
  std::vector<MonoidWord> out;
  std::set<std::string> seen;
  std::deque<MonoidWord> frontier;
  frontier.push_back(start);
  seen.insert(word_key(start));
  while (!frontier.empty()) {
    MonoidWord w = std::move(frontier.front());
    frontier.pop_front();
    out.push_back(w);
    for (MonoidWord& next : delete_inessential(w)) {
      if (!seen.insert(word_key(next)).second) continue;
      if (static_cast<int>(seen.size()) > budget)
        throw InputError("deletion closure budget exceeded");
      frontier.push_back(std::move(next));
    }
  }
  return out;
}

}  // namespace earring
