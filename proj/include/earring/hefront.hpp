#pragma once

#include <vector>

#include "earring/points.hpp"
#include "earring/words.hpp"

namespace earring {

// Symbolic based-loop itinerary: each letter is one full signed traversal of
// the circle with that index, so the itinerary is tight by construction.
struct LoopItinerary {
  MonoidWord word;
};

// The class of the itinerary in the limit group.
GroupPoint loop_class(const LoopItinerary& loop);

// Path-homotopy test: the reduced projections agree at every level up to
// the larger of the two word levels, which decides exactly for finite
// itineraries.
bool loop_eq(const LoopItinerary& f, const LoopItinerary& g);

// All words reachable from retract(beta, level) by chains of single
// inessential-subword deletions, endpoints included. `budget` caps the
// number of distinct words visited.
std::vector<MonoidWord> deletion_closure(const LoopItinerary& beta, int level,
                                         int budget);

}  // namespace earring
