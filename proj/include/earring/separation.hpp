#pragma once

#include <span>
#include <string>
#include <vector>

#include "earring/topology.hpp"

namespace earring {

struct TraceStep {
  int index = 0;
  GroupPoint anchor;   // kappa(j): the minimal uncovered target this step serves
  int eta = 1;         // chosen level
  Cylinder shape;      // U(j) = Cyl(eta; projection of the anchor)
  ClopenExpr removed;  // K(j)
  ClopenExpr piece;    // gamma(j) = U(j) minus K(j), disjoint cuts dropped
  bool anchor_in_a = true;  // side bookkeeping for separate

  TraceStep(int index, GroupPoint anchor, int eta, Cylinder shape, ClopenExpr removed,
            ClopenExpr piece, bool anchor_in_a)
      : index(index),
        anchor(std::move(anchor)),
        eta(eta),
        shape(std::move(shape)),
        removed(std::move(removed)),
        piece(std::move(piece)),
        anchor_in_a(anchor_in_a) {}
};

// Full record of a thickening/separation run, serializable as one line per
// step: j | kappa=<word> | eta=<N> | U=Cyl(...) | K=<expr> | gamma=<expr>
// and a final V=<expr> line.
struct SeparationTrace {
  std::vector<TraceStep> steps;
  ClopenExpr outcome;

  std::string to_text() const;
};

// Minimal level N with a < the embedded projection of b at N. Requires
// a < b; absence of such a level within depth is bug-grade.
int min_separating_level(const GroupPoint& a, const GroupPoint& b, int depth);

// Minimal level N with w (universe members plus tracked points) entirely
// below the embedded projection of b at N — and hence below the whole
// cylinder there, whose minimum that embedding is. Requires w < b over the
// universe.
int min_clearing_level(const ClopenExpr& w, std::span<const GroupPoint> tracked,
                       const GroupPoint& b, const Universe& u, int depth);

struct ThickenResult {
  ClopenExpr cover;  // V: clopen, contains the targets, excludes (exceeds) a
  SeparationTrace trace;
};

// Greedy minimal-element thickening: repeatedly take the least uncovered
// target and trap it in a cylinder pinned at the least admissible level.
// Admissible means: a precedes the cylinder's minimum (step 0) or the
// accumulated union precedes it (later steps), and the piece keeps the
// whole trace strictly increasing over the universe — including against
// every target still to be covered. Terminates within |targets| steps.
ThickenResult thicken(const GroupPoint& a, std::span<const GroupPoint> targets,
                      const Universe& u, int depth);

struct SeparateResult {
  ClopenExpr side_a;  // union of the pieces anchored in A; covers A, misses B
  ClopenExpr side_b;  // union of the pieces anchored in B; lies in the complement
  SeparationTrace trace;

  // U_B is reported as the complement of side_a; side_b records the pieces
  // actually built inside it.
  std::string complement_descriptor() const { return "G \\ (" + to_string(side_a) + ")"; }
};

// Disjoint clopen separation of two finite sets: walk A cup B in increasing
// order; each step shields the minimal uncovered point inside a cylinder
// with the opposite side's thickening removed. Every piece meets at most
// one of the two sets.
SeparateResult separate(std::span<const GroupPoint> a_set,
                        std::span<const GroupPoint> b_set, const Universe& u, int depth);

}  // namespace earring
