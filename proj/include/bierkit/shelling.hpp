#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bierkit/bier.hpp"
#include "bierkit/multiplex.hpp"
#include "bierkit/poset.hpp"

namespace bierkit {

// Integer labels on cover relations of a fixed poset.
struct EdgeLabeling {
  std::map<std::pair<int, int>, int> labels;  // (lower, upper) -> label

  int label(int a, int b) const;  // unlabeled_cover when (a, b) is missing
};

// The canonical cover labeling of the full multiplex face lattice.  For a
// cover F < N the vertex set J = {v_0 < ... < v_l} of N is read as an ordered
// multiplex of dimension d' = rank(N) - 1; F is located as the unique facet
// pattern F_j(N) (windowed-clamped vertex formula; for an edge F_j = {v_j}),
// and the label is v_{d'} when j = 0, v_{l-d'} when j = l, and v_j otherwise.
// A cover matching no pattern or several raises pattern_ambiguous.
EdgeLabeling label_multiplex(const MultiplexModel& m);

// The dual Bier poset over the multiplex face lattice, completed by a formal
// global minimum (standing for the degenerate interval at the lattice top).
// Atoms are the one-step crossing intervals; going up, an interval [x, y]
// grows toward the full [0-hat, 1-hat], each cover moving one endpoint along
// a single lattice cover.  Labels come from label_multiplex c in two
// disjoint families: growing the upper endpoint y -> y' is labeled
// 2 c(y < y') + 1, extending the lower endpoint down x' < x is labeled
// 2 c(phi(x) < phi(x')) through a fixed anti-automorphism phi of the
// lattice, and the cover from the formal minimum to an atom [x, y] is
// labeled 2 c(x < y) + 1.  Between genuine elements this is an EL-labeling;
// intervals rooted at the formal minimum fail the EL conditions, and
// verify_el reports the first such interval (see build_q's labeling note).
struct QModel {
  Poset poset;                             // bounded; formal element is the bottom
  EdgeLabeling labeling;                   // labels of every cover of poset
  std::vector<std::pair<int, int>> pairs;  // per id: interval endpoints in the lattice
  int formal_id = -1;
};

QModel build_q(const MultiplexModel& m, const IdealSet& ideal);

struct ELReport {
  bool ok = true;
  std::pair<int, int> witness{-1, -1};  // failing interval, when !ok
  std::string detail;
};

// Checks both lexicographic-shelling conditions on every interval [a, b] of
// p: exactly one maximal chain carries strictly rising labels, and its sorted
// label sequence is lexicographically no larger than that of any other
// maximal chain of the interval.  Work is metered by DFS steps across all
// intervals; too_large past the cap.
ELReport verify_el(const Poset& p, const EdgeLabeling& labeling,
                   unsigned long long max_steps = 400000000ULL);

}  // namespace bierkit
