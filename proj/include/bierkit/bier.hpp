#pragma once

#include <cstdint>
#include <vector>

#include "bierkit/poset.hpp"

namespace bierkit {

// An order ideal in P-hat (the base poset with a formal top adjoined), given
// by its members inside the base poset: downward closed, contains the bottom,
// and automatically proper since the formal top is never a member.
struct IdealSet {
  std::vector<char> member;        // indexed by base element id
  std::vector<int> members_sorted; // ascending ids

  bool contains(int id) const { return member[static_cast<std::size_t>(id)] != 0; }
  std::size_t size() const { return members_sorted.size(); }
};

IdealSet validate_ideal(const Poset& base, const std::vector<int>& ids);

// Remove a maximal member; not_maximal / would_empty on bad input.
IdealSet delete_max(const Poset& base, const IdealSet& ideal, int t);

// Ideals of P-hat containing every element of rank <= max_forced_rank.  The
// remaining choice is a downward-closed subset of the higher-rank elements;
// each choice is recorded as a bitmask over free_elements.  Enumeration is
// ordered by member count, then lexicographically by the chosen id list.
struct ForcedIdealFamily {
  int max_forced_rank = 0;
  std::vector<int> free_elements;       // ascending ids, all of rank > max_forced_rank
  std::vector<std::uint64_t> masks;     // enumeration order
};

ForcedIdealFamily enumerate_forced_ideals(const Poset& base, int max_forced_rank,
                                          std::size_t cap = 1u << 20);

// K reproducible draws from the same family (members drawn in rank order with
// the closure constraint); duplicates possible, order deterministic in seed.
std::vector<std::uint64_t> sample_forced_ideal_masks(const Poset& base, int max_forced_rank,
                                                     std::size_t k, std::uint64_t seed);

IdealSet ideal_from_mask(const Poset& base, const ForcedIdealFamily& family, std::uint64_t mask);
std::string mask_to_hex(std::uint64_t mask);

// Bier poset of (P, I): intervals [x, y] of P-hat with x in I, y outside,
// ordered by reverse inclusion.  The bottom is [bottom, top]; the maximal
// elements are the covers of P-hat crossing the ideal boundary and all sit at
// rank equal to rank(P-hat) - 1.  When P-hat is Eulerian the construction
// asserts that the Bier poset plus a formal top is Eulerian again
// (eulerian_violation on failure).
struct BierModel {
  Poset poset;
  std::vector<std::pair<int, int>> pairs;  // element id -> (x, y) ids in p_hat
  Poset p_hat;
};

BierModel build_bier(const Poset& base, const IdealSet& ideal);

// Variant taking a pre-built bounded lattice whose last id is the top and
// whose other ids form the base poset; used where id stability between the
// lattice and the boundary matters.
BierModel build_bier_topped(const Poset& p_hat, const IdealSet& ideal);

}  // namespace bierkit
