#pragma once

#include <boost/dynamic_bitset.hpp>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace bierkit {

using Bitset = boost::dynamic_bitset<>;

inline constexpr std::size_t kDefaultElementCap = 20000;

struct PosetElement {
  int rank = -1;  // -1 requests rank computation (longest chain from bottom)
  std::string label;
};

// Finite graded poset given by its Hasse diagram.  Elements carry dense ids
// 0..size()-1.  Construction validates grading (every cover raises rank by
// exactly one), bottom uniqueness/reachability unless the poset is flagged as
// a raw induced order, and cover irredundancy.  Order queries run in O(1)
// against precomputed reachability bitsets; instances are immutable.
class Poset {
public:
  // Default-constructed posets are empty placeholders awaiting assignment.
  Poset() = default;

  static Poset build(std::vector<PosetElement> elements,
                     std::vector<std::pair<int, int>> covers,
                     bool require_bottom = true);

  int size() const { return static_cast<int>(elems_.size()); }
  int rank() const { return rank_; }  // maximum element rank
  int element_rank(int id) const { return elems_[static_cast<std::size_t>(id)].rank; }
  const std::string& label(int id) const { return elems_[static_cast<std::size_t>(id)].label; }

  bool has_bottom() const { return bottom_ >= 0; }
  int bottom() const;                      // throws no_unique_bottom when raw
  std::optional<int> unique_top() const;   // the unique maximal element, if any
  std::vector<int> maximal_elements() const;
  std::vector<int> minimal_elements() const;

  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& upper_covers(int id) const { return up_adj_[static_cast<std::size_t>(id)]; }
  const std::vector<int>& lower_covers(int id) const { return down_adj_[static_cast<std::size_t>(id)]; }

  bool leq(int a, int b) const { return up_reach_[static_cast<std::size_t>(a)].test(static_cast<std::size_t>(b)); }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  // Reachability sets include the element itself.
  const Bitset& up_set(int id) const { return up_reach_[static_cast<std::size_t>(id)]; }
  const Bitset& down_set(int id) const { return down_reach_[static_cast<std::size_t>(id)]; }

  std::vector<int> elements_of_rank(int r) const;

private:
  void finish(bool require_bottom, bool ranks_supplied);

  std::vector<PosetElement> elems_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_adj_, down_adj_;
  std::vector<Bitset> up_reach_, down_reach_;
  int bottom_ = -1;
  int rank_ = 0;
};

// Half-open / closed interval selector for subposet().
struct IntervalSpec {
  int lo = -1;             // -1 means unbounded below
  int hi = -1;             // -1 means unbounded above
  bool lo_open = false;
  bool hi_open = false;
};

struct SubposetResult {
  Poset poset;
  std::vector<int> original_ids;  // new id -> id in the source poset
};

// Induced order on an interval of P.  Intervals are convex, so the induced
// covers are exactly the covers of P inside the subset.  A lo-open selection
// has no bottom and comes back as a raw induced order (ranks shifted so the
// minimum present rank is 0).
SubposetResult subposet(const Poset& p, const IntervalSpec& spec);

// Opposite order.  Ids are preserved, covers flip, ranks are recomputed as
// rank() - old rank.  The result has a bottom exactly when P had a unique
// maximal element; pass require_bottom to insist (no_unique_top otherwise).
Poset dual(const Poset& p, bool require_bottom = false);

// Direct product: pairs ordered componentwise, ranks add, covers change one
// coordinate by a cover of its factor.  Pair (a, b) gets id a * q.size() + b.
Poset product(const Poset& p, const Poset& q);

Poset adjoin_top(const Poset& p, const std::string& label = "TOP");
Poset adjoin_bottom(const Poset& p, const std::string& label = "BOT");

std::optional<int> meet(const Poset& p, int a, int b);
std::optional<int> join(const Poset& p, int a, int b);

struct MeetSemilatticeReport {
  bool ok = true;
  std::pair<int, int> witness{-1, -1};  // a pair with no meet, when !ok
};
MeetSemilatticeReport is_meet_semilattice(const Poset& p);

struct IsoResult {
  bool isomorphic = false;
  std::vector<int> mapping;  // element i of P -> mapping[i] in Q
};
// Isomorphism via iterated invariant refinement (rank, cover degrees, neighbor
// color multisets) followed by backtracking.  Throws too_large over the cap.
IsoResult is_isomorphic(const Poset& p, const Poset& q,
                        std::size_t max_elements = kDefaultElementCap);

struct SimplicialComplexModel {
  std::vector<int> vertices;               // ids, ascending
  std::vector<std::vector<int>> facets;    // maximal faces, each sorted
};

// Chains of P as a simplicial complex; facets are the maximal chains.
SimplicialComplexModel order_complex(const Poset& p, bool strip_bottom);

// Number of chains hitting exactly the ranks in S (S subseteq {1..rank}).
unsigned long long flag_f(const Poset& p, const std::set<int>& ranks);

}  // namespace bierkit
