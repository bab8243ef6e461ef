#include "bierkit/bier.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "bierkit/errors.hpp"
#include "bierkit/verify.hpp"

namespace bierkit {

IdealSet validate_ideal(const Poset& base, const std::vector<int>& ids) {
  IdealSet ideal;
  ideal.member.assign(static_cast<std::size_t>(base.size()), 0);
  for (int id : ids) {
    require(id >= 0 && id < base.size(), errc::bad_parameters,
            "ideal member out of range: " + std::to_string(id));
    ideal.member[static_cast<std::size_t>(id)] = 1;
  }
  require(base.has_bottom(), errc::no_unique_bottom, "ideals need a poset with bottom");
  require(ideal.member[static_cast<std::size_t>(base.bottom())] != 0, errc::not_proper,
          "an ideal must contain the bottom");
  for (auto [a, b] : base.covers())
    if (ideal.contains(b) && !ideal.contains(a))
      fail(errc::not_downward_closed, "ideal contains " + std::to_string(b) + " but not its lower cover " +
                                          std::to_string(a));
  for (int i = 0; i < base.size(); ++i)
    if (ideal.contains(i)) ideal.members_sorted.push_back(i);
  return ideal;
}

IdealSet delete_max(const Poset& base, const IdealSet& ideal, int t) {
  require(t >= 0 && t < base.size() && ideal.contains(t), errc::bad_parameters,
          "element is not an ideal member: " + std::to_string(t));
  require(t != base.bottom() || ideal.size() > 1, errc::would_empty,
          "removing the bottom would empty the ideal");
  for (int w : base.upper_covers(t))
    require(!ideal.contains(w), errc::not_maximal,
            "element " + std::to_string(t) + " is below ideal member " + std::to_string(w));
  require(t != base.bottom(), errc::would_empty, "the bottom is only maximal in the trivial ideal");
  IdealSet out = ideal;
  out.member[static_cast<std::size_t>(t)] = 0;
  out.members_sorted.erase(std::find(out.members_sorted.begin(), out.members_sorted.end(), t));
  return out;
}

namespace {

std::vector<int> free_elements_of(const Poset& base, int max_forced_rank) {
  std::vector<int> free;
  for (int i = 0; i < base.size(); ++i)
    if (base.element_rank(i) > max_forced_rank) free.push_back(i);
  require(free.size() <= 62, errc::too_many,
          "more than 62 free elements; narrow the forced rank");
  return free;
}

// lower covers of each free element that are themselves free, as indices
// into the free list
std::vector<std::vector<int>> free_constraints(const Poset& base, const std::vector<int>& free) {
  std::map<int, int> index_of;
  for (std::size_t i = 0; i < free.size(); ++i) index_of[free[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> need(free.size());
  for (std::size_t i = 0; i < free.size(); ++i)
    for (int w : base.lower_covers(free[i])) {
      auto it = index_of.find(w);
      if (it != index_of.end()) need[i].push_back(it->second);
    }
  return need;
}

}  // namespace

ForcedIdealFamily enumerate_forced_ideals(const Poset& base, int max_forced_rank,
                                          std::size_t cap) {
  require(max_forced_rank >= 0, errc::bad_parameters, "forced rank must be nonnegative");
  ForcedIdealFamily fam;
  fam.max_forced_rank = max_forced_rank;
  fam.free_elements = free_elements_of(base, max_forced_rank);
  auto need = free_constraints(base, fam.free_elements);

  // Depth-first enumeration of downward-closed subsets of the free elements
  // (free lists are rank-sorted because ids are arbitrary but ranks matter:
  // sort indices so constraints point backwards).
  std::vector<int> order(fam.free_elements.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return base.element_rank(fam.free_elements[static_cast<std::size_t>(a)]) <
           base.element_rank(fam.free_elements[static_cast<std::size_t>(b)]);
  });

  std::vector<std::uint64_t> masks;
  std::uint64_t current = 0;
  auto emit = [&]() {
    require(masks.size() < cap, errc::too_many,
            "forced ideal enumeration exceeds the cap of " + std::to_string(cap));
    masks.push_back(current);
  };
  // Recursive include/exclude over 'order'; an element may be included only
  // if all its free lower covers already are.
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == order.size()) {
      emit();
      return;
    }
    int idx = order[pos];
    self(self, pos + 1);  // excluded
    bool allowed = true;
    for (int dep : need[static_cast<std::size_t>(idx)])
      if (!(current & (std::uint64_t{1} << dep))) allowed = false;
    if (allowed) {
      current |= (std::uint64_t{1} << idx);
      self(self, pos + 1);
      current &= ~(std::uint64_t{1} << idx);
    }
  };
  rec(rec, 0);

  std::sort(masks.begin(), masks.end(), [&](std::uint64_t a, std::uint64_t b) {
    int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
    if (pa != pb) return pa < pb;
    // lexicographic on the ascending chosen-id lists
    std::vector<int> la, lb;
    for (std::size_t i = 0; i < fam.free_elements.size(); ++i) {
      if (a & (std::uint64_t{1} << i)) la.push_back(fam.free_elements[i]);
      if (b & (std::uint64_t{1} << i)) lb.push_back(fam.free_elements[i]);
    }
    return la < lb;
  });
  fam.masks = std::move(masks);
  return fam;
}

std::vector<std::uint64_t> sample_forced_ideal_masks(const Poset& base, int max_forced_rank,
                                                     std::size_t k, std::uint64_t seed) {
  auto free = free_elements_of(base, max_forced_rank);
  auto need = free_constraints(base, free);
  std::vector<int> order(free.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return base.element_rank(free[static_cast<std::size_t>(a)]) <
           base.element_rank(free[static_cast<std::size_t>(b)]);
  });
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> out;
  out.reserve(k);
  for (std::size_t draw = 0; draw < k; ++draw) {
    std::uint64_t mask = 0;
    for (int idx : order) {
      bool allowed = true;
      for (int dep : need[static_cast<std::size_t>(idx)])
        if (!(mask & (std::uint64_t{1} << dep))) allowed = false;
      if (allowed && (rng() & 1)) mask |= (std::uint64_t{1} << idx);
    }
    out.push_back(mask);
  }
  return out;
}

IdealSet ideal_from_mask(const Poset& base, const ForcedIdealFamily& family, std::uint64_t mask) {
  std::vector<int> ids;
  for (int i = 0; i < base.size(); ++i)
    if (base.element_rank(i) <= family.max_forced_rank) ids.push_back(i);
  for (std::size_t i = 0; i < family.free_elements.size(); ++i)
    if (mask & (std::uint64_t{1} << i)) ids.push_back(family.free_elements[i]);
  return validate_ideal(base, ids);
}

std::string mask_to_hex(std::uint64_t mask) {
  std::ostringstream os;
  os << std::hex << mask;
  return os.str();
}

BierModel build_bier(const Poset& base, const IdealSet& ideal) {
  return build_bier_topped(adjoin_top(base, "1"), ideal);
}

BierModel build_bier_topped(const Poset& p_hat, const IdealSet& ideal) {
  const int top = p_hat.size() - 1;
  require(p_hat.unique_top() && *p_hat.unique_top() == top, errc::bad_parameters,
          "topped lattice must end with its top element");
  require(ideal.member.size() + 1 == static_cast<std::size_t>(p_hat.size()), errc::bad_parameters,
          "ideal is indexed over a different poset");

  auto in_ideal = [&](int v) { return v != top && ideal.contains(v); };

  // Elements: pairs (x, y), x in I, y outside, x < y, sorted by id pair.
  std::vector<std::pair<int, int>> pairs;
  for (int x : ideal.members_sorted) {
    const Bitset& above = p_hat.up_set(x);
    for (std::size_t y = above.find_first(); y != Bitset::npos; y = above.find_next(y))
      if (static_cast<int>(y) != x && !in_ideal(static_cast<int>(y)))
        pairs.emplace_back(x, static_cast<int>(y));
  }
  std::sort(pairs.begin(), pairs.end());

  std::map<std::pair<int, int>, int> id_of;
  for (std::size_t i = 0; i < pairs.size(); ++i) id_of[pairs[i]] = static_cast<int>(i);

  const int rhat = p_hat.rank();
  std::vector<PosetElement> elems;
  elems.reserve(pairs.size());
  for (auto [x, y] : pairs)
    elems.push_back(PosetElement{p_hat.element_rank(x) + rhat - p_hat.element_rank(y),
                                 "[" + p_hat.label(x) + "," + p_hat.label(y) + "]"});

  // Covers shrink the interval by one step at either end.
  std::vector<std::pair<int, int>> covers;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [x, y] = pairs[i];
    for (int xu : p_hat.upper_covers(x))
      if (in_ideal(xu) && p_hat.less(xu, y))
        covers.emplace_back(static_cast<int>(i), id_of.at({xu, y}));
    for (int yd : p_hat.lower_covers(y))
      if (!in_ideal(yd) && p_hat.less(x, yd))
        covers.emplace_back(static_cast<int>(i), id_of.at({x, yd}));
  }

  BierModel model{Poset::build(std::move(elems), std::move(covers)), std::move(pairs), p_hat};

  for (int e : model.poset.maximal_elements())
    require(model.poset.element_rank(e) == rhat - 1, errc::internal_check,
            "maximal Bier element of unexpected rank");

  if (is_eulerian(p_hat).ok) {
    auto check = is_eulerian(adjoin_top(model.poset, "1"));
    require(check.ok, errc::eulerian_violation,
            "Bier poset of an Eulerian lattice failed the Eulerian check at interval [" +
                std::to_string(check.witness.first) + ", " + std::to_string(check.witness.second) +
                "]");
  }
  return model;
}

}  // namespace bierkit
