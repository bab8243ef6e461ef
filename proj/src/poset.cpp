#include "bierkit/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "bierkit/errors.hpp"

namespace bierkit {

namespace {

std::string id_str(int id) { return std::to_string(id); }

}  // namespace

Poset Poset::build(std::vector<PosetElement> elements,
                   std::vector<std::pair<int, int>> covers,
                   bool require_bottom) {
  require(!elements.empty(), errc::bad_parameters, "poset must have at least one element");
  require(elements.size() <= kDefaultElementCap, errc::too_large,
          "poset exceeds element cap");
  Poset p;
  p.elems_ = std::move(elements);
  const int n = p.size();
  for (auto [a, b] : covers) {
    require(a >= 0 && a < n && b >= 0 && b < n, errc::bad_parameters,
            "cover endpoint out of range: " + id_str(a) + " " + id_str(b));
    require(a != b, errc::not_graded, "self-cover at " + id_str(a));
  }
  std::sort(covers.begin(), covers.end());
  for (std::size_t i = 1; i < covers.size(); ++i)
    require(covers[i] != covers[i - 1], errc::redundant_cover,
            "duplicate cover " + id_str(covers[i].first) + " -> " + id_str(covers[i].second));
  p.covers_ = std::move(covers);

  p.up_adj_.assign(static_cast<std::size_t>(n), {});
  p.down_adj_.assign(static_cast<std::size_t>(n), {});
  for (auto [a, b] : p.covers_) {
    p.up_adj_[static_cast<std::size_t>(a)].push_back(b);
    p.down_adj_[static_cast<std::size_t>(b)].push_back(a);
  }

  bool ranks_supplied = true;
  for (const auto& e : p.elems_)
    if (e.rank < 0) ranks_supplied = false;

  p.finish(require_bottom, ranks_supplied);
  return p;
}

void Poset::finish(bool require_bottom, bool ranks_supplied) {
  const int n = size();

  // Topological order over the cover DAG; a leftover in-degree means a cycle.
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  for (auto [a, b] : covers_) {
    (void)a;
    ++indeg[static_cast<std::size_t>(b)];
  }
  std::vector<int> topo;
  topo.reserve(static_cast<std::size_t>(n));
  std::queue<int> q;
  for (int i = 0; i < n; ++i)
    if (indeg[static_cast<std::size_t>(i)] == 0) q.push(i);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    topo.push_back(v);
    for (int w : up_adj_[static_cast<std::size_t>(v)])
      if (--indeg[static_cast<std::size_t>(w)] == 0) q.push(w);
  }
  require(static_cast<int>(topo.size()) == n, errc::not_graded,
          "cover relation contains a cycle");

  if (!ranks_supplied) {
    // Longest chain from the minimal elements.
    for (auto& e : elems_) e.rank = 0;
    for (int v : topo)
      for (int w : up_adj_[static_cast<std::size_t>(v)])
        elems_[static_cast<std::size_t>(w)].rank =
            std::max(elems_[static_cast<std::size_t>(w)].rank,
                     elems_[static_cast<std::size_t>(v)].rank + 1);
  }

  rank_ = 0;
  for (const auto& e : elems_) rank_ = std::max(rank_, e.rank);

  for (auto [a, b] : covers_)
    require(elems_[static_cast<std::size_t>(b)].rank == elems_[static_cast<std::size_t>(a)].rank + 1,
            errc::not_graded,
            "cover " + id_str(a) + " -> " + id_str(b) + " does not raise rank by one");

  // With grading verified, a transitive shortcut is impossible, but a cover
  // repeated with distinct rank labels or similar corruption is not; keep the
  // direct irredundancy check cheap and explicit.
  std::vector<int> minimals;
  for (int i = 0; i < n; ++i)
    if (down_adj_[static_cast<std::size_t>(i)].empty()) minimals.push_back(i);

  if (require_bottom) {
    require(minimals.size() == 1, errc::no_unique_bottom,
            "expected exactly one minimal element, found " + std::to_string(minimals.size()));
    bottom_ = minimals.front();
    require(elems_[static_cast<std::size_t>(bottom_)].rank == 0, errc::not_graded,
            "bottom element must have rank 0");
  } else {
    bottom_ = -1;
  }

  // Reachability bitsets, both directions, in topological order.
  up_reach_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
  down_reach_.assign(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    int v = *it;
    auto& r = up_reach_[static_cast<std::size_t>(v)];
    r.set(static_cast<std::size_t>(v));
    for (int w : up_adj_[static_cast<std::size_t>(v)]) r |= up_reach_[static_cast<std::size_t>(w)];
  }
  for (int v : topo) {
    auto& r = down_reach_[static_cast<std::size_t>(v)];
    r.set(static_cast<std::size_t>(v));
    for (int w : down_adj_[static_cast<std::size_t>(v)]) r |= down_reach_[static_cast<std::size_t>(w)];
  }

  if (require_bottom) {
    const auto& reach = up_reach_[static_cast<std::size_t>(bottom_)];
    for (int i = 0; i < n; ++i)
      require(reach.test(static_cast<std::size_t>(i)), errc::disconnected_from_bottom,
              "element " + id_str(i) + " is not above the bottom");
  }
}

int Poset::bottom() const {
  require(bottom_ >= 0, errc::no_unique_bottom, "poset has no bottom (raw induced order)");
  return bottom_;
}

std::optional<int> Poset::unique_top() const {
  auto maxs = maximal_elements();
  if (maxs.size() == 1) return maxs.front();
  return std::nullopt;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (up_adj_[static_cast<std::size_t>(i)].empty()) out.push_back(i);
  return out;
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (down_adj_[static_cast<std::size_t>(i)].empty()) out.push_back(i);
  return out;
}

std::vector<int> Poset::elements_of_rank(int r) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (element_rank(i) == r) out.push_back(i);
  return out;
}

SubposetResult subposet(const Poset& p, const IntervalSpec& spec) {
  const int n = p.size();
  require(spec.lo < n && spec.hi < n, errc::bad_parameters, "interval endpoint out of range");
  if (spec.lo >= 0 && spec.hi >= 0)
    require(p.leq(spec.lo, spec.hi), errc::not_comparable,
            "interval endpoints are incomparable: " + std::to_string(spec.lo) + ", " +
                std::to_string(spec.hi));

  Bitset keep(static_cast<std::size_t>(n));
  keep.set();
  if (spec.lo >= 0) {
    keep &= p.up_set(spec.lo);
    if (spec.lo_open) keep.reset(static_cast<std::size_t>(spec.lo));
  }
  if (spec.hi >= 0) {
    keep &= p.down_set(spec.hi);
    if (spec.hi_open) keep.reset(static_cast<std::size_t>(spec.hi));
  }

  std::vector<int> ids;
  for (std::size_t i = keep.find_first(); i != Bitset::npos; i = keep.find_next(i))
    ids.push_back(static_cast<int>(i));
  require(!ids.empty(), errc::bad_parameters, "interval selection is empty");

  std::vector<int> new_id(static_cast<std::size_t>(n), -1);
  for (std::size_t k = 0; k < ids.size(); ++k) new_id[static_cast<std::size_t>(ids[k])] = static_cast<int>(k);

  int min_rank = p.rank();
  for (int id : ids) min_rank = std::min(min_rank, p.element_rank(id));

  std::vector<PosetElement> elems;
  elems.reserve(ids.size());
  for (int id : ids)
    elems.push_back(PosetElement{p.element_rank(id) - min_rank, p.label(id)});

  // The selection is convex, so induced covers are the original covers.
  std::vector<std::pair<int, int>> covers;
  for (auto [a, b] : p.covers())
    if (keep.test(static_cast<std::size_t>(a)) && keep.test(static_cast<std::size_t>(b)))
      covers.emplace_back(new_id[static_cast<std::size_t>(a)], new_id[static_cast<std::size_t>(b)]);

  bool bottomed = !(spec.lo >= 0 && spec.lo_open) && p.has_bottom();
  if (spec.lo >= 0 && !spec.lo_open) bottomed = true;
  return SubposetResult{Poset::build(std::move(elems), std::move(covers), bottomed), std::move(ids)};
}

Poset dual(const Poset& p, bool require_bottom) {
  auto top = p.unique_top();
  if (require_bottom)
    require(top.has_value(), errc::no_unique_top, "dual requires a unique maximal element");
  std::vector<PosetElement> elems;
  elems.reserve(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i)
    elems.push_back(PosetElement{p.rank() - p.element_rank(i), p.label(i)});
  std::vector<std::pair<int, int>> covers;
  covers.reserve(p.covers().size());
  for (auto [a, b] : p.covers()) covers.emplace_back(b, a);
  return Poset::build(std::move(elems), std::move(covers), top.has_value());
}

Poset product(const Poset& p, const Poset& q) {
  require(p.has_bottom() && q.has_bottom(), errc::no_unique_bottom,
          "product factors must have bottoms");
  const std::size_t np = static_cast<std::size_t>(p.size());
  const std::size_t nq = static_cast<std::size_t>(q.size());
  require(np * nq <= kDefaultElementCap, errc::too_large, "product exceeds element cap");
  std::vector<PosetElement> elems;
  elems.reserve(np * nq);
  for (std::size_t a = 0; a < np; ++a)
    for (std::size_t b = 0; b < nq; ++b)
      elems.push_back(PosetElement{
          p.element_rank(static_cast<int>(a)) + q.element_rank(static_cast<int>(b)),
          "(" + p.label(static_cast<int>(a)) + "," + q.label(static_cast<int>(b)) + ")"});
  std::vector<std::pair<int, int>> covers;
  for (auto [a, b] : p.covers())
    for (std::size_t c = 0; c < nq; ++c)
      covers.emplace_back(static_cast<int>(static_cast<std::size_t>(a) * nq + c),
                          static_cast<int>(static_cast<std::size_t>(b) * nq + c));
  for (auto [c, d] : q.covers())
    for (std::size_t a = 0; a < np; ++a)
      covers.emplace_back(static_cast<int>(a * nq + static_cast<std::size_t>(c)),
                          static_cast<int>(a * nq + static_cast<std::size_t>(d)));
  return Poset::build(std::move(elems), std::move(covers), true);
}

Poset adjoin_top(const Poset& p, const std::string& label) {
  std::vector<PosetElement> elems;
  elems.reserve(static_cast<std::size_t>(p.size()) + 1);
  for (int i = 0; i < p.size(); ++i) elems.push_back(PosetElement{p.element_rank(i), p.label(i)});
  elems.push_back(PosetElement{p.rank() + 1, label});
  auto covers = p.covers();
  for (int m : p.maximal_elements()) covers.emplace_back(m, p.size());
  return Poset::build(std::move(elems), std::move(covers), p.has_bottom());
}

Poset adjoin_bottom(const Poset& p, const std::string& label) {
  std::vector<PosetElement> elems;
  elems.reserve(static_cast<std::size_t>(p.size()) + 1);
  for (int i = 0; i < p.size(); ++i) elems.push_back(PosetElement{p.element_rank(i) + 1, p.label(i)});
  elems.push_back(PosetElement{0, label});
  auto covers = p.covers();
  for (int m : p.minimal_elements()) covers.emplace_back(p.size(), m);
  return Poset::build(std::move(elems), std::move(covers), true);
}

namespace {

std::optional<int> unique_extreme(const Poset& p, const Bitset& set, bool maximal) {
  std::optional<int> found;
  for (std::size_t i = set.find_first(); i != Bitset::npos; i = set.find_next(i)) {
    const Bitset& beyond = maximal ? p.up_set(static_cast<int>(i)) : p.down_set(static_cast<int>(i));
    Bitset inside = beyond & set;
    inside.reset(i);
    if (inside.none()) {
      if (found) return std::nullopt;  // two extremes -> no unique bound
      found = static_cast<int>(i);
    }
  }
  return found;
}

}  // namespace

std::optional<int> meet(const Poset& p, int a, int b) {
  Bitset lower = p.down_set(a) & p.down_set(b);
  if (lower.none()) return std::nullopt;
  return unique_extreme(p, lower, /*maximal=*/true);
}

std::optional<int> join(const Poset& p, int a, int b) {
  Bitset upper = p.up_set(a) & p.up_set(b);
  if (upper.none()) return std::nullopt;
  return unique_extreme(p, upper, /*maximal=*/false);
}

MeetSemilatticeReport is_meet_semilattice(const Poset& p) {
  for (int a = 0; a < p.size(); ++a)
    for (int b = a + 1; b < p.size(); ++b)
      if (!meet(p, a, b)) return {false, {a, b}};
  return {};
}

namespace {

// Iterated refinement of an initial coloring by (rank, up-degree, down-degree)
// with sorted multisets of neighbor colors, as one fingerprint per element.
// Color ids are assigned by sorted key order (two passes per round), never by
// encounter order, so they are canonical: equal keys get equal ids in any
// poset, which is what makes the cross-poset histogram comparison sound.
std::vector<int> stable_coloring(const Poset& p) {
  const int n = p.size();
  std::vector<int> color(static_cast<std::size_t>(n));
  {
    using Key = std::tuple<int, std::size_t, std::size_t>;
    std::vector<Key> keys;
    keys.reserve(static_cast<std::size_t>(n));
    std::map<Key, int> ids;
    for (int i = 0; i < n; ++i) {
      keys.emplace_back(p.element_rank(i), p.upper_covers(i).size(), p.lower_covers(i).size());
      ids[keys.back()] = 0;
    }
    int c = 0;
    for (auto& [key, id] : ids) id = c++;
    for (int i = 0; i < n; ++i) color[static_cast<std::size_t>(i)] = ids[keys[static_cast<std::size_t>(i)]];
  }
  for (int round = 0; round < n; ++round) {
    using Key = std::tuple<int, std::vector<int>, std::vector<int>>;
    std::vector<Key> keys;
    keys.reserve(static_cast<std::size_t>(n));
    std::map<Key, int> ids;
    for (int i = 0; i < n; ++i) {
      std::vector<int> ups, downs;
      for (int w : p.upper_covers(i)) ups.push_back(color[static_cast<std::size_t>(w)]);
      for (int w : p.lower_covers(i)) downs.push_back(color[static_cast<std::size_t>(w)]);
      std::sort(ups.begin(), ups.end());
      std::sort(downs.begin(), downs.end());
      keys.emplace_back(color[static_cast<std::size_t>(i)], std::move(ups), std::move(downs));
      ids[keys.back()] = 0;
    }
    int c = 0;
    for (auto& [key, id] : ids) id = c++;
    std::vector<int> next(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) next[static_cast<std::size_t>(i)] = ids[keys[static_cast<std::size_t>(i)]];
    bool changed = false;
    for (int i = 0; i < n; ++i)
      if (next[static_cast<std::size_t>(i)] != color[static_cast<std::size_t>(i)]) changed = true;
    color = std::move(next);
    if (!changed) break;
  }
  return color;
}

bool extend_isomorphism(const Poset& p, const Poset& q, const std::vector<int>& cp,
                        const std::vector<int>& cq, std::vector<int>& order,
                        std::size_t depth, std::vector<int>& map_pq, std::vector<int>& map_qp) {
  if (depth == order.size()) return true;
  int a = order[depth];
  for (int b = 0; b < q.size(); ++b) {
    if (map_qp[static_cast<std::size_t>(b)] != -1) continue;
    if (cq[static_cast<std::size_t>(b)] != cp[static_cast<std::size_t>(a)]) continue;
    bool ok = true;
    for (int w : p.upper_covers(a)) {
      int wb = map_pq[static_cast<std::size_t>(w)];
      if (wb != -1 && !std::count(q.upper_covers(b).begin(), q.upper_covers(b).end(), wb)) {
        ok = false;
        break;
      }
    }
    if (ok)
      for (int w : p.lower_covers(a)) {
        int wb = map_pq[static_cast<std::size_t>(w)];
        if (wb != -1 && !std::count(q.lower_covers(b).begin(), q.lower_covers(b).end(), wb)) {
          ok = false;
          break;
        }
      }
    if (!ok) continue;
    map_pq[static_cast<std::size_t>(a)] = b;
    map_qp[static_cast<std::size_t>(b)] = a;
    if (extend_isomorphism(p, q, cp, cq, order, depth + 1, map_pq, map_qp)) return true;
    map_pq[static_cast<std::size_t>(a)] = -1;
    map_qp[static_cast<std::size_t>(b)] = -1;
  }
  return false;
}

}  // namespace

IsoResult is_isomorphic(const Poset& p, const Poset& q, std::size_t max_elements) {
  require(static_cast<std::size_t>(p.size()) <= max_elements &&
              static_cast<std::size_t>(q.size()) <= max_elements,
          errc::too_large, "isomorphism test exceeds element cap");
  if (p.size() != q.size() || p.rank() != q.rank() || p.covers().size() != q.covers().size())
    return {};

  auto cp = stable_coloring(p);
  auto cq = stable_coloring(q);

  // Color histograms must agree; ids from stable_coloring are canonical, so
  // the same structural fingerprint gets the same id in both posets.
  std::map<int, int> hp, hq;
  for (int c : cp) ++hp[c];
  for (int c : cq) ++hq[c];
  if (hp != hq) return {};

  // Assign elements in order of ascending color class size to fail fast.
  std::vector<int> order(static_cast<std::size_t>(p.size()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int sa = hp[cp[static_cast<std::size_t>(a)]], sb = hp[cp[static_cast<std::size_t>(b)]];
    if (sa != sb) return sa < sb;
    return a < b;
  });

  std::vector<int> map_pq(static_cast<std::size_t>(p.size()), -1);
  std::vector<int> map_qp(static_cast<std::size_t>(q.size()), -1);
  if (!extend_isomorphism(p, q, cp, cq, order, 0, map_pq, map_qp)) return {};
  return {true, std::move(map_pq)};
}

SimplicialComplexModel order_complex(const Poset& p, bool strip_bottom) {
  SimplicialComplexModel k;
  std::vector<char> skip(static_cast<std::size_t>(p.size()), 0);
  if (strip_bottom && p.has_bottom()) skip[static_cast<std::size_t>(p.bottom())] = 1;
  for (int i = 0; i < p.size(); ++i)
    if (!skip[static_cast<std::size_t>(i)]) k.vertices.push_back(i);

  // DFS from remaining minimal elements; maximal chains are the facets.
  std::vector<int> chain;
  std::vector<int> starts;
  for (int i : k.vertices) {
    bool minimal = true;
    for (int w : p.lower_covers(i))
      if (!skip[static_cast<std::size_t>(w)]) minimal = false;
    if (minimal) starts.push_back(i);
  }
  struct Frame {
    int v;
    std::size_t next = 0;
  };
  for (int s : starts) {
    std::vector<Frame> stack{{s}};
    chain = {s};
    while (!stack.empty()) {
      auto& f = stack.back();
      const auto& ups = p.upper_covers(f.v);
      if (f.next == 0 && ups.empty()) {
        k.facets.push_back(chain);
      }
      if (f.next < ups.size()) {
        int w = ups[f.next++];
        stack.push_back({w});
        chain.push_back(w);
      } else {
        stack.pop_back();
        chain.pop_back();
      }
    }
  }
  for (auto& f : k.facets) std::sort(f.begin(), f.end());
  std::sort(k.facets.begin(), k.facets.end());
  return k;
}

unsigned long long flag_f(const Poset& p, const std::set<int>& ranks) {
  if (ranks.empty()) return 1;
  for (int r : ranks)
    require(r >= 1 && r <= p.rank(), errc::bad_parameters,
            "flag rank " + std::to_string(r) + " out of range");
  std::vector<int> levels(ranks.begin(), ranks.end());
  // Chains counted level by level: ways[v] = chains from v through the
  // remaining levels, filled from the top level down.
  std::vector<unsigned long long> ways(static_cast<std::size_t>(p.size()), 0);
  for (int v : p.elements_of_rank(levels.back())) ways[static_cast<std::size_t>(v)] = 1;
  for (int li = static_cast<int>(levels.size()) - 2; li >= 0; --li) {
    std::vector<unsigned long long> next(static_cast<std::size_t>(p.size()), 0);
    auto lower = p.elements_of_rank(levels[static_cast<std::size_t>(li)]);
    auto upper = p.elements_of_rank(levels[static_cast<std::size_t>(li) + 1]);
    for (int v : lower)
      for (int w : upper)
        if (p.leq(v, w)) next[static_cast<std::size_t>(v)] += ways[static_cast<std::size_t>(w)];
    ways = std::move(next);
  }
  unsigned long long total = 0;
  for (int v : p.elements_of_rank(levels.front())) total += ways[static_cast<std::size_t>(v)];
  return total;
}

}  // namespace bierkit
