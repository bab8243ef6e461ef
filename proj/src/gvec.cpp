#include "bierkit/gvec.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bierkit/errors.hpp"
#include "bierkit/toric.hpp"

namespace bierkit {

namespace {

// Remove a maximal member t from an ideal indexed over p_hat minus its top.
IdealSet drop_member(const Poset& p_hat, const IdealSet& ideal, int t) {
  const int top = p_hat.size() - 1;
  require(t >= 0 && t < top && ideal.contains(t), errc::bad_parameters,
          "element is not an ideal member: " + std::to_string(t));
  if (t == p_hat.bottom())
    fail(ideal.size() == 1 ? errc::would_empty : errc::not_maximal,
         "cannot remove the bottom from an ideal");
  for (int w : p_hat.upper_covers(t))
    require(w == top || !ideal.contains(w), errc::not_maximal,
            "element " + std::to_string(t) + " is below ideal member " + std::to_string(w));
  IdealSet out = ideal;
  out.member[static_cast<std::size_t>(t)] = 0;
  out.members_sorted.erase(std::find(out.members_sorted.begin(), out.members_sorted.end(), t));
  return out;
}

Poset lower_open_interval(const Poset& p_hat, int t) {  // [0, t)
  return subposet(p_hat, IntervalSpec{p_hat.bottom(), t, false, true}).poset;
}

Poset upper_open_dual(const Poset& p_hat, int t) {  // (t, 1]*
  const int top = p_hat.size() - 1;
  return dual(subposet(p_hat, IntervalSpec{t, top, true, false}).poset, true);
}

BigInt g1_of(const Poset& boundary_poset) { return toric_g(boundary_poset).coeff(1); }

}  // namespace

DeltaReport delta_h_check(const Poset& p_hat, const IdealSet& ideal, int t) {
  IdealSet smaller = drop_member(p_hat, ideal, t);
  BierModel retained = build_bier_topped(p_hat, ideal);
  BierModel removed = build_bier_topped(p_hat, smaller);

  DeltaReport rep;
  rep.delta_h = toric_h(removed.poset) - toric_h(retained.poset);
  rep.delta_g = toric_g(removed.poset) - toric_g(retained.poset);
  rep.lhs = rep.delta_h;

  Poset below = lower_open_interval(p_hat, t);
  Poset above = upper_open_dual(p_hat, t);
  rep.rhs = toric_h(below) * toric_g(above) - toric_g(below) * toric_h(above);
  rep.match = (rep.lhs == rep.rhs);
  return rep;
}

DeltaGReport delta_g_multiplex(const Poset& p_hat, const IdealSet& ideal, int t,
                               bool allow_out_of_range) {
  const int d = p_hat.rank() - 1;
  const int r = p_hat.element_rank(t);
  const int half = (d + 1) / 2;  // ceil(d/2)

  DeltaGReport rep;
  const bool facet_case = (r == d && d > half);
  const bool mid_case = (d > r && r > half + 1);
  rep.in_range = facet_case || mid_case;
  if (!rep.in_range && !allow_out_of_range)
    fail(errc::rank_out_of_range,
         "element of rank " + std::to_string(r) + " is outside the covered cases for d = " +
             std::to_string(d));

  IdealSet smaller = drop_member(p_hat, ideal, t);
  rep.recursion = toric_g(build_bier_topped(p_hat, smaller).poset) -
                  toric_g(build_bier_topped(p_hat, ideal).poset);
  if (!rep.in_range) return rep;

  BigInt g1b = g1_of(lower_open_interval(p_hat, t));
  if (facet_case) {
    rep.closed_form = IntPolynomial::monomial(1) + IntPolynomial::monomial(2, g1b);
  } else {
    BigInt g1a = g1_of(upper_open_dual(p_hat, t));
    rep.closed_form = IntPolynomial::monomial(d - r, g1a) +
                      IntPolynomial::monomial(d - r + 1, g1b * g1a + 1) +
                      IntPolynomial::monomial(d - r + 2, g1b);
  }
  rep.match = (rep.closed_form == rep.recursion);
  require(rep.match, errc::closed_form_mismatch,
          "local-move closed form " + to_string(rep.closed_form) +
              " disagrees with the recursion " + to_string(rep.recursion));
  return rep;
}

std::vector<int> quad_dual_set(const MultiplexModel& m) {
  const Poset& lat = m.lattice;
  const int top = lat.size() - 1;
  const int rhat = lat.rank();
  std::vector<int> out;
  if (rhat < 3) return out;
  Poset square = polygon_face_lattice(4);
  for (int t : lat.elements_of_rank(rhat - 3)) {
    Poset upper = subposet(lat, IntervalSpec{t, top, false, false}).poset;
    if (is_isomorphic(dual(upper, true), square).isomorphic) out.push_back(t);
  }
  // by self-duality these correspond to the quadrilateral 2-faces
  if (m.d >= 3)
    require(static_cast<int>(out.size()) == m.n - m.d, errc::internal_check,
            "quad dual set count disagrees with n - d");
  return out;
}

ClosedFormReport g_bier_closed_form(const MultiplexModel& m, const IdealSet& ideal) {
  const Poset& lat = m.lattice;
  const int top = lat.size() - 1;
  const int rhat = lat.rank();
  const int d = rhat - 1;

  ClosedFormReport rep;
  const int threshold = (d + 1) / 2 + 1;
  rep.rank_condition = (d >= 4);
  for (int i = 0; i < top && rep.rank_condition; ++i)
    if (lat.element_rank(i) <= threshold && !ideal.contains(i)) rep.rank_condition = false;

  std::vector<IntPolynomial> lower_g = toric_g_lower_all(lat);
  std::vector<int> quads = quad_dual_set(m);

  IntPolynomial cf;
  cf += IntPolynomial::monomial(0);  // the adjoined top contributes x^0
  for (int t = 0; t < top; ++t) {
    if (ideal.contains(t)) continue;
    const int codim = rhat - lat.element_rank(t);
    cf += IntPolynomial::monomial(codim);
    cf += IntPolynomial::monomial(codim + 1, lower_g[static_cast<std::size_t>(t)].coeff(1));
    for (int s : quads)
      if (lat.leq(t, s)) cf += IntPolynomial::monomial(codim - 1);
  }
  cf += IntPolynomial::monomial(1, lower_g[static_cast<std::size_t>(top)].coeff(1));
  rep.closed_form = cf;

  rep.recursion = toric_g(build_bier_topped(lat, ideal).poset);
  rep.match = (rep.closed_form == rep.recursion);
  require(rep.match || !rep.rank_condition, errc::closed_form_mismatch,
          "closed form " + to_string(rep.closed_form) + " disagrees with the recursion " +
              to_string(rep.recursion));
  return rep;
}

namespace {

BigInt binom(const BigInt& n, int k) {
  if (k < 0 || n < k) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - (k - i);
    r /= i;
  }
  return r;
}

}  // namespace

// Macaulay upper bound on the next entry after value a at degree i >= 1.
BigInt macaulay_next_bound(const BigInt& value, int i) {
  BigInt a = value;
  BigInt bound = 0;
  for (int j = i; j >= 1 && a > 0; --j) {
    // largest m with binom(m, j) <= a, by exponential then binary search
    BigInt lo = j, hi = j + 1;
    while (binom(hi, j) <= a) {
      lo = hi;
      hi *= 2;
    }
    while (lo + 1 < hi) {
      BigInt mid = (lo + hi) / 2;
      (binom(mid, j) <= a ? lo : hi) = mid;
    }
    a -= binom(lo, j);
    bound += binom(lo + 1, j + 1);
  }
  return bound;
}

bool is_m_sequence(const std::vector<BigInt>& v) {
  if (v.empty() || v[0] != 1) return false;
  for (const BigInt& x : v)
    if (x < 0) return false;
  for (std::size_t i = 1; i + 1 < v.size(); ++i)
    if (v[i + 1] > macaulay_next_bound(v[i], static_cast<int>(i))) return false;
  return true;
}

WitnessGraph kk_witness(const MultiplexModel& m, const IdealSet& ideal) {
  const Poset& lat = m.lattice;
  const int top = lat.size() - 1;
  const int d = lat.rank() - 1;
  std::vector<IntPolynomial> lower_g = toric_g_lower_all(lat);
  const BigInt g1m = lower_g[static_cast<std::size_t>(top)].coeff(1);

  WitnessGraph graph;
  std::map<int, int> facet_vertex;  // lattice id -> graph vertex
  for (int t : lat.elements_of_rank(d)) {
    if (ideal.contains(t)) continue;
    facet_vertex[t] = static_cast<int>(graph.vertices.size());
    graph.vertices.push_back(lat.label(t) + "*");
  }
  const int cone_base = static_cast<int>(graph.vertices.size());
  for (BigInt j = 0; j < g1m; ++j)
    graph.vertices.push_back("w" + j.str());

  std::set<std::pair<int, int>> edges;
  auto add_edge = [&](int a, int b) { edges.insert({std::min(a, b), std::max(a, b)}); };

  // duals of the ridges outside the ideal
  for (int t : lat.elements_of_rank(d - 1)) {
    if (ideal.contains(t)) continue;
    auto above = lat.upper_covers(t);
    require(above.size() == 2, errc::internal_check, "ridge not contained in exactly two facets");
    add_edge(facet_vertex.at(above[0]), facet_vertex.at(above[1]));
  }

  // cone edges: facet dual joined to the first g1 of its boundary apexes
  for (auto [t, v] : facet_vertex) {
    const BigInt k = lower_g[static_cast<std::size_t>(t)].coeff(1);
    for (BigInt j = 0; j < k; ++j) add_edge(v, cone_base + static_cast<int>(j));
  }

  // one diagonal per quadrilateral face of the dual complex
  for (int s : quad_dual_set(m)) {
    if (ideal.contains(s)) continue;
    std::vector<int> corner;
    for (int f : lat.elements_of_rank(d))
      if (lat.leq(s, f)) corner.push_back(f);
    require(corner.size() == 4, errc::internal_check, "quad dual face without four facets");
    // the two facets not sharing a ridge through s form a diagonal; take the
    // pair containing the smallest facet id
    auto shares_ridge = [&](int a, int b) {
      for (int rdg : lat.elements_of_rank(d - 1))
        if (lat.leq(s, rdg) && lat.leq(rdg, a) && lat.leq(rdg, b)) return true;
      return false;
    };
    int partner = -1;
    for (int other = 1; other < 4; ++other)
      if (!shares_ridge(corner[0], corner[other])) {
        require(partner < 0, errc::internal_check, "quad dual face is not a four-cycle");
        partner = corner[other];
      }
    require(partner >= 0, errc::internal_check, "quad dual face is not a four-cycle");
    add_edge(facet_vertex.at(corner[0]), facet_vertex.at(partner));
  }

  graph.edges.assign(edges.begin(), edges.end());
  graph.g = toric_g(build_bier_topped(lat, ideal).poset);
  require(graph.g.coeff(0) == 1 && BigInt(graph.vertices.size()) == graph.g.coeff(1) &&
              BigInt(graph.edges.size()) == graph.g.coeff(2),
          errc::witness_mismatch,
          "witness graph f-vector (1, " + std::to_string(graph.vertices.size()) + ", " +
              std::to_string(graph.edges.size()) + ") does not match " + to_string(graph.g));
  return graph;
}

}  // namespace bierkit
