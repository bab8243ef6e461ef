#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bierkit/bier.hpp"
#include "bierkit/multiplex.hpp"
#include "bierkit/polynomial.hpp"
#include "bierkit/poset.hpp"

namespace bierkit {

// Effect of dropping one maximal ideal element t on the Bier invariants,
// with the sign convention removal minus retention:
//
//   delta_h = h(Bier(P, Q - {t})) - h(Bier(P, Q))
//           = h([0,t)) g((t,1]*) - g([0,t)) h((t,1]*)
//
// lhs is the Bier difference, rhs the interval form; for Gorenstein* P they
// agree, and the difference is independent of the ideal Q as long as t is
// maximal in it.
struct DeltaReport {
  IntPolynomial delta_h, delta_g;
  IntPolynomial lhs, rhs;
  bool match = false;
};

// p_hat is the bounded lattice (its last id must be the top); the ideal
// lives on p_hat minus the top.
DeltaReport delta_h_check(const Poset& p_hat, const IdealSet& ideal, int t);

// Closed form for delta_g on a multiplex boundary lattice (d = rank of
// p_hat minus 1).  Covered cases:
//   rank(t) = d (a facet):               x + g1([0,t)) x^2
//   d > rank(t) > ceil(d/2)+1:           g1(A) x^(d-r) + (g1(B) g1(A) + 1)
//                                        x^(d-r+1) + g1(B) x^(d-r+2)
// with A = (t,1]*, B = [0,t), r = rank(t).  Outside those cases the closed
// form does not apply: rank_out_of_range is thrown unless
// allow_out_of_range, in which case only the recursion value is returned
// with in_range = false.  In range, recursion and closed form are compared
// and a disagreement is a hard internal error.
struct DeltaGReport {
  IntPolynomial closed_form;
  IntPolynomial recursion;
  bool in_range = true;
  bool match = false;
};
DeltaGReport delta_g_multiplex(const Poset& p_hat, const IdealSet& ideal, int t,
                               bool allow_out_of_range = false);

// Faces t of the multiplex with [t,1] dualized a quadrilateral face
// lattice; every member has rank d-2.  The count is cross-checked against
// the quadrilateral 2-face count for d >= 4.
std::vector<int> quad_dual_set(const MultiplexModel& m);

// The four-sum closed form for g(Bier(M,I)) over a multiplex boundary:
//
//   sum over t outside I (top included) of x^(r(M_hat) - r(t))
//   + g1(M) x
//   + sum over faces t outside I of g1([0,t)) x^(r(M_hat) - r(t) + 1)
//   + sum over faces t outside I and s in the quad dual set with t <= s
//     of x^(r(M_hat) - r(t) - 1)
//
// compared against toric_g of the Bier poset.  rank_condition records
// whether I contains every element of rank <= ceil(d/2)+1 (and d >= 4); a
// mismatch under the rank condition throws closed_form_mismatch, otherwise
// it is reported through `match` only.
struct ClosedFormReport {
  IntPolynomial closed_form;
  IntPolynomial recursion;
  bool rank_condition = true;
  bool match = false;
};
ClosedFormReport g_bier_closed_form(const MultiplexModel& m, const IdealSet& ideal);

/// Macaulay growth test: v[0] = 1, all entries nonnegative, and each
// v[i+1] bounded by the i-th binomial representation bound of v[i].
bool is_m_sequence(const std::vector<BigInt>& v);

// The largest value the entry after `value` (in position i >= 1) may take.
BigInt macaulay_next_bound(const BigInt& value, int i);

// Witness graph with f-vector (1, g1, g2) of toric_g(Bier(M,I)): vertices
// are the facets outside I plus g1(M) cone vertices; edges are the ridges
// outside I, the cone edges {facet, w_j} for j < g1 of the facet's
// boundary, and one diagonal per quadrilateral with all sides outside I.
// A disagreement with the toric g of the Bier poset is a hard error.
struct WitnessGraph {
  std::vector<std::string> vertices;
  std::vector<std::pair<int, int>> edges;
  IntPolynomial g;  // toric g of the Bier poset
};
WitnessGraph kk_witness(const MultiplexModel& m, const IdealSet& ideal);

}  // namespace bierkit
