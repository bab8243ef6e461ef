#pragma once

#include "bierkit/polynomial.hpp"
#include "bierkit/poset.hpp"

namespace bierkit {

// Toric f/h/g polynomials of a graded poset P with bottom, rank r = maximum
// element rank:
//
//   f(P,x) = sum over t in P of g([0,t), x) * (x-1)^(r - rank t),
//   h(P,x) = x^r f(P, 1/x),
//   f(empty) = g(empty) = 1.
//
// g of each half-open lower interval is taken by truncation,
// g = T_{floor(rank/2)}((1-x) f), after asserting that its f is palindromic
// in its own rank window (the lazy lower-Eulerian check); a violation throws
// not_lower_eulerian naming the offending element.  toric_g of the whole
// poset evaluates the truncation route and the reversed-coefficient
// difference route and throws definition_mismatch when they disagree, which
// happens exactly when f is not palindromic.

IntPolynomial toric_f(const Poset& p);
IntPolynomial toric_h(const Poset& p);
IntPolynomial toric_g(const Poset& p);

// g([0,t), x) for every element t, computed in one memoized pass.
std::vector<IntPolynomial> toric_g_lower_all(const Poset& p);

struct ToricReport {
  int rank = 0;
  IntPolynomial f, h, g, g_bar;  // g_bar = (1-x) f - g
  bool lower_eulerian_ok = true;
  bool g_routes_agree = true;
  std::string detail;
};
ToricReport toric_report(const Poset& p);

// Toric product identities for bounded Eulerian lattices P1, P2:
//   (a)  g(boundary(P1 x P2)) = g(boundary P1) * g(boundary P2)
//   (b)  h(boundary P1 x boundary P2) = h(boundary P1) * h(boundary P2)
// where boundary strips the top (in (a)) and both factor tops (in (b)).
struct ProductIdentityReport {
  IntPolynomial a_lhs, a_rhs, b_lhs, b_rhs;
  bool a_ok = false, b_ok = false;
};
ProductIdentityReport verify_product_identities(const Poset& p1, const Poset& p2);

}  // namespace bierkit
