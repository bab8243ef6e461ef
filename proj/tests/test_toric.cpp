#include "doctest.h"

#include <vector>

#include "bierkit/bier.hpp"
#include "bierkit/errors.hpp"
#include "bierkit/multiplex.hpp"
#include "bierkit/polynomial.hpp"
#include "bierkit/poset.hpp"
#include "bierkit/toric.hpp"

using namespace bierkit;

namespace {

// Plain-vector oracle recomputing the toric pair straight from the recursion,
// with no memoization and its own arithmetic: f(P) = sum over t of
// g([0,t)) (x-1)^(r - rk t), g = trunc_(r/2)((1-x) f).  Coefficients stay
// far below 2^63 on every poset used here.
using Coeffs = std::vector<long long>;

Coeffs vtrim(Coeffs a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Coeffs vmul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return vtrim(out);
}

Coeffs vadd(Coeffs a, const Coeffs& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return vtrim(a);
}

Coeffs vtrunc(Coeffs a, int r) {
  if (r < 0) return {};
  if (static_cast<int>(a.size()) > r + 1) a.resize(static_cast<std::size_t>(r) + 1);
  return vtrim(a);
}

Coeffs oracle_f(const Poset& p);

Coeffs oracle_g(const Poset& p, int r) {
  return vtrunc(vmul({1, -1}, oracle_f(p)), r / 2);
}

Coeffs oracle_f(const Poset& p) {
  const int r = p.rank();
  Coeffs f;
  for (int t = 0; t < p.size(); ++t) {
    Coeffs g{1};
    if (t != p.bottom()) {
      SubposetResult below = subposet(p, IntervalSpec{p.bottom(), t, false, true});
      g = oracle_g(below.poset, p.element_rank(t) - 1);
    }
    Coeffs pw{1};
    for (int k = 0; k < r - p.element_rank(t); ++k) pw = vmul(pw, {-1, 1});
    f = vadd(f, vmul(g, pw));
  }
  return f;
}

IntPolynomial lift(const Coeffs& c) {
  std::vector<BigInt> v;
  for (long long x : c) v.emplace_back(x);
  return IntPolynomial(std::move(v));
}

Poset strip_top(const Poset& p) {
  return subposet(p, IntervalSpec{p.bottom(), *p.unique_top(), false, true}).poset;
}

}  // namespace

TEST_CASE("small posets by hand") {
  Poset segment = comparison_face_lattice(1, 2);
  CHECK(toric_f(segment) == IntPolynomial({0, 0, 1}));
  CHECK(toric_h(segment) == IntPolynomial({1}));
  // on a bounded lattice f = x^2 is not palindromic, so the two defining
  // routes to g disagree and the cross-check refuses to pick one
  CHECK_THROWS_AS(toric_g(segment), Error);
  ToricReport bounded = toric_report(segment);
  CHECK(!bounded.g_routes_agree);
  CHECK(bounded.lower_eulerian_ok);

  Poset seg_boundary = strip_top(segment);
  CHECK(toric_f(seg_boundary) == IntPolynomial({1, 1}));
  CHECK(toric_h(seg_boundary) == IntPolynomial({1, 1}));
  CHECK(toric_g(seg_boundary) == IntPolynomial({1}));

  for (int m = 3; m <= 7; ++m) {
    Poset ring = strip_top(polygon_face_lattice(m));
    CHECK(toric_h(ring) == IntPolynomial({1, m - 2, 1}));
    CHECK(toric_g(ring) == (m == 3 ? IntPolynomial({1}) : IntPolynomial({1, m - 3})));
  }
}

TEST_CASE("oracle agreement across poset families") {
  std::vector<Poset> posets;
  posets.push_back(comparison_face_lattice(1, 2));
  posets.push_back(strip_top(polygon_face_lattice(3)));
  posets.push_back(strip_top(polygon_face_lattice(5)));
  posets.push_back(polygon_face_lattice(4));

  MultiplexModel m34 = build_multiplex(3, 4);
  MultiplexModel m45 = build_multiplex(4, 5);
  posets.push_back(boundary(m34));
  posets.push_back(boundary(m45));
  posets.push_back(m34.lattice);

  {
    Poset base = boundary(m34);
    ForcedIdealFamily family = enumerate_forced_ideals(base, 2);
    REQUIRE(!family.masks.empty());
    posets.push_back(build_bier(base, ideal_from_mask(base, family, family.masks[0])).poset);
  }

  for (const Poset& p : posets) {
    IntPolynomial f = toric_f(p);
    CHECK(f == lift(oracle_f(p)));
    CHECK(toric_h(p) == reverse(f, p.rank()));
    if (is_palindrome(f, p.rank()))
      CHECK(toric_g(p) == lift(oracle_g(p, p.rank())));
    else  // bounded lattices: the two routes to g disagree by design
      CHECK_THROWS_AS(toric_g(p), Error);
  }
}

TEST_CASE("multiplex boundary h and g") {
  struct Row {
    int d, n;
    IntPolynomial h, g;
  };
  std::vector<Row> rows{
      {4, 4, IntPolynomial({1, 1, 1, 1, 1}), IntPolynomial({1})},
      {4, 5, IntPolynomial({1, 2, 2, 2, 1}), IntPolynomial({1, 1})},
      {4, 6, IntPolynomial({1, 3, 3, 3, 1}), IntPolynomial({1, 2})},
      {5, 7, IntPolynomial({1, 3, 3, 3, 3, 1}), IntPolynomial({1, 2})},
  };
  for (const Row& row : rows) {
    Poset b = boundary(build_multiplex(row.d, row.n));
    CHECK(toric_h(b) == row.h);
    CHECK(toric_g(b) == row.g);
  }
}

TEST_CASE("per element lower g values") {
  MultiplexModel m = build_multiplex(4, 5);
  const Poset lat = m.lattice;
  std::vector<IntPolynomial> lower = toric_g_lower_all(lat);
  REQUIRE(lower.size() == static_cast<std::size_t>(lat.size()));
  for (int t = 0; t < lat.size(); ++t) {
    if (lat.element_rank(t) <= 2) {
      CHECK(lower[static_cast<std::size_t>(t)] == IntPolynomial({1}));  // points and segments
    } else if (t == lat.size() - 1) {
      CHECK(lower[static_cast<std::size_t>(t)] == toric_g(boundary(m)));
    }
  }
  // the quadrilateral 2-faces are the only rank-3 faces with g != [1]
  int nontrivial = 0;
  for (int t : lat.elements_of_rank(3))
    if (lower[static_cast<std::size_t>(t)] != IntPolynomial({1})) ++nontrivial;
  CHECK(nontrivial == quad_2faces(m).size());
}

TEST_CASE("non lower-eulerian posets are rejected") {
  Poset claw = Poset::build({PosetElement{-1, "0"}, PosetElement{-1, "a"}, PosetElement{-1, "b"},
                             PosetElement{-1, "c"}, PosetElement{-1, "1"}},
                            {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
  CHECK_THROWS_AS((void)toric_f(claw), Error);
  ToricReport rep = toric_report(claw);
  CHECK(!rep.lower_eulerian_ok);
  CHECK(!rep.detail.empty());

  Poset c2 = Poset::build({PosetElement{-1, "0"}, PosetElement{-1, "m"}, PosetElement{-1, "1"}},
                          {{0, 1}, {1, 2}});
  CHECK_THROWS_AS((void)toric_f(c2), Error);
}

TEST_CASE("report bundles the invariants") {
  Poset b = boundary(build_multiplex(4, 5));
  ToricReport rep = toric_report(b);
  CHECK(rep.lower_eulerian_ok);
  CHECK(rep.g_routes_agree);
  CHECK(rep.rank == 4);
  CHECK(rep.f == toric_f(b));
  CHECK(rep.h == toric_h(b));
  CHECK(rep.g == toric_g(b));
  CHECK(rep.g_bar == IntPolynomial({1, -1}) * rep.f - rep.g);
}

TEST_CASE("join and product identities on small pairs") {
  Poset segment = comparison_face_lattice(1, 2);
  Poset square = polygon_face_lattice(4);

  ProductIdentityReport ss = verify_product_identities(segment, segment);
  CHECK(ss.a_ok);
  CHECK(ss.b_ok);
  CHECK(ss.a_lhs == IntPolynomial({1}));
  CHECK(ss.b_lhs == IntPolynomial({1, 2, 1}));

  ProductIdentityReport qs = verify_product_identities(square, segment);
  CHECK(qs.a_ok);
  CHECK(qs.b_ok);
  CHECK(qs.a_lhs == IntPolynomial({1, 1}));
  CHECK(qs.a_rhs == toric_g(strip_top(square)) * toric_g(strip_top(segment)));

  Poset seg_boundary = strip_top(segment);
  CHECK_THROWS_AS(verify_product_identities(seg_boundary, segment), Error);
}
