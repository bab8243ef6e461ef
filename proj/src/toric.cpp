#include "bierkit/toric.hpp"

#include <algorithm>

#include "bierkit/errors.hpp"

namespace bierkit {

namespace {

// Memoized g([0,t)) per element, filled in rank order so no recursion is
// needed.  The strict down-set of t, as an induced subposet, keeps the ranks
// of P, so each element's contribution reuses the same memo entries.
class ToricContext {
public:
  explicit ToricContext(const Poset& p) : p_(p) {
    xm1_.reserve(static_cast<std::size_t>(p.rank()) + 2);
    xm1_.push_back(IntPolynomial::constant(1));
    IntPolynomial xm1({-1, 1});
    for (int k = 1; k <= p.rank() + 1; ++k) xm1_.push_back(xm1_.back() * xm1);
    compute();
  }

  const IntPolynomial& g_lower(int t) const { return g_lower_[static_cast<std::size_t>(t)]; }

  IntPolynomial f_whole() const {
    const int r = p_.rank();
    IntPolynomial f;
    for (int t = 0; t < p_.size(); ++t)
      f += g_lower(t) * xm1_[static_cast<std::size_t>(r - p_.element_rank(t))];
    return f;
  }

private:
  void compute() {
    require(p_.has_bottom(), errc::not_bounded, "toric polynomials need a poset with bottom");
    const int n = p_.size();
    g_lower_.assign(static_cast<std::size_t>(n), IntPolynomial());
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return p_.element_rank(a) < p_.element_rank(b); });
    for (int t : order) {
      if (t == p_.bottom()) {
        g_lower_[static_cast<std::size_t>(t)] = IntPolynomial::constant(1);  // g(empty) = 1
        continue;
      }
      const int rt = p_.element_rank(t) - 1;  // rank of [0, t)
      IntPolynomial f;
      const Bitset& below = p_.down_set(t);
      for (std::size_t z = below.find_first(); z != Bitset::npos; z = below.find_next(z)) {
        if (static_cast<int>(z) == t) continue;
        f += g_lower_[z] * xm1_[static_cast<std::size_t>(rt - p_.element_rank(static_cast<int>(z)))];
      }
      if (!is_palindrome(f, rt))
        fail(errc::not_lower_eulerian,
             "f of the open interval below element " + std::to_string(t) + " (" + p_.label(t) +
                 ") is not palindromic: " + to_string(f));
      g_lower_[static_cast<std::size_t>(t)] = truncate(IntPolynomial({1, -1}) * f, rt / 2);
    }
  }

  const Poset& p_;
  std::vector<IntPolynomial> xm1_;  // powers of (x-1)
  std::vector<IntPolynomial> g_lower_;
};

IntPolynomial g_by_truncation(const IntPolynomial& f, int r) {
  return truncate(IntPolynomial({1, -1}) * f, r / 2);
}

IntPolynomial g_by_h_differences(const IntPolynomial& f, int r) {
  IntPolynomial h = reverse(f, r);
  std::vector<BigInt> c(static_cast<std::size_t>(r / 2) + 1);
  c[0] = h.coeff(0);
  for (int i = 1; i <= r / 2; ++i) c[static_cast<std::size_t>(i)] = h.coeff(i) - h.coeff(i - 1);
  return IntPolynomial(std::move(c));
}

}  // namespace

IntPolynomial toric_f(const Poset& p) { return ToricContext(p).f_whole(); }

IntPolynomial toric_h(const Poset& p) { return reverse(toric_f(p), p.rank()); }

IntPolynomial toric_g(const Poset& p) {
  IntPolynomial f = toric_f(p);
  const int r = p.rank();
  IntPolynomial by_trunc = g_by_truncation(f, r);
  IntPolynomial by_diff = g_by_h_differences(f, r);
  if (by_trunc != by_diff)
    fail(errc::definition_mismatch,
         "the truncation and coefficient-difference routes to g disagree (f = " + to_string(f) +
             "): " + to_string(by_trunc) + " vs " + to_string(by_diff));
  return by_trunc;
}

std::vector<IntPolynomial> toric_g_lower_all(const Poset& p) {
  ToricContext ctx(p);
  std::vector<IntPolynomial> out;
  out.reserve(static_cast<std::size_t>(p.size()));
  for (int t = 0; t < p.size(); ++t) out.push_back(ctx.g_lower(t));
  return out;
}

ToricReport toric_report(const Poset& p) {
  ToricReport rep;
  rep.rank = p.rank();
  try {
    rep.f = toric_f(p);
  } catch (const Error& e) {
    if (e.code() != errc::not_lower_eulerian) throw;
    rep.lower_eulerian_ok = false;
    rep.detail = e.what();
    return rep;
  }
  rep.h = reverse(rep.f, rep.rank);
  IntPolynomial by_trunc = g_by_truncation(rep.f, rep.rank);
  IntPolynomial by_diff = g_by_h_differences(rep.f, rep.rank);
  rep.g_routes_agree = (by_trunc == by_diff);
  if (!rep.g_routes_agree) {
    rep.detail = "g routes disagree: " + to_string(by_trunc) + " vs " + to_string(by_diff);
    return rep;
  }
  rep.g = by_trunc;
  rep.g_bar = IntPolynomial({1, -1}) * rep.f - rep.g;
  return rep;
}

ProductIdentityReport verify_product_identities(const Poset& p1, const Poset& p2) {
  auto top1 = p1.unique_top();
  auto top2 = p2.unique_top();
  require(p1.has_bottom() && p2.has_bottom() && top1 && top2, errc::not_bounded,
          "product identities need bounded lattices");

  auto strip_top = [](const Poset& p, int top) {
    return subposet(p, IntervalSpec{p.bottom(), top, false, true}).poset;
  };

  ProductIdentityReport rep;
  Poset prod = product(p1, p2);
  int prod_top = *prod.unique_top();
  rep.a_lhs = toric_g(strip_top(prod, prod_top));
  rep.a_rhs = toric_g(strip_top(p1, *top1)) * toric_g(strip_top(p2, *top2));
  rep.a_ok = (rep.a_lhs == rep.a_rhs);

  Poset bprod = product(strip_top(p1, *top1), strip_top(p2, *top2));
  rep.b_lhs = toric_h(bprod);
  rep.b_rhs = toric_h(strip_top(p1, *top1)) * toric_h(strip_top(p2, *top2));
  rep.b_ok = (rep.b_lhs == rep.b_rhs);
  return rep;
}

}  // namespace bierkit
