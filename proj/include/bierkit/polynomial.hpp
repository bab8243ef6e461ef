#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace bierkit {

using BigInt = boost::multiprecision::cpp_int;

// Dense univariate polynomial with arbitrary-precision integer coefficients.
// Coefficients are stored ascending by degree and kept normalized: no trailing
// zeros, so the zero polynomial is the empty sequence and has degree -1.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long long> coeffs);

  static IntPolynomial constant(long long v);
  static IntPolynomial monomial(int deg, const BigInt& coeff = 1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  BigInt coeff(int i) const;
  const std::vector<BigInt>& coeffs() const { return c_; }

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

  IntPolynomial scalar_mul(const BigInt& s) const;

private:
  void normalize();
  std::vector<BigInt> c_;
};

// Drops every term of degree > r.  r >= -1; truncating at -1 yields zero.
IntPolynomial truncate(const IntPolynomial& p, int r);

// Coefficient reversal within the degree window [0, r]: x^r * p(1/x).
// Throws degree_too_high when deg p > r.
IntPolynomial reverse(const IntPolynomial& p, int r);

// Whether p equals its own reversal in window [0, r].  A polynomial of degree
// above the window is never palindromic in it; zero always is.
bool is_palindrome(const IntPolynomial& p, int r);

bool nonneg(const IntPolynomial& p);

// Canonical rendering "[c0, c1, ..., ck]"; zero renders "[]".
std::string to_string(const IntPolynomial& p);

}  // namespace bierkit
