#include "bierkit/polynomial.hpp"

#include <sstream>

#include "bierkit/errors.hpp"

namespace bierkit {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs) {
  c_.reserve(coeffs.size());
  for (long long v : coeffs) c_.emplace_back(v);
  normalize();
}

IntPolynomial IntPolynomial::constant(long long v) {
  IntPolynomial p;
  if (v != 0) p.c_.emplace_back(v);
  return p;
}

IntPolynomial IntPolynomial::monomial(int deg, const BigInt& coeff) {
  require(deg >= 0, errc::bad_parameters, "monomial degree must be nonnegative");
  IntPolynomial p;
  if (coeff != 0) {
    p.c_.assign(static_cast<std::size_t>(deg) + 1, BigInt(0));
    p.c_.back() = coeff;
  }
  return p;
}

BigInt IntPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(i)];
}

void IntPolynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  normalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  IntPolynomial r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.normalize();
  return r;
}

IntPolynomial IntPolynomial::scalar_mul(const BigInt& s) const {
  if (s == 0) return {};
  IntPolynomial r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

IntPolynomial truncate(const IntPolynomial& p, int r) {
  require(r >= -1, errc::bad_parameters, "truncation window must be >= -1");
  if (p.degree() <= r) return p;
  std::vector<BigInt> c(p.coeffs().begin(), p.coeffs().begin() + (r + 1));
  return IntPolynomial(std::move(c));
}

IntPolynomial reverse(const IntPolynomial& p, int r) {
  require(r >= 0, errc::bad_parameters, "reversal window must be >= 0");
  if (p.degree() > r)
    fail(errc::degree_too_high, "degree " + std::to_string(p.degree()) +
                                    " exceeds reversal window " + std::to_string(r));
  if (p.is_zero()) return {};
  std::vector<BigInt> c(static_cast<std::size_t>(r) + 1, BigInt(0));
  for (int i = 0; i <= p.degree(); ++i) c[static_cast<std::size_t>(r - i)] = p.coeff(i);
  return IntPolynomial(std::move(c));
}

bool is_palindrome(const IntPolynomial& p, int r) {
  if (p.is_zero()) return true;
  if (r < 0 || p.degree() > r) return false;
  return p == reverse(p, r);
}

bool nonneg(const IntPolynomial& p) {
  for (const auto& c : p.coeffs())
    if (c < 0) return false;
  return true;
}

std::string to_string(const IntPolynomial& p) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i <= p.degree(); ++i) {
    if (i) os << ", ";
    os << p.coeff(i);
  }
  os << ']';
  return os.str();
}

}  // namespace bierkit
