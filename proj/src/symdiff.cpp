#include "motzkin/symdiff.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "motzkin/error.hpp"

namespace motzkin {

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients)
    : coefficients_(coefficients.begin(), coefficients.end()) {
  normalize();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients)
    : coefficients_(std::move(coefficients)) {
  normalize();
}

void IntPolynomial::normalize() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

BigInt IntPolynomial::coefficient(std::size_t n) const {
  return n < coefficients_.size() ? coefficients_[n] : BigInt(0);
}

IntPolynomial IntPolynomial::derivative() const {
  if (coefficients_.size() <= 1) return {};
  std::vector<BigInt> c(coefficients_.size() - 1);
  for (std::size_t n = 1; n < coefficients_.size(); ++n) c[n - 1] = coefficients_[n] * n;
  return IntPolynomial(std::move(c));
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coefficients_) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::truncated(std::size_t max_degree) const {
  if (coefficients_.size() <= max_degree + 1) return *this;
  return IntPolynomial(std::vector<BigInt>(coefficients_.begin(),
                                           coefficients_.begin() + max_degree + 1));
}

IntPolynomial IntPolynomial::divided_exactly(const BigInt& divisor) const {
  std::vector<BigInt> c(coefficients_);
  for (auto& v : c) {
    BigInt q, r;
    divide_qr(v, divisor, q, r);
    if (r != 0) throw Error(ErrorCode::Internal, "inexact polynomial division");
    v = std::move(q);
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial operator+(const IntPolynomial& lhs, const IntPolynomial& rhs) {
  const auto& l = lhs.coefficients();
  const auto& r = rhs.coefficients();
  std::vector<BigInt> c(std::max(l.size(), r.size()));
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (n < l.size()) c[n] += l[n];
    if (n < r.size()) c[n] += r[n];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& lhs, const IntPolynomial& rhs) {
  return lhs + BigInt(-1) * rhs;
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  const auto& l = lhs.coefficients();
  const auto& r = rhs.coefficients();
  std::vector<BigInt> c(l.size() + r.size() - 1);
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i] == 0) continue;
    for (std::size_t j = 0; j < r.size(); ++j) c[i + j] += l[i] * r[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const BigInt& k, const IntPolynomial& p) {
  std::vector<BigInt> c(p.coefficients());
  for (auto& v : c) v *= k;
  return IntPolynomial(std::move(c));
}

std::string to_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t n = 0; n < p.coefficients().size(); ++n) {
    const BigInt& c = p.coefficients()[n];
    if (c == 0) continue;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << '-';
    const BigInt mag = abs(c);
    if (n == 0 || mag != 1) out << mag;
    if (n >= 1) out << 'x';
    if (n >= 2) out << '^' << n;
    first = false;
  }
  return out.str();
}

const IntPolynomial& radicand() {
  static const IntPolynomial s{1, -2, -3};
  return s;
}

const IntPolynomial& half_radicand_derivative() {
  static const IntPolynomial t{-1, -3};
  return t;
}

IntPolynomial extension_norm(const SqrtFraction& f) {
  return f.c * f.c - f.d * f.d * radicand();
}

SqrtFraction initial_fraction() { return {{2, -2}, {}, {1, -1}, {1}}; }

SqrtFraction derivative_step(const SqrtFraction& f) {
  const IntPolynomial& s = radicand();
  const IntPolynomial& t = half_radicand_derivative();
  const IntPolynomial da = f.a.derivative();
  const IntPolynomial db = f.b.derivative();
  const IntPolynomial dc = f.c.derivative();
  const IntPolynomial dd = f.d.derivative();

  SqrtFraction next;
  next.a = (da * f.d + db * f.c - f.b * dc - f.a * dd) * s + (f.b * f.c - f.a * f.d) * t;
  next.b = da * f.c - f.a * dc + (db * f.d - f.b * dd) * s;
  next.c = BigInt(2) * f.c * f.d * s;
  next.d = f.c * f.c + f.d * f.d * s;

  if (next.c.eval_at_zero() + next.d.eval_at_zero() == 0) {
    throw Error(ErrorCode::Degenerate, "derivative denominator vanishes at 0");
  }
  return next;
}

SqrtFraction content_reduce(const SqrtFraction& f) {
  BigInt g = 0;
  for (const IntPolynomial* p : {&f.a, &f.b, &f.c, &f.d}) {
    g = gcd(g, p->content());
    if (g == 1) return f;
  }
  if (g == 0) return f;
  return {f.a.divided_exactly(g), f.b.divided_exactly(g), f.c.divided_exactly(g),
          f.d.divided_exactly(g)};
}

SqrtFraction truncate(const SqrtFraction& f, std::size_t max_degree) {
  return {f.a.truncated(max_degree), f.b.truncated(max_degree), f.c.truncated(max_degree),
          f.d.truncated(max_degree)};
}

BigRat evaluate_at_zero(const SqrtFraction& f) {
  const BigInt den = f.c.eval_at_zero() + f.d.eval_at_zero();
  if (den == 0) throw Error(ErrorCode::ZeroDenominator, "c(0) + d(0) = 0");
  return BigRat(f.a.eval_at_zero() + f.b.eval_at_zero()) / BigRat(den);
}

DerivativeCursor::DerivativeCursor(SqrtFraction initial)
    : DerivativeCursor(std::move(initial), Options{}) {}

DerivativeCursor::DerivativeCursor(SqrtFraction initial, Options options)
    : current_(std::move(initial)), options_(options) {
  if (options_.horizon) current_ = truncate(current_, *options_.horizon);
  if (options_.reduce) current_ = content_reduce(current_);
}

void DerivativeCursor::advance() {
  if (options_.horizon && pass_ >= *options_.horizon) {
    throw std::logic_error("DerivativeCursor: advanced past horizon " +
                           std::to_string(*options_.horizon));
  }
  current_ = derivative_step(current_);
  ++pass_;
  if (options_.horizon) current_ = truncate(current_, *options_.horizon - pass_);
  if (options_.reduce) current_ = content_reduce(current_);
}

namespace {

BigNat coefficient_from_derivative(std::size_t k, const BigRat& derivative_at_zero) {
  BigRat value = derivative_at_zero;
  if (k == 0) {
    value -= 1;
  } else if (k == 1) {
    value += 1;
  } else {
    BigInt factorial = 1;
    for (std::size_t i = 2; i <= k; ++i) factorial *= i;
    value /= factorial;
  }
  if (!is_integral(value) || value < 0) {
    std::ostringstream msg;
    msg << "U_" << k << " came out as " << value;
    throw Error(ErrorCode::Internal, msg.str());
  }
  return numerator(value);
}

}  // namespace

BigNat nat_coefficient(std::size_t k, bool reduce) {
  DerivativeCursor cursor(initial_fraction(), {.horizon = k, .reduce = reduce});
  while (cursor.pass() < k) cursor.advance();
  return coefficient_from_derivative(k, cursor.value_at_zero());
}

std::vector<BigNat> nat_coefficients(std::size_t k_max, bool reduce) {
  DerivativeCursor cursor(initial_fraction(), {.horizon = k_max, .reduce = reduce});
  std::vector<BigNat> out;
  out.reserve(k_max + 1);
  out.push_back(coefficient_from_derivative(0, cursor.value_at_zero()));
  while (cursor.pass() < k_max) {
    cursor.advance();
    out.push_back(coefficient_from_derivative(cursor.pass(), cursor.value_at_zero()));
  }
  return out;
}

}  // namespace motzkin
