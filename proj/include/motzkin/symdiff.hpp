#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "motzkin/bigint.hpp"

namespace motzkin {

// Dense univariate polynomial over the integers, constant term first.
// Canonical: no trailing zeros, so the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long long> coefficients);
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  bool is_zero() const noexcept { return coefficients_.empty(); }
  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coefficients_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }
  BigInt coefficient(std::size_t n) const;

  BigInt eval_at_zero() const { return coefficient(0); }
  IntPolynomial derivative() const;
  // gcd of all coefficients; 0 for the zero polynomial.
  BigInt content() const;
  // Drops every term of degree > max_degree.
  IntPolynomial truncated(std::size_t max_degree) const;
  // Exact division of every coefficient by a nonzero integer.
  IntPolynomial divided_exactly(const BigInt& divisor) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void normalize();

  std::vector<BigInt> coefficients_;
};

IntPolynomial operator+(const IntPolynomial& lhs, const IntPolynomial& rhs);
IntPolynomial operator-(const IntPolynomial& lhs, const IntPolynomial& rhs);
IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);
IntPolynomial operator*(const BigInt& k, const IntPolynomial& p);

std::string to_string(const IntPolynomial& p);

// s = 1 - 2x - 3x^2 and t = s'/2 = -1 - 3x.
const IntPolynomial& radicand();
const IntPolynomial& half_radicand_derivative();

// (a + b sqrt(s)) / (c + d sqrt(s)) with s = 1 - 2x - 3x^2.
struct SqrtFraction {
  IntPolynomial a, b, c, d;

  friend bool operator==(const SqrtFraction&, const SqrtFraction&) = default;
};

// c^2 - d^2 s; the fraction is well formed when this is not the zero polynomial.
IntPolynomial extension_norm(const SqrtFraction& f);

// (2 - 2x) / (1 - x + sqrt(s)), i.e. Nat(x) - (x - 1).
SqrtFraction initial_fraction();

/// One derivative of f, keeping the (a + b sqrt s)/(c + d sqrt s) shape:
///   A = (a'd + b'c - bc' - ad') s + (bc - ad) t
///   B = a'c - ac' + (b'd - bd') s
///   C = 2cds
///   D = c^2 + d^2 s
/// which is the quotient rule with numerator and denominator multiplied by
/// sqrt(s) to clear the sqrt(s)^-1 term. Throws DEGENERATE if C(0) + D(0) = 0.
SqrtFraction derivative_step(const SqrtFraction& f);

// Divides a, b, c, d by the gcd of their contents.
SqrtFraction content_reduce(const SqrtFraction& f);

// Drops all terms above max_degree in each component. The represented
// function changes by O(x^(max_degree+1)) since the denominator is a unit at 0.
SqrtFraction truncate(const SqrtFraction& f, std::size_t max_degree);

/// (a(0) + b(0)) / (c(0) + d(0)), using sqrt(s)(0) = 1.
/// Throws ZERO_DENOMINATOR when c(0) + d(0) = 0.
BigRat evaluate_at_zero(const SqrtFraction& f);

// Repeated differentiation of a SqrtFraction.
//
// With no horizon the state after k passes is the exact k-th derivative.
// Its degree roughly doubles per pass (deg C = 2^(k+1) - 1 from the initial
// fraction), so this is only practical for small k.
//
// With a horizon H only the Taylor jet needed to evaluate derivatives at 0
// up to order H is kept: after pass k every component is truncated to degree
// H - k. The value at 0 after pass k is then still exactly f^(k)(0).
class DerivativeCursor {
 public:
  struct Options {
    std::optional<std::size_t> horizon;
    bool reduce = true;
  };

  explicit DerivativeCursor(SqrtFraction initial);
  DerivativeCursor(SqrtFraction initial, Options options);

  const SqrtFraction& current() const noexcept { return current_; }
  std::size_t pass() const noexcept { return pass_; }
  const Options& options() const noexcept { return options_; }

  // Throws std::logic_error past the horizon.
  void advance();

  // f^(pass)(0).
  BigRat value_at_zero() const { return evaluate_at_zero(current_); }

 private:
  SqrtFraction current_;
  std::size_t pass_ = 0;
  Options options_;
};

/// U_k from the derivative cycle: k = 0 and k = 1 add the derivatives of the
/// x - 1 prefix, k >= 2 divides f^(k)(0) by k!. Throws INTERNAL if the result
/// is not a nonnegative integer.
BigNat nat_coefficient(std::size_t k, bool reduce = true);

// U_0..U_{k_max} from a single cursor with horizon k_max.
std::vector<BigNat> nat_coefficients(std::size_t k_max, bool reduce = true);

}  // namespace motzkin
