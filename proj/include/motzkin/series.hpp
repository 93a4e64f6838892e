#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "motzkin/bigint.hpp"

namespace motzkin {

// Formal power series sum_{n=0}^{order} c_n x^n with exact rational
// coefficients. Truncation is inclusive: a series of order N carries N+1
// coefficients and everything of degree > N is discarded.
//
// Binary operations take the smaller of the two orders.
class TruncatedSeries {
 public:
  // Zero series of the given order.
  explicit TruncatedSeries(std::size_t order);
  // Coefficients padded with zeros (or truncated) to order + 1 entries.
  TruncatedSeries(std::size_t order, std::vector<BigRat> coefficients);
  TruncatedSeries(std::size_t order, std::initializer_list<long long> coefficients);

  static TruncatedSeries constant(std::size_t order, const BigRat& c);
  // x^k, which is zero when k > order.
  static TruncatedSeries monomial(std::size_t order, std::size_t k, const BigRat& c = 1);

  std::size_t order() const noexcept { return coefficients_.size() - 1; }
  const BigRat& operator[](std::size_t n) const { return coefficients_.at(n); }
  const std::vector<BigRat>& coefficients() const noexcept { return coefficients_; }

  TruncatedSeries truncated(std::size_t order) const;

  bool all_integral() const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<BigRat> coefficients_;
};

TruncatedSeries operator+(const TruncatedSeries& lhs, const TruncatedSeries& rhs);
TruncatedSeries operator-(const TruncatedSeries& lhs, const TruncatedSeries& rhs);
TruncatedSeries operator-(const TruncatedSeries& s);
// Cauchy product truncated at min order.
TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs);
TruncatedSeries operator*(const BigRat& k, const TruncatedSeries& s);

inline TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) { return a + b; }
inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b; }
inline TruncatedSeries series_scale(const BigRat& k, const TruncatedSeries& s) { return k * s; }

/// Quotient q with num = den * q through min order. Throws
/// ZERO_CONSTANT_TERM when den(0) = 0.
TruncatedSeries series_div(const TruncatedSeries& num, const TruncatedSeries& den);

/// Square root with constant term 1, from squaring coefficient by coefficient:
/// c_0 = 1,  c_n = (s_n - sum_{i=1}^{n-1} c_i c_{n-i}) / 2.
/// Throws BAD_CONSTANT_TERM unless s(0) = 1.
TruncatedSeries series_sqrt(const TruncatedSeries& s);

// Formal derivative; the result has order one less (order 0 gives zero).
TruncatedSeries series_derivative(const TruncatedSeries& s);

std::string to_string(const TruncatedSeries& s);

// 1 - 2x - 3x^2, the radicand of the Motzkin closed form.
TruncatedSeries motzkin_radicand(std::size_t order);

enum class MotzkinMethod { Functional, ClosedForm };

/// M(x) = sum M_n x^n. Functional solves M = 1 + xM + x^2 M^2 one coefficient
/// at a time; ClosedForm evaluates 2 / (1 - x + sqrt(1 - 2x - 3x^2)).
/// The other closed form, (1 - x - sqrt(1 - 2x - 3x^2)) / (2x^2), divides by a
/// series with zero constant term and is not used.
TruncatedSeries motzkin_series(std::size_t order, MotzkinMethod method = MotzkinMethod::Functional);

enum class NatForm { Product, Linear };

/// Nat(x) = sum U_n x^n, the generating function of the unique words.
/// Product: x + x^2 M(x)^2.  Linear: x - 1 + (1 - x) M(x).
TruncatedSeries nat_series(std::size_t order, NatForm form = NatForm::Product,
                           MotzkinMethod method = MotzkinMethod::Functional);

}  // namespace motzkin
