#include "motzkin/series.hpp"

#include <algorithm>
#include <sstream>

#include "motzkin/error.hpp"

namespace motzkin {

TruncatedSeries::TruncatedSeries(std::size_t order) : coefficients_(order + 1, BigRat(0)) {}

TruncatedSeries::TruncatedSeries(std::size_t order, std::vector<BigRat> coefficients)
    : coefficients_(std::move(coefficients)) {
  coefficients_.resize(order + 1, BigRat(0));
}

TruncatedSeries::TruncatedSeries(std::size_t order, std::initializer_list<long long> coefficients)
    : coefficients_(order + 1, BigRat(0)) {
  std::size_t n = 0;
  for (long long c : coefficients) {
    if (n > order) break;
    coefficients_[n++] = c;
  }
}

TruncatedSeries TruncatedSeries::constant(std::size_t order, const BigRat& c) {
  return monomial(order, 0, c);
}

TruncatedSeries TruncatedSeries::monomial(std::size_t order, std::size_t k, const BigRat& c) {
  TruncatedSeries s(order);
  if (k <= order) s.coefficients_[k] = c;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  return TruncatedSeries(order, std::vector<BigRat>(
                                    coefficients_.begin(),
                                    coefficients_.begin() + std::min(order, this->order()) + 1));
}

bool TruncatedSeries::all_integral() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [](const BigRat& c) { return is_integral(c); });
}

TruncatedSeries operator+(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  const std::size_t order = std::min(lhs.order(), rhs.order());
  std::vector<BigRat> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) c[n] = lhs[n] + rhs[n];
  return TruncatedSeries(order, std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& s) { return BigRat(-1) * s; }

TruncatedSeries operator-(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  return lhs + (-rhs);
}

TruncatedSeries operator*(const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
  const std::size_t order = std::min(lhs.order(), rhs.order());
  std::vector<BigRat> c(order + 1, BigRat(0));
  for (std::size_t i = 0; i <= order; ++i) {
    if (lhs[i] == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) c[i + j] += lhs[i] * rhs[j];
  }
  return TruncatedSeries(order, std::move(c));
}

TruncatedSeries operator*(const BigRat& k, const TruncatedSeries& s) {
  std::vector<BigRat> c(s.coefficients());
  for (auto& v : c) v *= k;
  return TruncatedSeries(s.order(), std::move(c));
}

TruncatedSeries series_div(const TruncatedSeries& num, const TruncatedSeries& den) {
  if (den[0] == 0) {
    throw Error(ErrorCode::ZeroConstantTerm, "series_div: denominator vanishes at 0");
  }
  const std::size_t order = std::min(num.order(), den.order());
  std::vector<BigRat> q(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    BigRat acc = num[n];
    for (std::size_t i = 1; i <= n; ++i) acc -= den[i] * q[n - i];
    q[n] = acc / den[0];
  }
  return TruncatedSeries(order, std::move(q));
}

TruncatedSeries series_sqrt(const TruncatedSeries& s) {
  if (s[0] != 1) {
    throw Error(ErrorCode::BadConstantTerm, "series_sqrt: constant term must be 1");
  }
  const std::size_t order = s.order();
  std::vector<BigRat> c(order + 1);
  c[0] = 1;
  for (std::size_t n = 1; n <= order; ++n) {
    BigRat acc = s[n];
    for (std::size_t i = 1; i < n; ++i) acc -= c[i] * c[n - i];
    c[n] = acc / 2;
  }
  return TruncatedSeries(order, std::move(c));
}

TruncatedSeries series_derivative(const TruncatedSeries& s) {
  if (s.order() == 0) return TruncatedSeries(0);
  std::vector<BigRat> c(s.order());
  for (std::size_t n = 1; n <= s.order(); ++n) c[n - 1] = BigRat(static_cast<long long>(n)) * s[n];
  return TruncatedSeries(s.order() - 1, std::move(c));
}

std::string to_string(const TruncatedSeries& s) {
  std::ostringstream out;
  for (std::size_t n = 0; n <= s.order(); ++n) {
    if (n) out << ' ';
    out << s[n];
  }
  return out.str();
}

TruncatedSeries motzkin_radicand(std::size_t order) { return TruncatedSeries(order, {1, -2, -3}); }

namespace {

TruncatedSeries motzkin_functional(std::size_t order) {
  // Coefficient n of 1 + xM + x^2 M^2 depends only on M_0..M_{n-1}.
  std::vector<BigRat> m(order + 1, BigRat(0));
  for (std::size_t n = 0; n <= order; ++n) {
    BigRat c = (n == 0) ? 1 : 0;
    if (n >= 1) c += m[n - 1];
    for (std::size_t i = 0; i + 2 <= n; ++i) c += m[i] * m[n - 2 - i];
    m[n] = c;
  }
  return TruncatedSeries(order, std::move(m));
}

TruncatedSeries motzkin_closed(std::size_t order) {
  const TruncatedSeries root = series_sqrt(motzkin_radicand(order));
  const TruncatedSeries den = TruncatedSeries(order, {1, -1}) + root;
  return series_div(TruncatedSeries::constant(order, 2), den);
}

}  // namespace

TruncatedSeries motzkin_series(std::size_t order, MotzkinMethod method) {
  return method == MotzkinMethod::Functional ? motzkin_functional(order) : motzkin_closed(order);
}

TruncatedSeries nat_series(std::size_t order, NatForm form, MotzkinMethod method) {
  const TruncatedSeries m = motzkin_series(order, method);
  const TruncatedSeries x = TruncatedSeries::monomial(order, 1);
  if (form == NatForm::Product) {
    return x + TruncatedSeries::monomial(order, 2) * m * m;
  }
  return TruncatedSeries(order, {-1, 1}) + TruncatedSeries(order, {1, -1}) * m;
}

}  // namespace motzkin
