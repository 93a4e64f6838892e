#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "motzkin/error.hpp"
#include "motzkin/numbers.hpp"
#include "motzkin/series.hpp"
#include "motzkin/symdiff.hpp"

using namespace motzkin;

namespace {

IntPolynomial random_poly(std::mt19937_64& rng, int max_degree, int bound) {
  std::uniform_int_distribution<int> deg(-1, max_degree);
  std::uniform_int_distribution<int> coef(-bound, bound);
  std::vector<BigInt> c(deg(rng) + 1);
  for (auto& v : c) v = coef(rng);
  return IntPolynomial(std::move(c));
}

// Random fraction with c(0) + d(0) != 0, scaled by a random common factor so
// that content_reduce has something to remove.
SqrtFraction random_fraction(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> scale(1, 12);
  for (;;) {
    SqrtFraction f{random_poly(rng, 4, 9), random_poly(rng, 4, 9), random_poly(rng, 4, 9),
                   random_poly(rng, 4, 9)};
    if (f.c.eval_at_zero() + f.d.eval_at_zero() == 0) continue;
    const BigInt k = scale(rng);
    return {k * f.a, k * f.b, k * f.c, k * f.d};
  }
}

TruncatedSeries as_series(const IntPolynomial& p, std::size_t order) {
  std::vector<BigRat> c;
  for (const auto& v : p.coefficients()) c.emplace_back(v);
  return TruncatedSeries(order, std::move(c));
}

// Expands the fraction at 0 using the series square root of s; independent of
// the derivative cycle.
TruncatedSeries fraction_series(const SqrtFraction& f, std::size_t order) {
  const auto root = series_sqrt(motzkin_radicand(order));
  return series_div(as_series(f.a, order) + as_series(f.b, order) * root,
                    as_series(f.c, order) + as_series(f.d, order) * root);
}

}  // namespace

TEST_CASE("polynomial operations") {
  const IntPolynomial s = radicand();
  CHECK(s == IntPolynomial{1, -2, -3});
  CHECK(s.derivative() == IntPolynomial{-2, -6});
  CHECK(half_radicand_derivative() == IntPolynomial{-1, -3});
  CHECK(BigInt(2) * half_radicand_derivative() == s.derivative());
  CHECK((IntPolynomial{} * s).is_zero());
  CHECK(IntPolynomial{2, -2}.eval_at_zero() == 2);
  CHECK(IntPolynomial{7}.derivative().is_zero());
  CHECK(IntPolynomial{0, 0, 0}.is_zero());
  CHECK(IntPolynomial{0, 0, 0}.degree() == -1);
  CHECK(IntPolynomial{1, -1} * IntPolynomial{1, 1} == IntPolynomial{1, 0, -1});
  CHECK(IntPolynomial{1, 2} - IntPolynomial{1, 2} == IntPolynomial{});
  CHECK(IntPolynomial{4, -6, 8}.content() == 2);
  CHECK(IntPolynomial{1, 2, 3, 4}.truncated(1) == IntPolynomial{1, 2});
  CHECK(to_string(IntPolynomial{2, -6, -2, 6}) == "2 - 6x - 2x^2 + 6x^3");
}

TEST_CASE("initial fraction") {
  const SqrtFraction f = initial_fraction();
  CHECK(f.a == IntPolynomial{2, -2});
  CHECK(f.b.is_zero());
  CHECK(f.c == IntPolynomial{1, -1});
  CHECK(f.d == IntPolynomial{1});
  CHECK(evaluate_at_zero(f) == 1);
  CHECK(evaluate_at_zero(f) - 1 == 0);
  CHECK(extension_norm(f) == IntPolynomial{0, 0, 4});
}

TEST_CASE("first derivative step") {
  const SqrtFraction g = derivative_step(initial_fraction());
  CHECK(g.a == IntPolynomial{0, 8});
  CHECK(g.b.is_zero());
  // 2(1 - x)(1 - 2x - 3x^2)
  CHECK(g.c == IntPolynomial{2, -6, -2, 6});
  CHECK(g.d == IntPolynomial{2, -4, -2});
  CHECK(evaluate_at_zero(g) == 0);
  CHECK(evaluate_at_zero(g) + 1 == 1);
}

TEST_CASE("derivative of a constant fraction") {
  const SqrtFraction one{{1}, {}, {1}, {}};
  const SqrtFraction g = derivative_step(one);
  CHECK(g.a.is_zero());
  CHECK(g.b.is_zero());
  CHECK(g.c.is_zero());
  CHECK(g.d == IntPolynomial{1});
}

TEST_CASE("derivative_step reports a degenerate denominator") {
  const SqrtFraction bad{{1}, {}, {1}, {-1}};
  try {
    derivative_step(bad);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Degenerate);
  }
}

TEST_CASE("derivative_step agrees with the series derivative") {
  // Two symbolic steps and beyond, checked against expansion via series_sqrt.
  constexpr std::size_t order = 12;
  DerivativeCursor cursor(initial_fraction(), {.horizon = std::nullopt, .reduce = true});
  TruncatedSeries expected = fraction_series(initial_fraction(), order);
  for (std::size_t k = 1; k <= 5; ++k) {
    cursor.advance();
    expected = series_derivative(expected);
    CAPTURE(k);
    CHECK(fraction_series(cursor.current(), order - k) == expected);
    CHECK(extension_norm(cursor.current()).degree() >= 0);
  }
}

TEST_CASE("Taylor coefficients of the fraction match nat_coefficient") {
  const auto f = fraction_series(initial_fraction(), 8);
  const auto nat = f + TruncatedSeries(8, {-1, 1});
  CHECK(nat == nat_series(8));
  for (std::size_t k = 0; k <= 8; ++k) CHECK(nat[k] == BigRat(nat_coefficient(k)));
}

TEST_CASE("content_reduce") {
  const SqrtFraction f{{0, 4}, {}, {2, -2}, {2}};
  CHECK(content_reduce(f) == SqrtFraction{{0, 2}, {}, {1, -1}, {1}});
  CHECK(content_reduce(initial_fraction()) == initial_fraction());
  const SqrtFraction coprime{{3, 1}, {2}, {1, -1}, {1}};
  CHECK(content_reduce(coprime) == coprime);
}

TEST_CASE("content_reduce preserves the value at 0 on random fractions") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const SqrtFraction f = random_fraction(rng);
    const SqrtFraction g = content_reduce(f);
    REQUIRE(evaluate_at_zero(g) == evaluate_at_zero(f));
    REQUIRE(fraction_series(g, 6) == fraction_series(f, 6));
  }
}

TEST_CASE("evaluate_at_zero") {
  CHECK(evaluate_at_zero(SqrtFraction{{3}, {1}, {2}, {}}) == 2);
  CHECK(evaluate_at_zero(SqrtFraction{{1}, {}, {3}, {}}) == BigRat(1, 3));
  try {
    evaluate_at_zero(SqrtFraction{{1}, {}, {1}, {-1}});
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZeroDenominator);
  }
}

TEST_CASE("nat_coefficient") {
  CHECK(nat_coefficient(0) == 0);
  CHECK(nat_coefficient(1) == 1);
  CHECK(nat_coefficient(12) == 9713);
  CHECK(nat_coefficient(14) == 71799);
}

TEST_CASE("derivative cycle equals the difference table through 40") {
  const auto u = difference_numbers(40);
  CHECK(nat_coefficients(40) == u.values);
  for (std::size_t k = 0; k <= 40; ++k) {
    CAPTURE(k);
    CHECK(nat_coefficient(k) == u[k]);
  }
  CHECK(nat_coefficients(64) == difference_numbers(64).values);
}

TEST_CASE("reduction does not change coefficients") {
  const auto reduced = nat_coefficients(14, true);
  CHECK(nat_coefficients(14, false) == reduced);
  for (std::size_t k = 0; k <= 10; ++k) CHECK(nat_coefficient(k, false) == reduced[k]);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const SqrtFraction f = random_fraction(rng);
    DerivativeCursor with(f, {.horizon = 6, .reduce = true});
    DerivativeCursor without(f, {.horizon = 6, .reduce = false});
    REQUIRE(with.value_at_zero() == without.value_at_zero());
    while (with.pass() < 6) {
      with.advance();
      without.advance();
      REQUIRE(with.value_at_zero() == without.value_at_zero());
    }
  }
}

TEST_CASE("truncated cursor matches the exact cycle") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const SqrtFraction f = random_fraction(rng);
    DerivativeCursor exact(f);
    DerivativeCursor jet(f, {.horizon = 4, .reduce = true});
    CHECK(exact.value_at_zero() == jet.value_at_zero());
    while (jet.pass() < 4) {
      exact.advance();
      jet.advance();
      REQUIRE(exact.value_at_zero() == jet.value_at_zero());
    }
    CHECK_THROWS_AS(jet.advance(), std::logic_error);
  }
}

TEST_CASE("degree growth") {
  // Without truncation the quotient rule squares the denominator each pass.
  DerivativeCursor exact(initial_fraction());
  for (std::size_t k = 1; k <= 6; ++k) {
    exact.advance();
    CHECK(exact.current().c.degree() == (1L << (k + 1)) - 1);
  }
  // With a horizon every component stays inside the remaining jet.
  constexpr std::size_t horizon = 30;
  DerivativeCursor jet(initial_fraction(), {.horizon = horizon, .reduce = true});
  while (jet.pass() < horizon) {
    jet.advance();
    const long bound = static_cast<long>(horizon - jet.pass());
    const SqrtFraction& f = jet.current();
    CHECK(f.a.degree() <= bound);
    CHECK(f.b.degree() <= bound);
    CHECK(f.c.degree() <= bound);
    CHECK(f.d.degree() <= bound);
  }
}
