#include "motzkin/verify.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "motzkin/symdiff.hpp"
#include "motzkin/words.hpp"

namespace motzkin {

VerifyTables compute_tables(std::size_t max) {
  VerifyTables t;
  t.max = max;
  t.motzkin = motzkin_numbers(max);
  t.diff_subtraction = difference_numbers(max, DifferenceMethod::Subtraction);
  t.diff_convolution = difference_numbers(max, DifferenceMethod::Convolution);
  t.motzkin_functional = motzkin_series(max, MotzkinMethod::Functional);
  t.motzkin_closed = motzkin_series(max, MotzkinMethod::ClosedForm);
  t.nat_product = nat_series(max, NatForm::Product, MotzkinMethod::Functional);
  t.nat_linear = nat_series(max, NatForm::Linear, MotzkinMethod::ClosedForm);
  t.symdiff = nat_coefficients(max);
  for (std::size_t n = 0; n <= std::min(max, kVerifyCensusLimit); ++n) {
    t.census.push_back({n, enumerate(n, WordFilter::All).size(),
                        enumerate(n, WordFilter::Unique).size(),
                        enumerate(n, WordFilter::Inherited).size()});
  }
  t.bijection_length = std::min(max, kVerifyBijectionLimit);
  return t;
}

namespace {

// First index where the integer table and the series coefficients differ.
template <typename Table>
std::string series_mismatch(const Table& table, const TruncatedSeries& s, std::size_t max) {
  if (table.size() != max + 1 || s.order() != max) return "size mismatch";
  for (std::size_t n = 0; n <= max; ++n) {
    if (BigRat(table[n]) != s[n]) {
      std::ostringstream out;
      out << "index " << n << ": " << table[n] << " vs " << s[n];
      return out.str();
    }
  }
  return {};
}

template <typename A, typename B>
std::string table_mismatch(const A& lhs, const B& rhs) {
  if (lhs.size() != rhs.size()) return "size mismatch";
  for (std::size_t n = 0; n < lhs.size(); ++n) {
    if (lhs[n] != rhs[n]) {
      std::ostringstream out;
      out << "index " << n << ": " << lhs[n] << " vs " << rhs[n];
      return out.str();
    }
  }
  return {};
}

CheckResult make(std::string name, const std::string& mismatch, const std::string& ok_detail) {
  return {std::move(name), mismatch.empty(), mismatch.empty() ? ok_detail : mismatch};
}

std::string functional_residual(const TruncatedSeries& m) {
  const std::size_t order = m.order();
  const TruncatedSeries rhs = TruncatedSeries::constant(order, 1) +
                              TruncatedSeries::monomial(order, 1) * m +
                              TruncatedSeries::monomial(order, 2) * m * m;
  const TruncatedSeries residual = rhs - m;
  for (std::size_t n = 0; n <= order; ++n) {
    if (residual[n] != 0) {
      std::ostringstream out;
      out << "residual at x^" << n << " is " << residual[n];
      return out.str();
    }
  }
  return {};
}

std::string bijection_mismatch(std::size_t max_length) {
  if (max_length == 0) return {};
  const DifferenceTable u = difference_numbers(max_length);
  BigNat offset = 0;
  for (std::size_t n = 1; n <= max_length; ++n) {
    const auto words = enumerate(n, WordFilter::Unique);
    if (BigNat(words.size()) != u[n]) return "block " + std::to_string(n) + " has wrong size";
    for (std::size_t i = 0; i < words.size(); ++i) {
      const BigNat index = offset + i;
      if (rank(words[i]) != index) return "rank('" + words[i].text() + "') is off";
      if (unrank(index) != words[i]) return "unrank disagrees with enumerate at '" + words[i].text() + "'";
    }
    offset += u[n];
  }
  return {};
}

}  // namespace

std::vector<CheckResult> check_tables(const VerifyTables& t) {
  std::vector<CheckResult> out;
  const std::string range = "0.." + std::to_string(t.max);
  const auto& m = t.motzkin.values;

  out.push_back(make("diff-subtraction-vs-convolution",
                     table_mismatch(t.diff_subtraction.values, t.diff_convolution.values), range));

  {
    std::string mismatch;
    const auto& u = t.diff_subtraction.values;
    if (m.size() != t.max + 1 || u.size() != t.max + 1) mismatch = "size mismatch";
    for (std::size_t n = 0; mismatch.empty() && n <= t.max; ++n) {
      const BigNat expected = n == 0 ? BigNat(0) : n == 1 ? BigNat(1) : m[n] - m[n - 1];
      if (u[n] != expected) mismatch = "index " + std::to_string(n);
    }
    out.push_back(make("diff-vs-motzkin-recurrence", mismatch, range));
  }

  out.push_back(make("motzkin-recurrence-vs-functional-series",
                     series_mismatch(m, t.motzkin_functional, t.max), range));
  out.push_back(make("motzkin-closed-form-vs-functional-series",
                     table_mismatch(t.motzkin_closed.coefficients(),
                                    t.motzkin_functional.coefficients()),
                     range));
  out.push_back(make("functional-equation-residual",
                     functional_residual(t.motzkin_functional) + functional_residual(t.motzkin_closed),
                     "1 + xM + x^2 M^2 - M = 0 through x^" + std::to_string(t.max)));
  out.push_back(make("nat-product-vs-linear",
                     table_mismatch(t.nat_product.coefficients(), t.nat_linear.coefficients()),
                     range));
  out.push_back(make("nat-series-vs-difference-table",
                     series_mismatch(t.diff_subtraction.values, t.nat_product, t.max), range));
  {
    const bool integral = t.motzkin_functional.all_integral() && t.motzkin_closed.all_integral() &&
                          t.nat_product.all_integral() && t.nat_linear.all_integral();
    out.push_back(make("series-integrality", integral ? "" : "non-integral coefficient", range));
  }
  out.push_back(make("symdiff-vs-difference-table",
                     table_mismatch(t.symdiff, t.diff_subtraction.values), range));

  {
    std::string mismatch;
    for (const CensusRow& row : t.census) {
      const std::size_t n = row.length;
      if (n >= m.size()) {
        mismatch = "census beyond table";
        break;
      }
      const BigNat unique_expected = n == 0 ? BigNat(0) : n == 1 ? BigNat(1) : m[n] - m[n - 1];
      const BigNat inherited_expected = n >= 2 ? m[n - 1] : BigNat(0);
      if (BigNat(row.all) != m[n] || BigNat(row.unique) != unique_expected ||
          BigNat(row.inherited) != inherited_expected) {
        mismatch = "length " + std::to_string(n);
        break;
      }
    }
    const std::string covered =
        t.census.empty() ? "none" : "lengths 0.." + std::to_string(t.census.back().length);
    out.push_back(make("enumeration-census", mismatch, covered));
  }

  out.push_back(make("rank-unrank-bijection", bijection_mismatch(t.bijection_length),
                     "lengths 1.." + std::to_string(t.bijection_length)));
  return out;
}

bool print_report(const std::vector<CheckResult>& results, std::ostream& out) {
  bool all = true;
  for (const auto& r : results) {
    out << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    all = all && r.pass;
  }
  return all;
}

}  // namespace motzkin
