#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "motzkin/numbers.hpp"
#include "motzkin/series.hpp"

namespace motzkin {

struct CensusRow {
  std::size_t length = 0;
  std::size_t all = 0;
  std::size_t unique = 0;
  std::size_t inherited = 0;
};

// Everything the cross-check compares, each produced by its own method.
struct VerifyTables {
  std::size_t max = 0;
  MotzkinTable motzkin;
  DifferenceTable diff_subtraction;
  DifferenceTable diff_convolution;
  TruncatedSeries motzkin_functional{0};
  TruncatedSeries motzkin_closed{0};
  TruncatedSeries nat_product{0};
  TruncatedSeries nat_linear{0};
  std::vector<BigNat> symdiff;
  std::vector<CensusRow> census;
  // Longest length covered by the rank/unrank round trip.
  std::size_t bijection_length = 0;
};

// Lengths beyond these are not enumerated / round-tripped by verify.
inline constexpr std::size_t kVerifyCensusLimit = 14;
inline constexpr std::size_t kVerifyBijectionLimit = 10;

VerifyTables compute_tables(std::size_t max);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<CheckResult> check_tables(const VerifyTables& tables);

// One "PASS name: detail" / "FAIL name: detail" line per check; returns true
// when all passed.
bool print_report(const std::vector<CheckResult>& results, std::ostream& out);

}  // namespace motzkin
