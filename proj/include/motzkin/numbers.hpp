#pragma once

#include <cstddef>
#include <vector>

#include "motzkin/bigint.hpp"

namespace motzkin {

// M_0..M_n: the number of Motzkin words of each length (OEIS A001006).
struct MotzkinTable {
  std::vector<BigNat> values;

  std::size_t max_index() const { return values.size() - 1; }
  const BigNat& operator[](std::size_t n) const { return values[n]; }
};

// U_0..U_n: the Motzkin difference numbers, i.e. the number of unique words
// of each length. U_0 = 0, U_1 = 1, U_n = M_n - M_{n-1} for n >= 2.
struct DifferenceTable {
  std::vector<BigNat> values;

  std::size_t max_index() const { return values.size() - 1; }
  const BigNat& operator[](std::size_t n) const { return values[n]; }
};

enum class DifferenceMethod { Subtraction, Convolution };

/// Motzkin numbers by the convolution recurrence
///   M_0 = 1,  M_n = M_{n-1} + sum_{k=0}^{n-2} M_k M_{n-2-k}.
MotzkinTable motzkin_numbers(std::size_t n_max);

/// Difference numbers U_0..U_{n_max}. Subtraction uses M_n - M_{n-1};
/// convolution uses sum_{k=0}^{n-2} M_k M_{n-2-k}. Both give the same table.
DifferenceTable difference_numbers(std::size_t n_max,
                                   DifferenceMethod method = DifferenceMethod::Subtraction);

}  // namespace motzkin
