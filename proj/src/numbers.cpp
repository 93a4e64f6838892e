#include "motzkin/numbers.hpp"

namespace motzkin {

namespace {

// sum_{k=0}^{n-2} M_k M_{n-2-k}, for n >= 2
BigNat pair_convolution(const std::vector<BigNat>& m, std::size_t n) {
  BigNat sum = 0;
  for (std::size_t k = 0; k + 2 <= n; ++k) sum += m[k] * m[n - 2 - k];
  return sum;
}

}  // namespace

MotzkinTable motzkin_numbers(std::size_t n_max) {
  MotzkinTable table;
  table.values.reserve(n_max + 1);
  table.values.emplace_back(1);
  for (std::size_t n = 1; n <= n_max; ++n) {
    table.values.push_back(table.values[n - 1] + pair_convolution(table.values, n));
  }
  return table;
}

DifferenceTable difference_numbers(std::size_t n_max, DifferenceMethod method) {
  const MotzkinTable m = motzkin_numbers(n_max);
  DifferenceTable table;
  table.values.reserve(n_max + 1);
  table.values.emplace_back(0);
  if (n_max >= 1) table.values.emplace_back(1);
  for (std::size_t n = 2; n <= n_max; ++n) {
    if (method == DifferenceMethod::Subtraction) {
      table.values.push_back(m[n] - m[n - 1]);
    } else {
      table.values.push_back(pair_convolution(m.values, n));
    }
  }
  return table;
}

}  // namespace motzkin
