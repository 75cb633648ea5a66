#pragma once

// Shared helpers for the test suites: seeded generators and small oracles
// that do not go through the library code paths they are used to check.

#include <random>
#include <vector>

#include "bbmirror/exactalg.hpp"

namespace bbm::testing {

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

inline IntVec random_vec(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  IntVec v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

inline bool is_diagonal(const IntMatrix& d) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  return true;
}

}  // namespace bbm::testing
