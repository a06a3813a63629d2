#pragma once

#include <complex>
#include <vector>

#include "splitcheck/matrix_core.hpp"

inline splitcheck::linalg::ComplexMatrix from_rows(const std::vector<std::complex<double>>& v,
                                                   int n) {
  splitcheck::linalg::ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = v[static_cast<std::size_t>(i * n + j)];
  return m;
}

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::abs(b); }
