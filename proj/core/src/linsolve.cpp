#include "qheun/linsolve.hpp"

#include <utility>

namespace qheun {

std::optional<std::vector<Rational>> solve_linear(RationalMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  if (b.size() != n) return std::nullopt;
  for (const auto& row : a)
    if (row.size() != n) return std::nullopt;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const Rational inv = inverse(a[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      const Rational f = a[r][col] * inv;
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = b[i];
    for (std::size_t k = i + 1; k < n; ++k) acc -= a[i][k] * x[k];
    x[i] = acc / a[i][i];
  }
  return x;
}

}  // namespace qheun
