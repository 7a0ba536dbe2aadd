#include "pae/kernels/similarity.hpp"

#include <algorithm>
#include <cmath>

namespace pae::kernels {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double l2_norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

double cosine_unchecked(std::span<const double> a, std::span<const double> b) {
  // One square root of the product keeps cos(v, v) at exactly 1.
  const double c = dot(a, b) / std::sqrt(dot(a, a) * dot(b, b));
  return std::clamp(c, -1.0, 1.0);
}

std::vector<double> cosine_matrix_serial(std::span<const double> rows_a, std::span<const double> rows_b,
                                         std::size_t dim) {
  const std::size_t n = dim ? rows_a.size() / dim : 0;
  const std::size_t m = dim ? rows_b.size() / dim : 0;
  std::vector<double> out(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      out[i * m + j] = cosine_unchecked(rows_a.subspan(i * dim, dim), rows_b.subspan(j * dim, dim));
  return out;
}

std::vector<double> cosine_matrix(std::span<const double> rows_a, std::span<const double> rows_b,
                                  std::size_t dim) {
  const std::size_t n = dim ? rows_a.size() / dim : 0;
  const std::size_t m = dim ? rows_b.size() / dim : 0;
  std::vector<double> out(n * m);
  const auto cells = static_cast<std::ptrdiff_t>(n * m);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < cells; ++c) {
    const auto i = static_cast<std::size_t>(c) / m;
    const auto j = static_cast<std::size_t>(c) % m;
    out[c] = cosine_unchecked(rows_a.subspan(i * dim, dim), rows_b.subspan(j * dim, dim));
  }
  return out;
}

}  // namespace pae::kernels
