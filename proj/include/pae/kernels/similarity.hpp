#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace pae::kernels {

double dot(std::span<const double> a, std::span<const double> b);
double l2_norm(std::span<const double> a);

// Raw cosine without argument checks; callers validate dims and zero norms.
// The result is clamped to [-1, 1].
double cosine_unchecked(std::span<const double> a, std::span<const double> b);

// Row-major similarity matrix between `rows_a` (n x dim) and `rows_b`
// (m x dim); entry (i, j) is cosine(a_i, b_j).
std::vector<double> cosine_matrix_serial(std::span<const double> rows_a, std::span<const double> rows_b,
                                         std::size_t dim);
std::vector<double> cosine_matrix(std::span<const double> rows_a, std::span<const double> rows_b,
                                  std::size_t dim);

}  // namespace pae::kernels
