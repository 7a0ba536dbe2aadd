#include "pae/kernels/morphology.hpp"

#include <algorithm>
#include <vector>

namespace pae::kernels {

namespace {

// Separable max/min filter: horizontal pass then vertical pass. For a square
// element this equals the 2-D window extremum.
template <typename Pick>
void filter_serial(std::span<const std::uint8_t> in, std::size_t w, std::size_t h, int r,
                   std::span<std::uint8_t> out, Pick pick) {
  std::vector<std::uint8_t> tmp(in.size());
  const auto rad = static_cast<std::ptrdiff_t>(r);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      const auto lo = static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, static_cast<std::ptrdiff_t>(x) - rad));
      const auto hi = std::min(w - 1, x + r);
      std::uint8_t v = in[y * w + lo];
      for (std::size_t k = lo + 1; k <= hi; ++k) v = pick(v, in[y * w + k]);
      tmp[y * w + x] = v;
    }
  }
  for (std::size_t y = 0; y < h; ++y) {
    const auto lo = static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, static_cast<std::ptrdiff_t>(y) - rad));
    const auto hi = std::min(h - 1, y + r);
    for (std::size_t x = 0; x < w; ++x) {
      std::uint8_t v = tmp[lo * w + x];
      for (std::size_t k = lo + 1; k <= hi; ++k) v = pick(v, tmp[k * w + x]);
      out[y * w + x] = v;
    }
  }
}

template <typename Pick>
void filter_parallel(std::span<const std::uint8_t> in, std::size_t w, std::size_t h, int r,
                     std::span<std::uint8_t> out, Pick pick) {
  std::vector<std::uint8_t> tmp(in.size());
  const auto rad = static_cast<std::ptrdiff_t>(r);
  const auto rows = static_cast<std::ptrdiff_t>(h);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t yi = 0; yi < rows; ++yi) {
    const auto y = static_cast<std::size_t>(yi);
    for (std::size_t x = 0; x < w; ++x) {
      const auto lo = static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, static_cast<std::ptrdiff_t>(x) - rad));
      const auto hi = std::min(w - 1, x + r);
      std::uint8_t v = in[y * w + lo];
      for (std::size_t k = lo + 1; k <= hi; ++k) v = pick(v, in[y * w + k]);
      tmp[y * w + x] = v;
    }
  }
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t yi = 0; yi < rows; ++yi) {
    const auto y = static_cast<std::size_t>(yi);
    const auto lo = static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, yi - rad));
    const auto hi = std::min(h - 1, y + r);
    for (std::size_t x = 0; x < w; ++x) {
      std::uint8_t v = tmp[lo * w + x];
      for (std::size_t k = lo + 1; k <= hi; ++k) v = pick(v, tmp[k * w + x]);
      out[y * w + x] = v;
    }
  }
}

constexpr auto kMax = [](std::uint8_t a, std::uint8_t b) { return std::max(a, b); };
constexpr auto kMin = [](std::uint8_t a, std::uint8_t b) { return std::min(a, b); };

template <bool Parallel>
void gradient_impl(std::span<const std::uint8_t> gray, std::size_t w, std::size_t h,
                   std::span<std::uint8_t> out, int radius, int iterations) {
  if (w == 0 || h == 0) return;
  std::vector<std::uint8_t> dil(gray.begin(), gray.end());
  std::vector<std::uint8_t> ero(gray.begin(), gray.end());
  std::vector<std::uint8_t> scratch(gray.size());
  for (int i = 0; i < iterations; ++i) {
    if constexpr (Parallel) {
      filter_parallel(dil, w, h, radius, scratch, kMax);
      dil.swap(scratch);
      filter_parallel(ero, w, h, radius, scratch, kMin);
      ero.swap(scratch);
    } else {
      filter_serial(dil, w, h, radius, scratch, kMax);
      dil.swap(scratch);
      filter_serial(ero, w, h, radius, scratch, kMin);
      ero.swap(scratch);
    }
  }
  const auto n = static_cast<std::ptrdiff_t>(gray.size());
  if constexpr (Parallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>(dil[i] - ero[i]);
  } else {
    for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>(dil[i] - ero[i]);
  }
}

}  // namespace

void grayscale_serial(std::span<const std::uint8_t> rgb, std::span<std::uint8_t> gray) {
  for (std::size_t i = 0; i < gray.size(); ++i) gray[i] = luma(rgb[3 * i], rgb[3 * i + 1], rgb[3 * i + 2]);
}

void grayscale(std::span<const std::uint8_t> rgb, std::span<std::uint8_t> gray) {
  const auto n = static_cast<std::ptrdiff_t>(gray.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) gray[i] = luma(rgb[3 * i], rgb[3 * i + 1], rgb[3 * i + 2]);
}

void morph_gradient_serial(std::span<const std::uint8_t> gray, std::size_t width, std::size_t height,
                           std::span<std::uint8_t> out, int radius, int iterations) {
  gradient_impl<false>(gray, width, height, out, radius, iterations);
}

void morph_gradient(std::span<const std::uint8_t> gray, std::size_t width, std::size_t height,
                    std::span<std::uint8_t> out, int radius, int iterations) {
  gradient_impl<true>(gray, width, height, out, radius, iterations);
}

}  // namespace pae::kernels
