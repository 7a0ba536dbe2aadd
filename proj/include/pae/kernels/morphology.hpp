#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

// Pixel kernels behind ingest::preprocess_raster. Each kernel has a plain
// serial reference and an OpenMP version; the two must agree bit-for-bit.
namespace pae::kernels {

// Integer luma: round(0.299 R + 0.587 G + 0.114 B), half up.
inline std::uint8_t luma(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  return static_cast<std::uint8_t>((299u * r + 587u * g + 114u * b + 500u) / 1000u);
}

void grayscale_serial(std::span<const std::uint8_t> rgb, std::span<std::uint8_t> gray);
void grayscale(std::span<const std::uint8_t> rgb, std::span<std::uint8_t> gray);

// Dilation minus erosion with a (2*radius+1)^2 square element, windows
// clipped at the image border. `iterations` applies dilation and erosion
// that many times each before subtracting.
void morph_gradient_serial(std::span<const std::uint8_t> gray, std::size_t width, std::size_t height,
                           std::span<std::uint8_t> out, int radius = 1, int iterations = 1);
void morph_gradient(std::span<const std::uint8_t> gray, std::size_t width, std::size_t height,
                    std::span<std::uint8_t> out, int radius = 1, int iterations = 1);

}  // namespace pae::kernels
