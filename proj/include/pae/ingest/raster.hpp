#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pae/ingest/document.hpp"

namespace pae::ingest {

struct Raster {
  std::size_t width = 0;
  std::size_t height = 0;
  int channels = 1;  // 1 or 3
  std::vector<std::uint8_t> pixels;  // row-major, interleaved
  int dpi = 72;
};

inline constexpr int kDefaultDpi = 200;
inline constexpr int kMinDpi = 72;
inline constexpr int kMaxDpi = 600;

// Renders images (nearest neighbour) and text (solid glyph boxes) onto a
// white RGB canvas of media box * dpi / 72 pixels. Vector paths are not
// painted.
Raster rasterize_page(const Document& doc, std::size_t page_index, int dpi = kDefaultDpi);

struct GradientParams {
  int radius = 1;  // 3x3 square element
  int iterations = 1;
};

// Grayscale conversion followed by morphological gradient; output is
// single-channel with unchanged dimensions.
Raster preprocess_raster(const Raster& raster, GradientParams params = {});
Raster preprocess_raster_serial(const Raster& raster, GradientParams params = {});

}  // namespace pae::ingest
