#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace pae::ingest {

// 8-bit grayscale (channels = 1) or RGB (channels = 3), no interlace,
// filter type 0 on every row.
std::vector<std::uint8_t> encode_png(std::span<const std::uint8_t> pixels, std::size_t width, std::size_t height,
                                     int channels);

struct ImageSize {
  std::size_t width = 0;
  std::size_t height = 0;
};

std::optional<ImageSize> png_size(std::span<const std::uint8_t> bytes);
std::optional<ImageSize> jpeg_size(std::span<const std::uint8_t> bytes);

}  // namespace pae::ingest
