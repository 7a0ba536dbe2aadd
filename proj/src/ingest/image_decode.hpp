#pragma once

#include <optional>
#include <string>

#include "pae/ingest/document.hpp"
#include "pae/ingest/pdf_file.hpp"

namespace pae::ingest::detail {

struct Pixels {
  std::size_t width = 0;
  std::size_t height = 0;
  int channels = 3;  // 1 or 3, 8 bits each
  std::vector<std::uint8_t> data;
};

struct DecodedImage {
  ExtractedImage image;         // exported bytes (PNG or pass-through codec)
  std::optional<Pixels> pixels;  // present when samples were decoded
};

// Throws Error(MalformedContentStream) when the stream cannot be decoded.
DecodedImage decode_image(const pdf::File& file, const pdf::Stream& stream, std::size_t page_index);

}  // namespace pae::ingest::detail
