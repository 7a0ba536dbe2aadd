#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "pae/util/sha256.hpp"

namespace pae::ingest {

namespace pdf {
class File;
}

enum class TextOrigin { Native, Ocr };

struct TextBlock {
  std::string text;
  std::size_t page_index = 0;
  TextOrigin origin = TextOrigin::Native;
  // Position of the block's first glyph, in points from the page's top-left
  // corner. OCR blocks carry (0, 0).
  double top = 0;
  double left = 0;
};

enum class ImageFormat { Jpeg, Png, Tiff, Other };

struct ExtractedImage {
  std::vector<std::uint8_t> bytes;
  ImageFormat format = ImageFormat::Other;
  std::size_t width = 0;
  std::size_t height = 0;
  std::size_t page_index = 0;
  util::Digest256 content_hash{};
};

ExtractedImage make_image(std::vector<std::uint8_t> bytes, ImageFormat format, std::size_t width,
                          std::size_t height, std::size_t page_index);

struct Page {
  std::size_t index = 0;
  double width_pt = 612;
  double height_pt = 792;
  std::vector<TextBlock> text_blocks;
  std::vector<ExtractedImage> images;
};

// A loaded PDF. Pages carry geometry only until the extract_* calls fill
// a copy; the underlying object table is shared and read-only.
struct Document {
  std::string source_path;
  std::size_t page_count = 0;
  std::vector<Page> pages;
  std::shared_ptr<const pdf::File> file;
};

Document load_document(const std::string& path);
Document load_document_from_memory(std::string bytes, std::string source_name = "<memory>");

// Text blocks in reading order: top to bottom, then left to right.
std::vector<TextBlock> extract_text_native(const Document& doc, std::size_t page_index,
                                           std::vector<std::string>* warnings = nullptr);

// Every image XObject drawn on the page, once per object. Undecodable
// images are skipped with a warning.
std::vector<ExtractedImage> extract_images(const Document& doc, std::size_t page_index,
                                           std::vector<std::string>* warnings = nullptr);

const char* mime_type(ImageFormat format);
const char* to_string(ImageFormat format);

}  // namespace pae::ingest
