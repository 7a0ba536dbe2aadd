#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pae::ingest {

// Minimal PDF 1.4 writer for generated documents: Helvetica text blocks and
// Flate-compressed image XObjects. Output is a pure function of the input.
struct PdfTextSpec {
  double left = 72;
  double top = 72;  // first baseline, points below the page's top edge
  double font_size = 11;
  double leading = 14;
  std::vector<std::string> lines;  // UTF-8, encoded as WinAnsi
};

struct PdfImageSpec {
  std::size_t width = 0;
  std::size_t height = 0;
  int channels = 3;  // 1 or 3
  std::vector<std::uint8_t> pixels;
  // Raw JPEG bytes, embedded with DCTDecode instead of `pixels` when set.
  std::vector<std::uint8_t> jpeg;
  double left = 72;
  double top = 72;  // top edge of the drawn image, points below the page top
  double draw_width = 100;
  double draw_height = 100;
  bool corrupt = false;  // garble the compressed stream (for failure tests)
};

struct PdfPageSpec {
  double width = 612;
  double height = 792;
  std::vector<PdfTextSpec> text;
  std::vector<PdfImageSpec> images;
};

std::string write_pdf(const std::vector<PdfPageSpec>& pages);

}  // namespace pae::ingest
