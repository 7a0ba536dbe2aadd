#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "pae/ingest/pdf_writer.hpp"

namespace testing {

inline std::string fixture(const std::string& name) { return std::string(PAE_FIXTURE_DIR) + "/" + name; }

// Fresh directory under the system temp dir, removed on destruction.
struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const std::string& tag) {
    std::random_device rd;
    path = std::filesystem::temp_directory_path() / ("pae-test-" + tag + "-" + std::to_string(rd()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

inline pae::ingest::PdfImageSpec solid_image(std::size_t w, std::size_t h, std::uint8_t shade, double left = 72,
                                             double top = 300) {
  pae::ingest::PdfImageSpec img;
  img.width = w;
  img.height = h;
  img.channels = 3;
  img.pixels.assign(w * h * 3, shade);
  for (std::size_t i = 0; i < img.pixels.size(); i += 7) img.pixels[i] = static_cast<std::uint8_t>(shade ^ i);
  img.left = left;
  img.top = top;
  img.draw_width = static_cast<double>(w);
  img.draw_height = static_cast<double>(h);
  return img;
}

inline pae::ingest::PdfTextSpec text_at(double left, double top, std::vector<std::string> lines, double size = 11) {
  pae::ingest::PdfTextSpec t;
  t.left = left;
  t.top = top;
  t.font_size = size;
  t.leading = size * 1.3;
  t.lines = std::move(lines);
  return t;
}

}  // namespace testing
