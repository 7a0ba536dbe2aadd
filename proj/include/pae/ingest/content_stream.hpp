#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pae/ingest/pdf_file.hpp"

namespace pae::ingest::pdf {

// Affine matrix [a b c d e f] in PDF row-vector convention.
using Matrix = std::array<double, 6>;

constexpr Matrix kIdentity{1, 0, 0, 1, 0, 0};
Matrix multiply(const Matrix& lhs, const Matrix& rhs);
std::array<double, 2> apply(const Matrix& m, double x, double y);

// One string operand shown by Tj/TJ/'/", positioned in default user space
// (page points, y up).
struct TextRun {
  std::string text;  // UTF-8
  double x = 0;
  double y = 0;
  double end_x = 0;
  double font_size = 0;  // effective size after text and graphics scaling
  std::vector<std::array<double, 2>> glyph_origins;  // one per decoded glyph
  std::vector<bool> glyph_blank;                      // true for the space glyph
  double glyph_width = 0;  // average advance, page units
};

struct ImagePlacement {
  std::string name;
  const Stream* stream = nullptr;
  std::optional<Ref> ref;
  Matrix ctm = kIdentity;  // maps the unit square onto the page
};

class ContentVisitor {
 public:
  virtual ~ContentVisitor() = default;
  virtual void begin_text() {}
  virtual void end_text() {}
  virtual void text(const TextRun&) {}
  virtual void image(const ImagePlacement&) {}
};

// Runs the page's content streams (and nested form XObjects) through the
// visitor. Syntax errors stop interpretation of the offending stream and are
// reported through `warnings`; events already delivered stay delivered.
void interpret_page(const File& file, const PageNode& page, ContentVisitor& visitor,
                    std::vector<std::string>& warnings);

}  // namespace pae::ingest::pdf
