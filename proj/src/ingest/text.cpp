#include <algorithm>
#include <cmath>

#include "pae/error.hpp"
#include "pae/ingest/content_stream.hpp"
#include "pae/ingest/document.hpp"
#include "pae/util/strings.hpp"

namespace pae::ingest {

namespace {

class TextCollector final : public pdf::ContentVisitor {
 public:
  TextCollector(const pdf::Rect& box, std::size_t page) : box_(box), page_(page) {}

  void begin_text() override { flush(); }
  void end_text() override { flush(); }

  void text(const pdf::TextRun& run) override {
    if (!open_) {
      open_ = true;
      current_ = TextBlock{};
      current_.page_index = page_;
      current_.top = box_.y1 - run.y;
      current_.left = run.x - box_.x0;
    } else {
      const double size = std::max(run.font_size, 1.0);
      const bool starts_space = !run.text.empty() && run.text.front() == ' ';
      const bool ends_space = !current_.text.empty() && (current_.text.back() == ' ' || current_.text.back() == '\n');
      if (std::abs(run.y - last_y_) > 0.5 * size) {
        current_.text += '\n';
      } else if (run.x - last_end_x_ > 0.2 * size && !starts_space && !ends_space) {
        current_.text += ' ';
      }
    }
    current_.text += run.text;
    last_y_ = run.y;
    last_end_x_ = run.end_x;
  }

  std::vector<TextBlock> finish() {
    flush();
    return std::move(blocks_);
  }

 private:
  void flush() {
    if (!open_) return;
    open_ = false;
    current_.text = util::trim(current_.text);
    if (!current_.text.empty()) blocks_.push_back(std::move(current_));
  }

  pdf::Rect box_;
  std::size_t page_;
  bool open_ = false;
  TextBlock current_;
  double last_y_ = 0;
  double last_end_x_ = 0;
  std::vector<TextBlock> blocks_;
};

}  // namespace

std::vector<TextBlock> extract_text_native(const Document& doc, std::size_t page_index,
                                           std::vector<std::string>* warnings) {
  if (page_index >= doc.page_count)
    throw Error(ErrorCode::PageOutOfRange, "page " + std::to_string(page_index) + " of " + std::to_string(doc.page_count));
  const auto& node = doc.file->pages()[page_index];
  TextCollector collector(node.media_box, page_index);
  std::vector<std::string> local;
  pdf::interpret_page(*doc.file, node, collector, warnings ? *warnings : local);
  auto blocks = collector.finish();
  std::stable_sort(blocks.begin(), blocks.end(), [](const TextBlock& a, const TextBlock& b) {
    const auto ta = std::lround(a.top), tb = std::lround(b.top);
    if (ta != tb) return ta < tb;
    return a.left < b.left;
  });
  return blocks;
}

}  // namespace pae::ingest
