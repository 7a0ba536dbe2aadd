#include "pae/ingest/document.hpp"

#include <filesystem>

#include "pae/error.hpp"
#include "pae/ingest/pdf_file.hpp"
#include "pae/util/strings.hpp"

namespace pae::ingest {

ExtractedImage make_image(std::vector<std::uint8_t> bytes, ImageFormat format, std::size_t width,
                          std::size_t height, std::size_t page_index) {
  ExtractedImage img;
  img.content_hash = util::sha256(bytes);
  img.bytes = std::move(bytes);
  img.format = format;
  img.width = width;
  img.height = height;
  img.page_index = page_index;
  return img;
}

Document load_document_from_memory(std::string bytes, std::string source_name) {
  if (bytes.empty()) throw Error(ErrorCode::NotAPdf, source_name + " is empty");
  Document doc;
  doc.source_path = std::move(source_name);
  doc.file = pdf::File::parse(std::move(bytes));
  const auto& nodes = doc.file->pages();
  doc.page_count = nodes.size();
  doc.pages.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    Page p;
    p.index = i;
    p.width_pt = nodes[i].media_box.width();
    p.height_pt = nodes[i].media_box.height();
    doc.pages.push_back(std::move(p));
  }
  return doc;
}

Document load_document(const std::string& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) throw Error(ErrorCode::FileNotFound, path);
  return load_document_from_memory(util::read_file(path), path);
}

const char* mime_type(ImageFormat format) {
  switch (format) {
    case ImageFormat::Jpeg: return "image/jpeg";
    case ImageFormat::Png: return "image/png";
    case ImageFormat::Tiff: return "image/tiff";
    case ImageFormat::Other: break;
  }
  return "application/octet-stream";
}

const char* to_string(ImageFormat format) {
  switch (format) {
    case ImageFormat::Jpeg: return "jpeg";
    case ImageFormat::Png: return "png";
    case ImageFormat::Tiff: return "tiff";
    case ImageFormat::Other: break;
  }
  return "other";
}

}  // namespace pae::ingest
