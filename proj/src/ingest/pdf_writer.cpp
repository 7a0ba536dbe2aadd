#include "pae/ingest/pdf_writer.hpp"

#include <zlib.h>

#include <cstdio>
#include <sstream>

#include "pae/error.hpp"
#include "pae/ingest/encoding.hpp"

namespace pae::ingest {

namespace {

std::string deflate_bytes(const std::string& in) {
  uLongf len = compressBound(static_cast<uLong>(in.size()));
  std::string out(len, '\0');
  if (compress2(reinterpret_cast<Bytef*>(out.data()), &len, reinterpret_cast<const Bytef*>(in.data()),
                static_cast<uLong>(in.size()), 6) != Z_OK)
    throw Error(ErrorCode::IoError, "zlib compress failed");
  out.resize(len);
  return out;
}

std::string pdf_literal(std::string_view utf8) {
  std::string out = "(";
  for (char c : utf8_to_winansi(utf8)) {
    if (c == '(' || c == ')' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back(')');
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  std::string s = buf;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

class ObjectWriter {
 public:
  int reserve() {
    offsets_.push_back(0);
    return static_cast<int>(offsets_.size());
  }

  void put(int id, const std::string& body) {
    offsets_[static_cast<std::size_t>(id - 1)] = out_.size();
    out_ += std::to_string(id) + " 0 obj\n" + body + "\nendobj\n";
  }

  void put_stream(int id, const std::string& dict_entries, const std::string& data) {
    put(id, "<< " + dict_entries + " /Length " + std::to_string(data.size()) + " >>\nstream\n" + data +
                "\nendstream");
  }

  std::string finish(int root) {
    const std::size_t xref = out_.size();
    out_ += "xref\n0 " + std::to_string(offsets_.size() + 1) + "\n0000000000 65535 f \n";
    char line[32];
    for (auto off : offsets_) {
      std::snprintf(line, sizeof(line), "%010zu 00000 n \n", off);
      out_ += line;
    }
    out_ += "trailer\n<< /Size " + std::to_string(offsets_.size() + 1) + " /Root " + std::to_string(root) +
            " 0 R >>\nstartxref\n" + std::to_string(xref) + "\n%%EOF\n";
    return std::move(out_);
  }

  std::string out_ = "%PDF-1.4\n%\xE2\xE3\xCF\xD3\n";

 private:
  std::vector<std::size_t> offsets_;
};

}  // namespace

std::string write_pdf(const std::vector<PdfPageSpec>& pages) {
  ObjectWriter w;
  const int catalog = w.reserve();
  const int page_tree = w.reserve();
  const int font = w.reserve();
  std::vector<int> page_ids;
  std::vector<std::string> bodies;

  w.put(catalog, "<< /Type /Catalog /Pages " + std::to_string(page_tree) + " 0 R >>");
  w.put(font, "<< /Type /Font /Subtype /Type1 /BaseFont /Helvetica /Encoding /WinAnsiEncoding >>");

  for (const auto& page : pages) {
    const int page_id = w.reserve();
    const int content_id = w.reserve();
    page_ids.push_back(page_id);
    std::string xobjects;
    std::ostringstream content;
    for (std::size_t i = 0; i < page.images.size(); ++i) {
      const auto& img = page.images[i];
      const int img_id = w.reserve();
      const std::string name = "Im" + std::to_string(i + 1);
      xobjects += "/" + name + " " + std::to_string(img_id) + " 0 R ";
      std::string dict = "/Type /XObject /Subtype /Image /Width " + std::to_string(img.width) + " /Height " +
                         std::to_string(img.height) + " /BitsPerComponent 8 /ColorSpace " +
                         (img.channels == 1 ? "/DeviceGray" : "/DeviceRGB");
      std::string data;
      if (!img.jpeg.empty()) {
        dict += " /Filter /DCTDecode";
        data.assign(img.jpeg.begin(), img.jpeg.end());
      } else {
        if (img.pixels.size() != img.width * img.height * static_cast<std::size_t>(img.channels))
          throw Error(ErrorCode::PreconditionViolation, "image pixel buffer does not match its dimensions");
        dict += " /Filter /FlateDecode";
        data = deflate_bytes(std::string(img.pixels.begin(), img.pixels.end()));
      }
      if (img.corrupt)
        for (std::size_t k = 2; k < data.size(); k += 3) data[k] = static_cast<char>(data[k] ^ 0x5A);
      w.put_stream(img_id, dict, data);
      content << "q " << num(img.draw_width) << " 0 0 " << num(img.draw_height) << ' ' << num(img.left) << ' '
              << num(page.height - img.top - img.draw_height) << " cm /" << name << " Do Q\n";
    }
    for (const auto& block : page.text) {
      content << "BT /F1 " << num(block.font_size) << " Tf " << num(block.leading) << " TL " << num(block.left)
              << ' ' << num(page.height - block.top) << " Td\n";
      for (std::size_t l = 0; l < block.lines.size(); ++l) {
        if (l) content << "T* ";
        content << pdf_literal(block.lines[l]) << " Tj\n";
      }
      content << "ET\n";
    }
    w.put_stream(content_id, "/Filter /FlateDecode", deflate_bytes(content.str()));
    w.put(page_id, "<< /Type /Page /Parent " + std::to_string(page_tree) + " 0 R /MediaBox [0 0 " +
                       num(page.width) + " " + num(page.height) + "] /Resources << /Font << /F1 " +
                       std::to_string(font) + " 0 R >> /XObject << " + xobjects + ">> >> /Contents " +
                       std::to_string(content_id) + " 0 R >>");
  }
  std::string kids;
  for (int id : page_ids) kids += std::to_string(id) + " 0 R ";
  w.put(page_tree, "<< /Type /Pages /Kids [" + kids + "] /Count " + std::to_string(page_ids.size()) + " >>");
  return w.finish(catalog);
}

}  // namespace pae::ingest
