#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pae/ingest/pdf_object.hpp"

namespace pae::ingest::pdf {

struct Rect {
  double x0 = 0, y0 = 0, x1 = 612, y1 = 792;
  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
};

struct PageNode {
  const Dict* page = nullptr;
  const Dict* resources = nullptr;  // inherited through the page tree; may be null
  Rect media_box;
};

struct DecodedStream {
  std::string data;
  // First filter that was left applied because it is an image codec
  // (DCTDecode, JPXDecode, ...); empty when fully decoded.
  std::string image_filter;
};

// Parsed object table of a PDF file. Objects are located by scanning for
// "N G obj" headers instead of trusting the cross-reference table, which
// also recovers files with stale or broken xref offsets. Immutable after
// parse(), so it can be shared across threads.
class File {
 public:
  static std::shared_ptr<const File> parse(std::string data);

  const Object* get(Ref ref) const;
  // Follows indirect references; returns a null object for dangling refs.
  const Object& resolve(const Object& obj) const;
  const Object* resolve_key(const Dict& dict, std::string_view key) const;

  const Dict& trailer() const { return trailer_; }
  const std::vector<PageNode>& pages() const { return pages_; }

  // Throws Error(MalformedContentStream) on unsupported or corrupt filters.
  DecodedStream decode(const Stream& stream) const;

  std::size_t object_count() const { return objects_.size(); }

 private:
  void scan_objects();
  void expand_object_streams();
  void collect_pages(const Object& node, const Dict* inherited_resources, const Rect* inherited_box,
                     int depth);

  std::string data_;
  std::map<int, Object> objects_;
  Dict trailer_;
  std::vector<PageNode> pages_;
};

}  // namespace pae::ingest::pdf
