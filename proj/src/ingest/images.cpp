#include <set>

#include "image_decode.hpp"
#include "pae/error.hpp"
#include "pae/ingest/content_stream.hpp"
#include "pae/ingest/png.hpp"

namespace pae::ingest {

namespace detail {

namespace {

struct ColorSpace {
  int components = 3;
  std::vector<std::uint8_t> palette;  // Indexed only, base RGB or gray expanded to RGB
  bool cmyk = false;
};

ColorSpace resolve_color_space(const pdf::File& file, const pdf::Object* cs_obj) {
  ColorSpace cs;
  if (!cs_obj) return cs;
  if (auto n = cs_obj->name()) {
    const auto& v = n->value;
    if (v == "DeviceGray" || v == "CalGray" || v == "G") cs.components = 1;
    else if (v == "DeviceCMYK" || v == "CMYK") cs.components = 4, cs.cmyk = true;
    else cs.components = 3;
    return cs;
  }
  const pdf::Array* arr = cs_obj->array();
  if (!arr || arr->empty()) return cs;
  const pdf::Name* family = file.resolve((*arr)[0]).name();
  if (!family) return cs;
  if (family->value == "ICCBased" && arr->size() > 1) {
    const pdf::Object& icc = file.resolve((*arr)[1]);
    if (auto d = icc.dict())
      if (const pdf::Object* n = file.resolve_key(*d, "N")) cs.components = static_cast<int>(n->integer().value_or(3));
    cs.cmyk = cs.components == 4;
    return cs;
  }
  if ((family->value == "Indexed" || family->value == "I") && arr->size() >= 4) {
    const ColorSpace base = resolve_color_space(file, &file.resolve((*arr)[1]));
    const int hival = static_cast<int>(file.resolve((*arr)[2]).integer().value_or(255));
    const pdf::Object& lookup = file.resolve((*arr)[3]);
    std::string table;
    if (auto s = lookup.string()) table = s->bytes;
    else if (auto st = lookup.stream()) table = file.decode(*st).data;
    cs.components = 1;
    for (int i = 0; i <= hival; ++i) {
      std::uint8_t rgb[3] = {0, 0, 0};
      const std::size_t at = static_cast<std::size_t>(i * base.components);
      if (at + static_cast<std::size_t>(base.components) <= table.size()) {
        if (base.components == 1) {
          rgb[0] = rgb[1] = rgb[2] = static_cast<std::uint8_t>(table[at]);
        } else if (base.components >= 3) {
          for (int k = 0; k < 3; ++k) rgb[k] = static_cast<std::uint8_t>(table[at + k]);
        }
      }
      cs.palette.insert(cs.palette.end(), rgb, rgb + 3);
    }
    return cs;
  }
  if (family->value == "CalRGB" || family->value == "Lab") cs.components = 3;
  if (family->value == "CalGray") cs.components = 1;
  return cs;
}

}  // namespace

DecodedImage decode_image(const pdf::File& file, const pdf::Stream& stream, std::size_t page_index) {
  auto get_int = [&](std::string_view key, std::int64_t def) {
    const pdf::Object* o = file.resolve_key(stream.dict, key);
    return o ? o->integer().value_or(def) : def;
  };
  const auto width = get_int("Width", 0);
  const auto height = get_int("Height", 0);
  if (width <= 0 || height <= 0) throw Error(ErrorCode::MalformedContentStream, "image without dimensions");

  pdf::DecodedStream dec = file.decode(stream);
  DecodedImage out;
  std::vector<std::uint8_t> bytes(dec.data.begin(), dec.data.end());
  if (dec.image_filter == "DCTDecode" || dec.image_filter == "DCT") {
    auto size = jpeg_size(bytes);
    if (!size) throw Error(ErrorCode::MalformedContentStream, "JPEG stream has no frame header");
    out.image = make_image(std::move(bytes), ImageFormat::Jpeg, size->width, size->height, page_index);
    return out;
  }
  if (dec.image_filter == "CCITTFaxDecode" || dec.image_filter == "CCF") {
    out.image = make_image(std::move(bytes), ImageFormat::Tiff, static_cast<std::size_t>(width),
                           static_cast<std::size_t>(height), page_index);
    return out;
  }
  if (!dec.image_filter.empty()) {
    out.image = make_image(std::move(bytes), ImageFormat::Other, static_cast<std::size_t>(width),
                           static_cast<std::size_t>(height), page_index);
    return out;
  }

  const bool mask = [&] {
    const pdf::Object* m = file.resolve_key(stream.dict, "ImageMask");
    return m && std::holds_alternative<bool>(m->value) && std::get<bool>(m->value);
  }();
  ColorSpace cs = mask ? ColorSpace{1, {}, false} : resolve_color_space(file, file.resolve_key(stream.dict, "ColorSpace"));
  const int bpc = mask ? 1 : static_cast<int>(get_int("BitsPerComponent", 8));
  if (bpc != 1 && bpc != 2 && bpc != 4 && bpc != 8 && bpc != 16)
    throw Error(ErrorCode::MalformedContentStream, "unsupported bits per component");
  const auto w = static_cast<std::size_t>(width), h = static_cast<std::size_t>(height);
  const std::size_t comps = static_cast<std::size_t>(cs.components);
  const std::size_t row_bytes = (w * comps * static_cast<std::size_t>(bpc) + 7) / 8;
  if (dec.data.size() < row_bytes * h)
    throw Error(ErrorCode::MalformedContentStream, "image data shorter than Width*Height");

  Pixels px;
  px.width = w;
  px.height = h;
  const bool gray = cs.components == 1 && cs.palette.empty();
  px.channels = gray ? 1 : 3;
  px.data.resize(w * h * static_cast<std::size_t>(px.channels));
  const int max_val = (1 << std::min(bpc, 8)) - 1;
  auto sample = [&](std::size_t y, std::size_t index) -> int {
    const auto* row = reinterpret_cast<const std::uint8_t*>(dec.data.data()) + y * row_bytes;
    if (bpc == 8) return row[index];
    if (bpc == 16) return row[2 * index];
    const std::size_t bit = index * static_cast<std::size_t>(bpc);
    return (row[bit / 8] >> (8 - bpc - static_cast<int>(bit % 8))) & max_val;
  };
  auto scale = [&](int v) { return static_cast<std::uint8_t>(bpc >= 8 ? v : v * 255 / max_val); };
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      std::uint8_t* dst = &px.data[(y * w + x) * static_cast<std::size_t>(px.channels)];
      if (!cs.palette.empty()) {
        const auto idx = static_cast<std::size_t>(sample(y, x));
        for (int k = 0; k < 3; ++k) dst[k] = 3 * idx + 2 < cs.palette.size() ? cs.palette[3 * idx + k] : 0;
      } else if (gray) {
        int v = scale(sample(y, x));
        if (mask) v = v ? 255 : 0;
        dst[0] = static_cast<std::uint8_t>(v);
      } else if (cs.cmyk) {
        const int c = scale(sample(y, x * 4)), m = scale(sample(y, x * 4 + 1)), yy = scale(sample(y, x * 4 + 2)),
                  k = scale(sample(y, x * 4 + 3));
        dst[0] = static_cast<std::uint8_t>(255 - std::min(255, c + k));
        dst[1] = static_cast<std::uint8_t>(255 - std::min(255, m + k));
        dst[2] = static_cast<std::uint8_t>(255 - std::min(255, yy + k));
      } else {
        for (std::size_t k = 0; k < 3; ++k) dst[k] = k < comps ? scale(sample(y, x * comps + k)) : 0;
      }
    }
  }
  out.image = make_image(encode_png(px.data, w, h, px.channels), ImageFormat::Png, w, h, page_index);
  out.pixels = std::move(px);
  return out;
}

}  // namespace detail

namespace {

class ImageCollector final : public pdf::ContentVisitor {
 public:
  void image(const pdf::ImagePlacement& p) override {
    if (p.ref) {
      if (!seen_refs_.insert(*p.ref).second) return;
    } else if (!seen_direct_.insert(p.stream).second) {
      return;
    }
    placements.push_back(p);
  }
  std::vector<pdf::ImagePlacement> placements;

 private:
  std::set<pdf::Ref> seen_refs_;
  std::set<const pdf::Stream*> seen_direct_;
};

}  // namespace

std::vector<ExtractedImage> extract_images(const Document& doc, std::size_t page_index,
                                           std::vector<std::string>* warnings) {
  if (page_index >= doc.page_count)
    throw Error(ErrorCode::PageOutOfRange, "page " + std::to_string(page_index) + " of " + std::to_string(doc.page_count));
  std::vector<std::string> local;
  std::vector<std::string>& warn = warnings ? *warnings : local;
  ImageCollector collector;
  pdf::interpret_page(*doc.file, doc.file->pages()[page_index], collector, warn);
  std::vector<ExtractedImage> out;
  for (const auto& p : collector.placements) {
    try {
      out.push_back(detail::decode_image(*doc.file, *p.stream, page_index).image);
    } catch (const Error& e) {
      warn.push_back("page " + std::to_string(page_index) + " image " + p.name + " skipped: " + e.what());
    }
  }
  return out;
}

}  // namespace pae::ingest
