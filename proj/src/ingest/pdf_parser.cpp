#include <zlib.h>

#include <algorithm>
#include <cctype>
#include <cstring>

#include "pae/error.hpp"
#include "pae/ingest/pdf_file.hpp"

namespace pae::ingest::pdf {

namespace {

const Object kNull{};

bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::string inflate_bytes(std::string_view in) {
  z_stream zs{};
  if (inflateInit(&zs) != Z_OK) throw Error(ErrorCode::MalformedContentStream, "inflateInit failed");
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(in.data()));
  zs.avail_in = static_cast<uInt>(in.size());
  std::string out;
  char buf[16384];
  int rc = Z_OK;
  while (rc == Z_OK) {
    zs.next_out = reinterpret_cast<Bytef*>(buf);
    zs.avail_out = sizeof(buf);
    rc = inflate(&zs, Z_NO_FLUSH);
    out.append(buf, sizeof(buf) - zs.avail_out);
    if (rc == Z_BUF_ERROR && zs.avail_in == 0) break;
  }
  inflateEnd(&zs);
  if (rc != Z_STREAM_END && !(rc == Z_BUF_ERROR && !out.empty()))
    throw Error(ErrorCode::MalformedContentStream, "corrupt FlateDecode stream");
  return out;
}

std::string ascii_hex_decode(std::string_view in) {
  std::string out;
  int hi = -1;
  for (char c : in) {
    if (c == '>') break;
    int v = std::isxdigit(static_cast<unsigned char>(c)) ? (std::isdigit(static_cast<unsigned char>(c)) ? c - '0' : (std::tolower(c) - 'a' + 10)) : -1;
    if (v < 0) continue;
    if (hi < 0) {
      hi = v;
    } else {
      out.push_back(static_cast<char>(hi * 16 + v));
      hi = -1;
    }
  }
  if (hi >= 0) out.push_back(static_cast<char>(hi * 16));
  return out;
}

std::string ascii85_decode(std::string_view in) {
  std::string out;
  std::uint32_t tuple = 0;
  int count = 0;
  for (std::size_t i = 0; i < in.size(); ++i) {
    const char c = in[i];
    if (c == '~') break;
    if (is_pdf_whitespace(c)) continue;
    if (c == 'z' && count == 0) {
      out.append(4, '\0');
      continue;
    }
    if (c < '!' || c > 'u') throw Error(ErrorCode::MalformedContentStream, "bad ASCII85 character");
    tuple = tuple * 85 + static_cast<std::uint32_t>(c - '!');
    if (++count == 5) {
      for (int k = 3; k >= 0; --k) out.push_back(static_cast<char>((tuple >> (8 * k)) & 0xFF));
      tuple = 0;
      count = 0;
    }
  }
  if (count > 1) {
    for (int k = count; k < 5; ++k) tuple = tuple * 85 + 84;
    for (int k = 0; k < count - 1; ++k) out.push_back(static_cast<char>((tuple >> (8 * (3 - k))) & 0xFF));
  }
  return out;
}

int paeth(int a, int b, int c) {
  const int p = a + b - c;
  const int pa = std::abs(p - a), pb = std::abs(p - b), pc = std::abs(p - c);
  if (pa <= pb && pa <= pc) return a;
  if (pb <= pc) return b;
  return c;
}

std::string undo_predictor(const std::string& in, const Dict* params, const File& file) {
  if (!params) return in;
  auto get_int = [&](std::string_view key, std::int64_t def) {
    const Object* o = file.resolve_key(*params, key);
    auto v = o ? o->integer() : std::nullopt;
    return v ? *v : def;
  };
  const auto predictor = get_int("Predictor", 1);
  if (predictor < 10) {
    if (predictor == 1) return in;
    throw Error(ErrorCode::MalformedContentStream, "unsupported TIFF predictor");
  }
  const auto colors = get_int("Colors", 1);
  const auto bpc = get_int("BitsPerComponent", 8);
  const auto columns = get_int("Columns", 1);
  const std::size_t bpp = static_cast<std::size_t>(std::max<std::int64_t>(1, (colors * bpc + 7) / 8));
  const std::size_t row = static_cast<std::size_t>((colors * bpc * columns + 7) / 8);
  std::string out;
  std::vector<std::uint8_t> prev(row, 0), cur(row);
  for (std::size_t pos = 0; pos + 1 + row <= in.size(); pos += row + 1) {
    const int type = static_cast<std::uint8_t>(in[pos]);
    for (std::size_t i = 0; i < row; ++i) {
      const int x = static_cast<std::uint8_t>(in[pos + 1 + i]);
      const int a = i >= bpp ? cur[i - bpp] : 0;
      const int b = prev[i];
      const int c = i >= bpp ? prev[i - bpp] : 0;
      int v = x;
      switch (type) {
        case 0: break;
        case 1: v = x + a; break;
        case 2: v = x + b; break;
        case 3: v = x + (a + b) / 2; break;
        case 4: v = x + paeth(a, b, c); break;
        default: throw Error(ErrorCode::MalformedContentStream, "bad PNG predictor row type");
      }
      cur[i] = static_cast<std::uint8_t>(v & 0xFF);
    }
    out.append(reinterpret_cast<const char*>(cur.data()), row);
    prev.swap(cur);
  }
  return out;
}

}  // namespace

const Object* File::get(Ref ref) const {
  auto it = objects_.find(ref.num);
  return it == objects_.end() ? nullptr : &it->second;
}

const Object& File::resolve(const Object& obj) const {
  const Object* cur = &obj;
  for (int depth = 0; depth < 32; ++depth) {
    const Ref* r = cur->ref();
    if (!r) return *cur;
    cur = get(*r);
    if (!cur) return kNull;
  }
  return kNull;
}

const Object* File::resolve_key(const Dict& dict, std::string_view key) const {
  const Object* o = dict.find(key);
  if (!o) return nullptr;
  const Object& r = resolve(*o);
  return r.is_null() ? nullptr : &r;
}

DecodedStream File::decode(const Stream& stream) const {
  DecodedStream out;
  out.data = stream.data;
  std::vector<std::string> filters;
  std::vector<const Dict*> params;
  if (const Object* f = resolve_key(stream.dict, "Filter")) {
    if (auto n = f->name()) {
      filters.push_back(n->value);
    } else if (auto a = f->array()) {
      for (const auto& item : *a)
        if (auto n = resolve(item).name()) filters.push_back(n->value);
    }
  }
  if (const Object* p = resolve_key(stream.dict, "DecodeParms")) {
    if (auto d = p->dict()) {
      params.push_back(d);
    } else if (auto a = p->array()) {
      for (const auto& item : *a) params.push_back(resolve(item).dict());
    }
  }
  for (std::size_t i = 0; i < filters.size(); ++i) {
    const std::string& f = filters[i];
    const Dict* param = i < params.size() ? params[i] : nullptr;
    if (f == "FlateDecode" || f == "Fl") {
      out.data = undo_predictor(inflate_bytes(out.data), param, *this);
    } else if (f == "ASCIIHexDecode" || f == "AHx") {
      out.data = ascii_hex_decode(out.data);
    } else if (f == "ASCII85Decode" || f == "A85") {
      out.data = ascii85_decode(out.data);
    } else if (f == "DCTDecode" || f == "DCT" || f == "JPXDecode" || f == "CCITTFaxDecode" ||
               f == "CCF" || f == "JBIG2Decode") {
      out.image_filter = f;
      return out;
    } else {
      throw Error(ErrorCode::MalformedContentStream, "unsupported filter " + f);
    }
  }
  return out;
}

std::shared_ptr<const File> File::parse(std::string data) {
  const auto header = data.substr(0, std::min<std::size_t>(1024, data.size())).find("%PDF-");
  if (header == std::string::npos) throw Error(ErrorCode::NotAPdf, "missing %PDF- header");
  auto file = std::shared_ptr<File>(new File());
  file->data_ = std::move(data);
  file->scan_objects();
  file->expand_object_streams();
  if (file->trailer_.contains("Encrypt"))
    throw Error(ErrorCode::EncryptedUnsupported, "encrypted documents are not supported");
  const Object* root = file->resolve_key(file->trailer_, "Root");
  if (!root || !root->dict()) throw Error(ErrorCode::NotAPdf, "no document catalog");
  const Object* pages = file->resolve_key(*root->dict(), "Pages");
  if (!pages || !pages->dict()) throw Error(ErrorCode::NotAPdf, "no page tree");
  file->collect_pages(*pages, nullptr, nullptr, 0);
  return file;
}

void File::scan_objects() {
  const std::string_view d = data_;
  std::vector<std::pair<std::size_t, Dict>> trailers;
  std::size_t pos = 0;
  std::size_t t = d.find("trailer");
  for (;;) {
    const std::size_t k = d.find("obj", pos);
    if (t != std::string_view::npos && t < pos) t = d.find("trailer", pos);
    if (t != std::string_view::npos && (k == std::string_view::npos || t < k)) {
      Lexer lex(d, t + 7);
      try {
        Object o = lex.parse_object();
        if (auto dict = o.dict()) trailers.emplace_back(t, *dict);
        pos = lex.pos();
      } catch (const Error&) {
        pos = t + 7;
      }
      t = d.find("trailer", pos);
      continue;
    }
    if (k == std::string_view::npos) break;
    pos = k + 3;
    if (k + 3 < d.size() && !is_pdf_whitespace(d[k + 3]) && !is_pdf_delimiter(d[k + 3])) continue;
    // Walk back over "num gen ".
    std::size_t p = k;
    auto skip_ws_back = [&] {
      std::size_t n = 0;
      while (p > 0 && is_pdf_whitespace(d[p - 1])) --p, ++n;
      return n;
    };
    auto digits_back = [&] {
      const std::size_t end = p;
      while (p > 0 && is_digit(d[p - 1])) --p;
      return d.substr(p, end - p);
    };
    if (skip_ws_back() == 0) continue;
    const auto gen = digits_back();
    if (gen.empty() || skip_ws_back() == 0) continue;
    const auto num = digits_back();
    if (num.empty() || num.size() > 9) continue;
    if (p > 0 && !is_pdf_whitespace(d[p - 1]) && !is_pdf_delimiter(d[p - 1])) continue;
    const int obj_num = std::stoi(std::string(num));
    Lexer lex(d, k + 3);
    try {
      Object obj = lex.parse_object();
      const std::size_t after_obj = lex.pos();
      Lexer::Token next = lex.next();
      if (next.kind == Lexer::Token::Keyword && next.keyword == "stream" && obj.dict()) {
        std::size_t start = lex.pos();
        if (start < d.size() && d[start] == '\r') ++start;
        if (start < d.size() && d[start] == '\n') ++start;
        std::size_t end = std::string_view::npos;
        const Object* len = obj.dict()->find("Length");
        if (len && len->integer() && *len->integer() >= 0) {
          const auto n = static_cast<std::size_t>(*len->integer());
          if (start + n <= d.size()) {
            std::size_t q = start + n;
            while (q < d.size() && is_pdf_whitespace(d[q])) ++q;
            if (d.substr(q, 9) == "endstream") end = start + n;
          }
        }
        if (end == std::string_view::npos) {
          const std::size_t es = d.find("endstream", start);
          if (es == std::string_view::npos) continue;
          end = es;
          if (end > start && d[end - 1] == '\n') --end;
          if (end > start && d[end - 1] == '\r') --end;
        }
        Stream s{*obj.dict(), std::string(d.substr(start, end - start))};
        const bool is_xref = [&] {
          const Object* type = s.dict.find("Type");
          return type && type->name() && type->name()->value == "XRef";
        }();
        if (is_xref) trailers.emplace_back(k, s.dict);
        objects_[obj_num] = Object{std::move(s)};
        pos = d.find("endstream", end);
        pos = pos == std::string_view::npos ? end : pos + 9;
      } else {
        objects_[obj_num] = std::move(obj);
        pos = after_obj;
      }
    } catch (const Error&) {
      // not a parseable object; keep scanning
    }
  }
  if (objects_.empty()) throw Error(ErrorCode::NotAPdf, "no indirect objects found");
  std::sort(trailers.begin(), trailers.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [offset, dict] : trailers)
    for (auto& [key, value] : dict.entries)
      if (key == "Root" || key == "Encrypt" || key == "Info" || key == "ID") trailer_.entries[key] = value;
}

void File::expand_object_streams() {
  std::vector<std::pair<int, Object>> found;
  for (const auto& [num, obj] : objects_) {
    const Stream* s = obj.stream();
    if (!s) continue;
    const Object* type = s->dict.find("Type");
    if (!type || !type->name() || type->name()->value != "ObjStm") continue;
    try {
      const DecodedStream dec = decode(*s);
      const Object* n_obj = resolve_key(s->dict, "N");
      const Object* first_obj = resolve_key(s->dict, "First");
      if (!n_obj || !first_obj || !n_obj->integer() || !first_obj->integer()) continue;
      const auto n = *n_obj->integer();
      const auto first = static_cast<std::size_t>(*first_obj->integer());
      Lexer header(dec.data);
      for (std::int64_t i = 0; i < n; ++i) {
        auto id = header.parse_object(false).integer();
        auto off = header.parse_object(false).integer();
        if (!id || !off) break;
        Lexer body(dec.data, first + static_cast<std::size_t>(*off));
        found.emplace_back(static_cast<int>(*id), body.parse_object());
      }
    } catch (const Error&) {
      // an unreadable object stream only loses the objects inside it
    }
  }
  for (auto& [num, obj] : found) objects_.try_emplace(num, std::move(obj));
}

void File::collect_pages(const Object& node_obj, const Dict* inherited_resources, const Rect* inherited_box,
                         int depth) {
  if (depth > 64) return;
  const Dict* node = resolve(node_obj).dict();
  if (!node) return;
  const Dict* resources = inherited_resources;
  if (const Object* r = resolve_key(*node, "Resources"); r && r->dict()) resources = r->dict();
  Rect box = inherited_box ? *inherited_box : Rect{};
  bool have_box = inherited_box != nullptr;
  if (const Object* mb = resolve_key(*node, "MediaBox"); mb && mb->array() && mb->array()->size() == 4) {
    std::array<double, 4> v{};
    bool ok = true;
    for (std::size_t i = 0; i < 4; ++i) {
      auto n = resolve((*mb->array())[i]).number();
      ok = ok && n.has_value();
      v[i] = n.value_or(0);
    }
    if (ok) {
      box = Rect{std::min(v[0], v[2]), std::min(v[1], v[3]), std::max(v[0], v[2]), std::max(v[1], v[3])};
      have_box = true;
    }
  }
  const Object* type = resolve_key(*node, "Type");
  const bool is_pages = (type && type->name() && type->name()->value == "Pages") || node->contains("Kids");
  if (is_pages) {
    const Object* kids = resolve_key(*node, "Kids");
    if (!kids || !kids->array()) return;
    for (const auto& kid : *kids->array()) collect_pages(kid, resources, have_box ? &box : nullptr, depth + 1);
    return;
  }
  pages_.push_back(PageNode{node, resources, box});
}

}  // namespace pae::ingest::pdf
