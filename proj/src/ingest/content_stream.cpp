#include "pae/ingest/content_stream.hpp"

#include <cmath>
#include <map>
#include <memory>

#include "pae/error.hpp"
#include "pae/ingest/encoding.hpp"

namespace pae::ingest::pdf {

Matrix multiply(const Matrix& l, const Matrix& r) {
  return {l[0] * r[0] + l[1] * r[2],        l[0] * r[1] + l[1] * r[3],
          l[2] * r[0] + l[3] * r[2],        l[2] * r[1] + l[3] * r[3],
          l[4] * r[0] + l[5] * r[2] + r[4], l[4] * r[1] + l[5] * r[3] + r[5]};
}

std::array<double, 2> apply(const Matrix& m, double x, double y) {
  return {x * m[0] + y * m[2] + m[4], x * m[1] + y * m[3] + m[5]};
}

namespace {

constexpr int kMaxFormDepth = 8;

std::uint32_t parse_hex_code(const std::string& bytes) {
  std::uint32_t v = 0;
  for (unsigned char c : bytes) v = (v << 8) | c;
  return v;
}

std::string utf16be_to_utf8(const std::string& bytes) {
  std::string out;
  for (std::size_t i = 0; i + 1 < bytes.size(); i += 2) {
    std::uint32_t u = (static_cast<std::uint8_t>(bytes[i]) << 8) | static_cast<std::uint8_t>(bytes[i + 1]);
    if (u >= 0xD800 && u < 0xDC00 && i + 3 < bytes.size()) {
      const std::uint32_t lo =
          (static_cast<std::uint8_t>(bytes[i + 2]) << 8) | static_cast<std::uint8_t>(bytes[i + 3]);
      u = 0x10000 + ((u - 0xD800) << 10) + (lo - 0xDC00);
      i += 2;
    }
    append_utf8(out, u);
  }
  return out;
}

class FontDecoder {
 public:
  FontDecoder(const File& file, const Dict* font) {
    if (!font) return;
    if (const Object* sub = file.resolve_key(*font, "Subtype"); sub && sub->name())
      code_bytes_ = sub->name()->value == "Type0" ? 2 : 1;
    if (const Object* first = file.resolve_key(*font, "FirstChar")) first_char_ = first->integer().value_or(0);
    if (const Object* w = file.resolve_key(*font, "Widths"); w && w->array())
      for (const auto& item : *w->array()) widths_.push_back(file.resolve(item).number().value_or(500));
    if (code_bytes_ == 2) default_width_ = 1000;
    if (const Object* tu = file.resolve_key(*font, "ToUnicode"); tu && tu->stream()) {
      try {
        parse_cmap(file.decode(*tu->stream()).data);
      } catch (const Error&) {
        cmap_.clear();
      }
    }
  }

  // Decodes `bytes` into UTF-8 and per-glyph advances in text space units.
  void decode(const std::string& bytes, std::string& utf8, std::vector<double>& advances,
              std::vector<bool>& is_space) const {
    for (std::size_t i = 0; i + code_bytes_ <= bytes.size(); i += code_bytes_) {
      std::uint32_t code = 0;
      for (int k = 0; k < code_bytes_; ++k) code = (code << 8) | static_cast<std::uint8_t>(bytes[i + k]);
      std::string glyph;
      if (auto it = cmap_.find(code); it != cmap_.end()) {
        glyph = it->second;
      } else if (code_bytes_ == 1) {
        if (const auto cp = winansi_to_unicode(static_cast<std::uint8_t>(code)); cp != 0) append_utf8(glyph, cp);
      }
      utf8 += glyph;
      double w = default_width_;
      if (code_bytes_ == 1 && code >= first_char_ && code - first_char_ < widths_.size())
        w = widths_[code - first_char_];
      advances.push_back(w / 1000.0);
      is_space.push_back(code_bytes_ == 1 && code == 32);
    }
  }

 private:
  void parse_cmap(const std::string& data) {
    Lexer lex(data);
    std::vector<Object> operands;
    for (;;) {
      Lexer::Token t = lex.next(false);
      if (t.kind == Lexer::Token::End) break;
      if (t.kind == Lexer::Token::Value) {
        operands.push_back(std::move(t.value));
        continue;
      }
      if (t.keyword == "begincodespacerange") {
        operands.clear();
      } else if (t.keyword == "endcodespacerange") {
        if (!operands.empty() && operands.front().string())
          code_bytes_ = static_cast<int>(std::max<std::size_t>(1, operands.front().string()->bytes.size()));
        operands.clear();
      } else if (t.keyword == "endbfchar") {
        for (std::size_t i = 0; i + 1 < operands.size(); i += 2) {
          auto src = operands[i].string();
          auto dst = operands[i + 1].string();
          if (src && dst) cmap_[parse_hex_code(src->bytes)] = utf16be_to_utf8(dst->bytes);
        }
        operands.clear();
      } else if (t.keyword == "endbfrange") {
        for (std::size_t i = 0; i + 2 < operands.size(); i += 3) {
          auto lo = operands[i].string();
          auto hi = operands[i + 1].string();
          if (!lo || !hi) continue;
          const auto a = parse_hex_code(lo->bytes), b = parse_hex_code(hi->bytes);
          if (b < a || b - a > 0xFFFF) continue;
          if (auto dst = operands[i + 2].string()) {
            std::string base = dst->bytes;
            for (std::uint32_t c = a; c <= b; ++c) {
              cmap_[c] = utf16be_to_utf8(base);
              if (!base.empty()) base.back() = static_cast<char>(static_cast<std::uint8_t>(base.back()) + 1);
            }
          } else if (auto arr = operands[i + 2].array()) {
            for (std::uint32_t c = a; c <= b && c - a < arr->size(); ++c)
              if (auto s = (*arr)[c - a].string()) cmap_[c] = utf16be_to_utf8(s->bytes);
          }
        }
        operands.clear();
      } else {
        operands.clear();
      }
    }
  }

  int code_bytes_ = 1;
  std::uint32_t first_char_ = 0;
  std::vector<double> widths_;
  double default_width_ = 500;
  std::map<std::uint32_t, std::string> cmap_;
};

struct GraphicsState {
  Matrix ctm = kIdentity;
  double char_spacing = 0, word_spacing = 0, h_scale = 1, leading = 0, rise = 0, font_size = 0;
  const FontDecoder* font = nullptr;
};

class Interpreter {
 public:
  Interpreter(const File& file, ContentVisitor& visitor, std::vector<std::string>& warnings)
      : file_(file), visitor_(visitor), warnings_(warnings) {}

  void run(std::string_view content, const Dict* resources, const Matrix& base, int depth) {
    resources_ = resources;
    gs_ = {};
    gs_.ctm = base;
    stack_.clear();
    depth_ = depth;
    Lexer lex(content);
    std::vector<Object> operands;
    try {
      for (;;) {
        Lexer::Token t = lex.next(false);
        if (t.kind == Lexer::Token::End) break;
        if (t.kind == Lexer::Token::Value) {
          operands.push_back(std::move(t.value));
          continue;
        }
        if (t.keyword == "BI") {
          skip_inline_image(lex);
        } else {
          dispatch(t.keyword, operands);
        }
        operands.clear();
      }
    } catch (const Error& e) {
      warnings_.push_back(std::string("malformed content stream: ") + e.what());
    }
    if (in_text_) {
      visitor_.end_text();
      in_text_ = false;
    }
  }

 private:
  static double num(const std::vector<Object>& ops, std::size_t i) {
    return i < ops.size() ? ops[i].number().value_or(0.0) : 0.0;
  }

  void skip_inline_image(Lexer& lex) {
    const auto data = lex.data();
    auto id = data.find("ID", lex.pos());
    if (id == std::string_view::npos) throw Error(ErrorCode::MalformedContentStream, "inline image without ID");
    std::size_t p = id + 3;
    for (;;) {
      const auto ei = data.find("EI", p);
      if (ei == std::string_view::npos) throw Error(ErrorCode::MalformedContentStream, "inline image without EI");
      const bool before = ei > 0 && is_pdf_whitespace(data[ei - 1]);
      const bool after = ei + 2 >= data.size() || is_pdf_whitespace(data[ei + 2]);
      if (before && after) {
        lex.seek(ei + 2);
        return;
      }
      p = ei + 2;
    }
  }

  const FontDecoder* font(const std::string& name) {
    auto it = fonts_.find(name);
    if (it != fonts_.end()) return it->second.get();
    const Dict* font_dict = nullptr;
    if (resources_)
      if (const Object* fonts = file_.resolve_key(*resources_, "Font"); fonts && fonts->dict())
        if (const Object* f = file_.resolve_key(*fonts->dict(), name)) font_dict = f->dict();
    auto decoder = std::make_unique<FontDecoder>(file_, font_dict);
    const FontDecoder* raw = decoder.get();
    fonts_.emplace(name, std::move(decoder));
    return raw;
  }

  void next_line(double tx, double ty) {
    line_matrix_ = multiply(Matrix{1, 0, 0, 1, tx, ty}, line_matrix_);
    text_matrix_ = line_matrix_;
  }

  void show(const std::string& bytes) {
    static const FontDecoder kFallback(file_, nullptr);
    const FontDecoder* f = gs_.font ? gs_.font : &kFallback;
    TextRun run;
    std::vector<double> advances;
    std::vector<bool> spaces;
    f->decode(bytes, run.text, advances, spaces);
    const Matrix render = multiply(Matrix{gs_.font_size * gs_.h_scale, 0, 0, gs_.font_size, 0, gs_.rise},
                                   multiply(text_matrix_, gs_.ctm));
    const auto origin = apply(render, 0, 0);
    run.x = origin[0];
    run.y = origin[1];
    run.font_size = std::hypot(render[2], render[3]);
    double total = 0;
    for (std::size_t i = 0; i < advances.size(); ++i) {
      const auto at = apply(multiply(Matrix{1, 0, 0, 1, total, 0}, multiply(text_matrix_, gs_.ctm)), 0, gs_.rise);
      run.glyph_origins.push_back(at);
      double adv = advances[i] * gs_.font_size + gs_.char_spacing + (spaces[i] ? gs_.word_spacing : 0.0);
      total += adv * gs_.h_scale;
    }
    run.glyph_blank = spaces;
    text_matrix_ = multiply(Matrix{1, 0, 0, 1, total, 0}, text_matrix_);
    const auto end = apply(multiply(text_matrix_, gs_.ctm), 0, 0);
    run.end_x = end[0];
    run.glyph_width = advances.empty() ? 0.0 : std::abs(run.end_x - run.x) / static_cast<double>(advances.size());
    if (!run.text.empty()) visitor_.text(run);
  }

  void do_xobject(const std::string& name) {
    if (!resources_) return;
    const Object* xobjects = file_.resolve_key(*resources_, "XObject");
    if (!xobjects || !xobjects->dict()) return;
    const Object* raw = xobjects->dict()->find(name);
    if (!raw) return;
    const Object& obj = file_.resolve(*raw);
    const Stream* s = obj.stream();
    if (!s) return;
    const Object* sub = file_.resolve_key(s->dict, "Subtype");
    if (!sub || !sub->name()) return;
    if (sub->name()->value == "Image") {
      ImagePlacement p;
      p.name = name;
      p.stream = s;
      if (auto r = raw->ref()) p.ref = *r;
      p.ctm = gs_.ctm;
      visitor_.image(p);
    } else if (sub->name()->value == "Form" && depth_ < kMaxFormDepth) {
      Matrix form = kIdentity;
      if (const Object* m = file_.resolve_key(s->dict, "Matrix"); m && m->array() && m->array()->size() == 6)
        for (std::size_t i = 0; i < 6; ++i) form[i] = file_.resolve((*m->array())[i]).number().value_or(form[i]);
      const Dict* res = resources_;
      if (const Object* r = file_.resolve_key(s->dict, "Resources"); r && r->dict()) res = r->dict();
      std::string content;
      try {
        content = file_.decode(*s).data;
      } catch (const Error& e) {
        warnings_.push_back(std::string("form XObject ") + name + ": " + e.what());
        return;
      }
      Interpreter nested(file_, visitor_, warnings_);
      nested.run(content, res, multiply(form, gs_.ctm), depth_ + 1);
    }
  }

  void dispatch(const std::string& op, std::vector<Object>& ops) {
    if (op == "q") {
      stack_.push_back(gs_);
    } else if (op == "Q") {
      if (!stack_.empty()) {
        gs_ = stack_.back();
        stack_.pop_back();
      }
    } else if (op == "cm") {
      gs_.ctm = multiply(Matrix{num(ops, 0), num(ops, 1), num(ops, 2), num(ops, 3), num(ops, 4), num(ops, 5)},
                         gs_.ctm);
    } else if (op == "BT") {
      text_matrix_ = line_matrix_ = kIdentity;
      if (!in_text_) visitor_.begin_text();
      in_text_ = true;
    } else if (op == "ET") {
      if (in_text_) visitor_.end_text();
      in_text_ = false;
    } else if (op == "Tf") {
      if (!ops.empty() && ops[0].name()) gs_.font = font(ops[0].name()->value);
      gs_.font_size = num(ops, 1);
    } else if (op == "Tc") {
      gs_.char_spacing = num(ops, 0);
    } else if (op == "Tw") {
      gs_.word_spacing = num(ops, 0);
    } else if (op == "Tz") {
      gs_.h_scale = num(ops, 0) / 100.0;
    } else if (op == "TL") {
      gs_.leading = num(ops, 0);
    } else if (op == "Ts") {
      gs_.rise = num(ops, 0);
    } else if (op == "Td") {
      next_line(num(ops, 0), num(ops, 1));
    } else if (op == "TD") {
      gs_.leading = -num(ops, 1);
      next_line(num(ops, 0), num(ops, 1));
    } else if (op == "Tm") {
      line_matrix_ = text_matrix_ = {num(ops, 0), num(ops, 1), num(ops, 2), num(ops, 3), num(ops, 4), num(ops, 5)};
    } else if (op == "T*") {
      next_line(0, -gs_.leading);
    } else if (op == "Tj") {
      if (!ops.empty() && ops[0].string()) show(ops[0].string()->bytes);
    } else if (op == "'") {
      next_line(0, -gs_.leading);
      if (!ops.empty() && ops[0].string()) show(ops[0].string()->bytes);
    } else if (op == "\"") {
      gs_.word_spacing = num(ops, 0);
      gs_.char_spacing = num(ops, 1);
      next_line(0, -gs_.leading);
      if (ops.size() > 2 && ops[2].string()) show(ops[2].string()->bytes);
    } else if (op == "TJ") {
      if (ops.empty() || !ops[0].array()) return;
      for (const auto& item : *ops[0].array()) {
        if (auto s = item.string()) {
          show(s->bytes);
        } else if (auto n = item.number()) {
          const double tx = -*n / 1000.0 * gs_.font_size * gs_.h_scale;
          text_matrix_ = multiply(Matrix{1, 0, 0, 1, tx, 0}, text_matrix_);
        }
      }
    } else if (op == "Do") {
      if (!ops.empty() && ops[0].name()) do_xobject(ops[0].name()->value);
    }
  }

  const File& file_;
  ContentVisitor& visitor_;
  std::vector<std::string>& warnings_;
  const Dict* resources_ = nullptr;
  GraphicsState gs_;
  std::vector<GraphicsState> stack_;
  Matrix text_matrix_ = kIdentity;
  Matrix line_matrix_ = kIdentity;
  bool in_text_ = false;
  int depth_ = 0;
  std::map<std::string, std::unique_ptr<FontDecoder>> fonts_;
};

}  // namespace

void interpret_page(const File& file, const PageNode& page, ContentVisitor& visitor,
                    std::vector<std::string>& warnings) {
  if (!page.page) return;
  const Object* contents = file.resolve_key(*page.page, "Contents");
  if (!contents) return;
  std::vector<const Stream*> streams;
  if (auto s = contents->stream()) {
    streams.push_back(s);
  } else if (auto a = contents->array()) {
    for (const auto& item : *a)
      if (auto s = file.resolve(item).stream()) streams.push_back(s);
  }
  std::string content;
  for (const Stream* s : streams) {
    try {
      content += file.decode(*s).data;
      content += '\n';
    } catch (const Error& e) {
      warnings.push_back(std::string("content stream skipped: ") + e.what());
    }
  }
  Interpreter interp(file, visitor, warnings);
  interp.run(content, page.resources, kIdentity, 0);
}

}  // namespace pae::ingest::pdf
