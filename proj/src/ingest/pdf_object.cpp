#include "pae/ingest/pdf_object.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

#include "pae/error.hpp"

namespace pae::ingest::pdf {

const Object* Dict::find(std::string_view key) const {
  auto it = entries.find(std::string(key));
  return it == entries.end() ? nullptr : &it->second;
}

std::optional<double> Object::number() const {
  if (auto i = std::get_if<std::int64_t>(&value)) return static_cast<double>(*i);
  if (auto d = std::get_if<double>(&value)) return *d;
  return std::nullopt;
}

std::optional<std::int64_t> Object::integer() const {
  if (auto i = std::get_if<std::int64_t>(&value)) return *i;
  if (auto d = std::get_if<double>(&value)) return static_cast<std::int64_t>(*d);
  return std::nullopt;
}

const Dict* Object::dict() const {
  if (auto d = std::get_if<Dict>(&value)) return d;
  if (auto s = std::get_if<Stream>(&value)) return &s->dict;
  return nullptr;
}

bool is_pdf_whitespace(char c) {
  return c == ' ' || c == '\n' || c == '\r' || c == '\t' || c == '\f' || c == '\0';
}

bool is_pdf_delimiter(char c) {
  switch (c) {
    case '(': case ')': case '<': case '>': case '[': case ']':
    case '{': case '}': case '/': case '%':
      return true;
    default:
      return false;
  }
}

namespace {

[[noreturn]] void syntax_error(const std::string& what, std::size_t pos) {
  throw Error(ErrorCode::MalformedContentStream, what + " at offset " + std::to_string(pos));
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

bool looks_numeric(std::string_view s) {
  if (s.empty()) return false;
  bool digit = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digit = true;
    } else if ((c == '+' || c == '-') && i == 0) {
    } else if (c != '.') {
      return false;
    }
  }
  return digit;
}

Object make_number(std::string_view s) {
  if (s.find('.') == std::string_view::npos) {
    std::int64_t v = 0;
    auto first = s.data();
    if (*first == '+') ++first;
    auto [p, ec] = std::from_chars(first, s.data() + s.size(), v);
    if (ec == std::errc() && p == s.data() + s.size()) return Object{v};
  }
  return Object{std::strtod(std::string(s).c_str(), nullptr)};
}

}  // namespace

void Lexer::skip_whitespace() {
  while (pos_ < data_.size()) {
    const char c = data_[pos_];
    if (is_pdf_whitespace(c)) {
      ++pos_;
    } else if (c == '%') {
      while (pos_ < data_.size() && data_[pos_] != '\n' && data_[pos_] != '\r') ++pos_;
    } else {
      break;
    }
  }
}

std::string Lexer::read_regular() {
  const std::size_t start = pos_;
  while (pos_ < data_.size() && !is_pdf_whitespace(data_[pos_]) && !is_pdf_delimiter(data_[pos_])) ++pos_;
  return std::string(data_.substr(start, pos_ - start));
}

String Lexer::read_literal_string() {
  ++pos_;  // '('
  String out;
  int depth = 1;
  while (pos_ < data_.size()) {
    char c = data_[pos_++];
    if (c == '\\') {
      if (pos_ >= data_.size()) break;
      char e = data_[pos_++];
      switch (e) {
        case 'n': out.bytes.push_back('\n'); break;
        case 'r': out.bytes.push_back('\r'); break;
        case 't': out.bytes.push_back('\t'); break;
        case 'b': out.bytes.push_back('\b'); break;
        case 'f': out.bytes.push_back('\f'); break;
        case '\r':
          if (pos_ < data_.size() && data_[pos_] == '\n') ++pos_;
          break;
        case '\n': break;
        default:
          if (e >= '0' && e <= '7') {
            int v = e - '0';
            for (int k = 0; k < 2 && pos_ < data_.size() && data_[pos_] >= '0' && data_[pos_] <= '7'; ++k)
              v = v * 8 + (data_[pos_++] - '0');
            out.bytes.push_back(static_cast<char>(v & 0xFF));
          } else {
            out.bytes.push_back(e);
          }
      }
    } else if (c == '(') {
      ++depth;
      out.bytes.push_back(c);
    } else if (c == ')') {
      if (--depth == 0) return out;
      out.bytes.push_back(c);
    } else {
      out.bytes.push_back(c);
    }
  }
  syntax_error("unterminated string", pos_);
}

String Lexer::read_hex_string() {
  ++pos_;  // '<'
  String out;
  int hi = -1;
  while (pos_ < data_.size()) {
    const char c = data_[pos_++];
    if (c == '>') {
      if (hi >= 0) out.bytes.push_back(static_cast<char>(hi << 4));
      return out;
    }
    const int v = hex_value(c);
    if (v < 0) {
      if (is_pdf_whitespace(c)) continue;
      syntax_error("bad hex string", pos_);
    }
    if (hi < 0) {
      hi = v;
    } else {
      out.bytes.push_back(static_cast<char>((hi << 4) | v));
      hi = -1;
    }
  }
  syntax_error("unterminated hex string", pos_);
}

Name Lexer::read_name() {
  ++pos_;  // '/'
  std::string raw = read_regular();
  Name n;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == '#' && i + 2 < raw.size() && hex_value(raw[i + 1]) >= 0 && hex_value(raw[i + 2]) >= 0) {
      n.value.push_back(static_cast<char>(hex_value(raw[i + 1]) * 16 + hex_value(raw[i + 2])));
      i += 2;
    } else {
      n.value.push_back(raw[i]);
    }
  }
  return n;
}

Object Lexer::read_number_or_ref(bool allow_refs) {
  const std::string first = read_regular();
  Object num = make_number(first);
  if (!allow_refs || !std::holds_alternative<std::int64_t>(num.value)) return num;
  const std::size_t save = pos_;
  skip_whitespace();
  const std::string second = read_regular();
  if (!second.empty() && second.find_first_not_of("0123456789") == std::string::npos) {
    skip_whitespace();
    if (pos_ < data_.size() && data_[pos_] == 'R' &&
        (pos_ + 1 >= data_.size() || is_pdf_whitespace(data_[pos_ + 1]) || is_pdf_delimiter(data_[pos_ + 1]))) {
      ++pos_;
      return Object{Ref{static_cast<int>(std::get<std::int64_t>(num.value)), std::atoi(second.c_str())}};
    }
  }
  pos_ = save;
  return num;
}

Lexer::Token Lexer::next(bool allow_refs) {
  skip_whitespace();
  Token t;
  if (pos_ >= data_.size()) return t;
  const char c = data_[pos_];
  t.kind = Token::Value;
  switch (c) {
    case '(':
      t.value = Object{read_literal_string()};
      return t;
    case '/':
      t.value = Object{read_name()};
      return t;
    case '[': {
      ++pos_;
      Array arr;
      for (;;) {
        skip_whitespace();
        if (pos_ >= data_.size()) syntax_error("unterminated array", pos_);
        if (data_[pos_] == ']') {
          ++pos_;
          break;
        }
        Token inner = next(allow_refs);
        if (inner.kind != Token::Value) syntax_error("unexpected keyword in array: " + inner.keyword, pos_);
        arr.push_back(std::move(inner.value));
      }
      t.value = Object{std::move(arr)};
      return t;
    }
    case '<':
      if (pos_ + 1 < data_.size() && data_[pos_ + 1] == '<') {
        pos_ += 2;
        Dict d;
        for (;;) {
          skip_whitespace();
          if (pos_ >= data_.size()) syntax_error("unterminated dictionary", pos_);
          if (data_[pos_] == '>' && pos_ + 1 < data_.size() && data_[pos_ + 1] == '>') {
            pos_ += 2;
            break;
          }
          if (data_[pos_] != '/') syntax_error("dictionary key is not a name", pos_);
          Name key = read_name();
          Token val = next(allow_refs);
          if (val.kind != Token::Value) syntax_error("missing dictionary value", pos_);
          d.entries[key.value] = std::move(val.value);
        }
        t.value = Object{std::move(d)};
        return t;
      }
      t.value = Object{read_hex_string()};
      return t;
    case ']': case ')': case '>': case '{': case '}':
      ++pos_;
      t.kind = Token::Keyword;
      t.keyword = std::string(1, c);
      return t;
    default:
      break;
  }
  const std::size_t start = pos_;
  std::string word = read_regular();
  if (word.empty()) {
    ++pos_;
    syntax_error("unexpected character", start);
  }
  if (looks_numeric(word)) {
    pos_ = start;
    t.value = read_number_or_ref(allow_refs);
    return t;
  }
  if (word == "true" || word == "false") {
    t.value = Object{word == "true"};
    return t;
  }
  if (word == "null") {
    t.value = Object{};
    return t;
  }
  t.kind = Token::Keyword;
  t.keyword = std::move(word);
  return t;
}

Object Lexer::parse_object(bool allow_refs) {
  Token t = next(allow_refs);
  if (t.kind != Token::Value) syntax_error("expected object, got '" + t.keyword + "'", pos_);
  return std::move(t.value);
}

}  // namespace pae::ingest::pdf
