#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pae::ingest::pdf {

struct Object;

struct Name {
  std::string value;
  bool operator==(const Name&) const = default;
};

// Decoded bytes of a literal or hex string.
struct String {
  std::string bytes;
  bool operator==(const String&) const = default;
};

struct Ref {
  int num = 0;
  int gen = 0;
  auto operator<=>(const Ref&) const = default;
};

using Array = std::vector<Object>;

struct Dict {
  std::map<std::string, Object> entries;

  const Object* find(std::string_view key) const;
  bool contains(std::string_view key) const { return find(key) != nullptr; }
};

struct Stream {
  Dict dict;
  std::string data;  // still encoded
};

struct Object {
  std::variant<std::monostate, bool, std::int64_t, double, String, Name, Array, Dict, Ref, Stream> value;

  bool is_null() const { return std::holds_alternative<std::monostate>(value); }
  bool is_number() const {
    return std::holds_alternative<std::int64_t>(value) || std::holds_alternative<double>(value);
  }
  std::optional<double> number() const;
  std::optional<std::int64_t> integer() const;
  const Name* name() const { return std::get_if<Name>(&value); }
  const String* string() const { return std::get_if<String>(&value); }
  const Array* array() const { return std::get_if<Array>(&value); }
  const Dict* dict() const;  // also the dictionary of a stream
  const Ref* ref() const { return std::get_if<Ref>(&value); }
  const Stream* stream() const { return std::get_if<Stream>(&value); }
};

// Tokenizer/parser shared by the file-level object parser and the content
// stream interpreter. Bare keywords (operators, `obj`, `stream`, ...) come
// back as Token::Keyword.
class Lexer {
 public:
  explicit Lexer(std::string_view data, std::size_t pos = 0) : data_(data), pos_(pos) {}

  struct Token {
    enum Kind { End, Value, Keyword } kind = End;
    Object value;
    std::string keyword;
  };

  // `allow_refs` enables the "num gen R" lookahead, which content streams
  // never need.
  Token next(bool allow_refs = true);
  Object parse_object(bool allow_refs = true);  // throws on keyword/end

  void skip_whitespace();
  std::size_t pos() const { return pos_; }
  void seek(std::size_t pos) { pos_ = pos; }
  std::string_view data() const { return data_; }
  bool at_end() const { return pos_ >= data_.size(); }

 private:
  String read_literal_string();
  String read_hex_string();
  Name read_name();
  Object read_number_or_ref(bool allow_refs);
  std::string read_regular();

  std::string_view data_;
  std::size_t pos_;
};

bool is_pdf_whitespace(char c);
bool is_pdf_delimiter(char c);

}  // namespace pae::ingest::pdf
