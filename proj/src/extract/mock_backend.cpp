#include <cctype>

#include "json.hpp"
#include "pae/error.hpp"
#include "pae/extract/llm.hpp"
#include "pae/util/base64.hpp"
#include "pae/util/sha256.hpp"
#include "pae/util/strings.hpp"

namespace pae::extract {

namespace {

bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

bool contains_phrase(const std::string& haystack_lower, const std::string& phrase_lower) {
  if (phrase_lower.empty()) return false;
  for (auto pos = haystack_lower.find(phrase_lower); pos != std::string::npos;
       pos = haystack_lower.find(phrase_lower, pos + 1)) {
    const bool left_ok = pos == 0 || !word_char(haystack_lower[pos - 1]) || !word_char(phrase_lower.front());
    const auto end = pos + phrase_lower.size();
    const bool right_ok = end >= haystack_lower.size() || !word_char(haystack_lower[end]) || !word_char(phrase_lower.back());
    if (left_ok && right_ok) return true;
  }
  return false;
}

}  // namespace

MockLexicon parse_lexicon(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SchemaViolation, std::string("lexicon is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::SchemaViolation, "lexicon must be a JSON object");
  MockLexicon lex;
  if (j.contains("text")) {
    if (!j["text"].is_object()) throw Error(ErrorCode::SchemaViolation, "lexicon 'text' must be an object");
    for (const auto& [name, entries] : j["text"].items()) {
      auto key = parse_attribute_key(name);
      if (!key) throw Error(ErrorCode::SchemaViolation, "lexicon has unknown attribute '" + name + "'");
      if (!entries.is_array()) throw Error(ErrorCode::SchemaViolation, "lexicon entries for '" + name + "' must be an array");
      for (const auto& e : entries) {
        if (e.is_string()) {
          lex.text[*key].push_back({e.get<std::string>(), e.get<std::string>()});
        } else if (e.is_object() && e.contains("match") && e.contains("value")) {
          lex.text[*key].push_back({e["match"].get<std::string>(), e["value"].get<std::string>()});
        } else {
          throw Error(ErrorCode::SchemaViolation, "bad lexicon entry under '" + name + "'");
        }
      }
    }
  }
  if (j.contains("images")) {
    if (!j["images"].is_object()) throw Error(ErrorCode::SchemaViolation, "lexicon 'images' must be an object");
    for (const auto& [hash, response] : j["images"].items()) {
      if (!response.is_string()) throw Error(ErrorCode::SchemaViolation, "image response must be a string");
      lex.images[util::to_lower(hash)] = response.get<std::string>();
    }
  }
  return lex;
}

MockLexicon load_lexicon(const std::string& path) { return parse_lexicon(util::read_file(path)); }

std::string MockLlmBackend::complete(const LlmRequest& request, const ModelParams&) {
  if (request.image) {
    const auto bytes = util::base64_decode(request.image->data);
    auto it = lexicon_.images.find(util::to_hex(util::sha256(bytes)));
    return it == lexicon_.images.end() ? std::string() : it->second;
  }
  const std::string haystack =
      util::to_lower(util::collapse_whitespace(request.payload.empty() ? request.prompt : request.payload));
  std::string out;
  for (auto key : kAllAttributes) {
    auto it = lexicon_.text.find(key);
    if (it == lexicon_.text.end()) continue;
    std::vector<std::string> hits;
    for (const auto& entry : it->second)
      if (contains_phrase(haystack, util::to_lower(util::collapse_whitespace(entry.match)))) hits.push_back(entry.value);
    if (hits.empty()) continue;
    out += std::string(display_name(key)) + ": " + util::join(hits, ", ") + "\n";
  }
  return out;
}

}  // namespace pae::extract
