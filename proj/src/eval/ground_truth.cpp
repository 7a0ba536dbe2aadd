#include "pae/eval/ground_truth.hpp"

#include <charconv>

#include "json.hpp"
#include "pae/error.hpp"
#include "pae/util/strings.hpp"

namespace pae::eval {

GroundTruth parse_ground_truth(const std::string& json_text, const normalize::AliasTable& aliases) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SchemaViolation, std::string("ground truth is not JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("pages") || !j["pages"].is_object())
    throw Error(ErrorCode::SchemaViolation, "ground truth needs an object field 'pages'");
  GroundTruth gt;
  for (const auto& [page_key, entry] : j["pages"].items()) {
    std::size_t page = 0;
    const auto [p, ec] = std::from_chars(page_key.data(), page_key.data() + page_key.size(), page);
    if (ec != std::errc{} || p != page_key.data() + page_key.size())
      throw Error(ErrorCode::SchemaViolation, "page key '" + page_key + "' is not an index");
    if (!entry.is_object()) throw Error(ErrorCode::SchemaViolation, "page " + page_key + " is not an object");
    extract::AttributeSet set(extract::Source::Merged, page);
    for (const auto& [name, value] : entry.items()) {
      const auto key = extract::parse_attribute_key(name);
      if (!key) throw Error(ErrorCode::SchemaViolation, "page " + page_key + ": unknown attribute '" + name + "'");
      const auto add = [&](const nlohmann::json& v) {
        if (!v.is_string())
          throw Error(ErrorCode::SchemaViolation, "page " + page_key + ", " + name + ": values must be strings");
        const auto s = v.get<std::string>();
        if (extract::is_absent_marker(util::trim(s))) return;
        set.add(*key, normalize::canonicalize_value(s, aliases));
      };
      if (value.is_array()) {
        for (const auto& v : value) add(v);
      } else {
        add(value);
      }
    }
    gt.emplace(page, std::move(set));
  }
  return gt;
}

GroundTruth load_ground_truth(const std::string& path, const normalize::AliasTable& aliases) {
  return parse_ground_truth(util::read_file(path), aliases);
}

}  // namespace pae::eval
