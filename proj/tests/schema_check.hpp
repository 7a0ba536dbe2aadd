#pragma once

#include <regex>
#include <string>
#include <vector>

#include "json.hpp"

namespace testing {

// Checks `doc` against the small schema dialect used by the committed
// fixture: type, required, properties, additionalProperties, items,
// pattern and "$ref" into the top-level "definitions". Returns the
// violations as "path: message".
class SchemaCheck {
 public:
  explicit SchemaCheck(nlohmann::json root) : root_(std::move(root)) {}

  std::vector<std::string> run(const nlohmann::json& doc) {
    errors_.clear();
    visit(root_, doc, "$");
    return errors_;
  }

 private:
  static bool has_type(const nlohmann::json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
  }

  void visit(const nlohmann::json& schema, const nlohmann::json& v, const std::string& path) {
    if (schema.contains("$ref")) return visit(root_["definitions"][schema["$ref"].get<std::string>()], v, path);
    if (schema.contains("type")) {
      bool ok = false;
      if (schema["type"].is_array()) {
        for (const auto& t : schema["type"]) ok = ok || has_type(v, t.get<std::string>());
      } else {
        ok = has_type(v, schema["type"].get<std::string>());
      }
      if (!ok) {
        errors_.push_back(path + ": wrong type");
        return;
      }
    }
    if (schema.contains("pattern") && v.is_string() &&
        !std::regex_search(v.get<std::string>(), std::regex(schema["pattern"].get<std::string>())))
      errors_.push_back(path + ": pattern mismatch");
    if (v.is_object()) {
      for (const auto& key : schema.value("required", nlohmann::json::array()))
        if (!v.contains(key.get<std::string>())) errors_.push_back(path + ": missing " + key.get<std::string>());
      const auto props = schema.value("properties", nlohmann::json::object());
      for (const auto& [k, child] : v.items()) {
        if (props.contains(k)) {
          visit(props[k], child, path + "." + k);
        } else if (schema.contains("additionalProperties")) {
          const auto& extra = schema["additionalProperties"];
          if (extra.is_boolean()) {
            if (!extra.get<bool>()) errors_.push_back(path + ": unexpected key " + k);
          } else {
            visit(extra, child, path + "." + k);
          }
        }
      }
    }
    if (v.is_array() && schema.contains("items"))
      for (std::size_t i = 0; i < v.size(); ++i) visit(schema["items"], v[i], path + "[" + std::to_string(i) + "]");
  }

  nlohmann::json root_;
  std::vector<std::string> errors_;
};

}  // namespace testing
