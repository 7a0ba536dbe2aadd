#include "pae/extract/response_parser.hpp"

#include <cctype>

#include "pae/util/strings.hpp"

namespace pae::extract {

namespace {

// Strips decoration that models put around keys and values.
std::string strip_markup(std::string_view s) {
  std::string t = util::trim(s);
  bool changed = true;
  while (changed && !t.empty()) {
    changed = false;
    const std::string before = t;
    while (!t.empty() && (t.front() == '*' || t.front() == '{' || t.front() == '[' || t.front() == '"' ||
                          t.front() == '`' || t.front() == '_'))
      t.erase(t.begin());
    while (!t.empty() && (t.back() == '*' || t.back() == '}' || t.back() == ']' || t.back() == '"' ||
                          t.back() == '`' || t.back() == ',' || t.back() == ';' || t.back() == '_'))
      t.pop_back();
    if (t.size() >= 2 && t.front() == '\'' && t.back() == '\'') t = t.substr(1, t.size() - 2);
    t = util::trim(t);
    changed = t != before;
  }
  return t;
}

std::string strip_bullet(std::string_view line) {
  std::string t = util::trim(line);
  if (t.rfind("\xE2\x80\xA2", 0) == 0) t = t.substr(3);  // U+2022 bullet
  else if (!t.empty() && (t.front() == '-' || t.front() == '+')) t = t.substr(1);
  else if (t.size() > 1 && t.front() == '*' && t[1] == ' ') t = t.substr(1);
  else {
    std::size_t i = 0;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
    if (i > 0 && i < t.size() && (t[i] == '.' || t[i] == ')')) t = t.substr(i + 1);
  }
  return util::trim(t);
}

}  // namespace

AttributeSet parse_attribute_response(std::string_view raw, std::size_t page_index, Source source,
                                      std::vector<std::string>* warnings) {
  AttributeSet set(source, page_index);
  bool any_key = false;
  for (const auto& raw_line : util::split(raw, '\n')) {
    const std::string line = strip_bullet(raw_line);
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    const std::string key_text = strip_markup(line.substr(0, colon));
    if (key_text.empty()) continue;
    const auto key = parse_attribute_key(key_text);
    if (!key) {
      if (warnings) warnings->push_back("unknown attribute key ignored: " + key_text);
      continue;
    }
    any_key = true;
    for (const auto& part : util::split(line.substr(colon + 1), ',')) {
      std::string value = strip_markup(part);
      while (!value.empty() && value.back() == '.') value.pop_back();
      set.add(*key, value);
    }
  }
  if (!any_key && warnings && !util::trim(raw).empty())
    warnings->push_back("ParseWarning: response contained no recognizable attributes");
  return set;
}

}  // namespace pae::extract
