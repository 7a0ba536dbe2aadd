#include "pae/extract/attributes.hpp"

#include <algorithm>
#include <cctype>

#include "pae/util/strings.hpp"

namespace pae::extract {

std::string_view display_name(AttributeKey key) {
  switch (key) {
    case AttributeKey::Color: return "Color";
    case AttributeKey::SleeveStyle: return "Sleeve Style";
    case AttributeKey::ProductType: return "Product Type";
    case AttributeKey::Material: return "Material";
    case AttributeKey::Features: return "Features";
    case AttributeKey::Categories: return "Categories";
    case AttributeKey::Age: return "Age";
    case AttributeKey::Neck: return "Neck";
  }
  return "";
}

namespace {

std::string squash(std::string_view s) {
  std::string out;
  for (char c : s)
    if (std::isalnum(static_cast<unsigned char>(c))) out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return out;
}

}  // namespace

std::optional<AttributeKey> parse_attribute_key(std::string_view text) {
  const std::string k = squash(text);
  for (auto key : kAllAttributes)
    if (k == squash(display_name(key))) return key;
  if (k == "colour" || k == "colors" || k == "colours") return AttributeKey::Color;
  if (k == "agegroup") return AttributeKey::Age;
  if (k == "neckstyle" || k == "neckline") return AttributeKey::Neck;
  if (k == "productcategories" || k == "category") return AttributeKey::Categories;
  if (k == "feature") return AttributeKey::Features;
  return std::nullopt;
}

bool is_absent_marker(std::string_view value) {
  const std::string v = util::to_lower(util::trim(value));
  return v == "not mentioned" || v == "n/a" || v == "na" || v == "none" || v == "not mentioned.";
}

std::string_view to_string(Source source) {
  switch (source) {
    case Source::Text: return "text";
    case Source::Image: return "image";
    case Source::Merged: return "merged";
  }
  return "";
}

AttributeSet::AttributeSet(Source source, std::size_t page_index) : source_(source), page_index_(page_index) {
  for (auto& v : values_) v = {std::string(kNotMentioned)};
}

bool AttributeSet::mentioned(AttributeKey key) const {
  const auto& v = values_[index(key)];
  return !(v.size() == 1 && v.front() == kNotMentioned);
}

void AttributeSet::add(AttributeKey key, std::string_view raw) {
  std::string value = util::trim(raw);
  if (value.empty() || is_absent_marker(value)) return;
  auto& v = values_[index(key)];
  if (!mentioned(key)) v.clear();
  if (std::find(v.begin(), v.end(), value) == v.end()) v.push_back(std::move(value));
}

void AttributeSet::clear(AttributeKey key) { values_[index(key)] = {std::string(kNotMentioned)}; }

bool AttributeSet::all_sentinel() const {
  return std::none_of(kAllAttributes.begin(), kAllAttributes.end(), [&](AttributeKey k) { return mentioned(k); });
}

std::string format_attribute_set(const AttributeSet& set, bool include_sentinels) {
  std::string out;
  for (auto key : kAllAttributes) {
    if (!include_sentinels && !set.mentioned(key)) continue;
    out += display_name(key);
    out += ": ";
    out += util::join(set.values(key), ", ");
    out += '\n';
  }
  return out;
}

}  // namespace pae::extract
