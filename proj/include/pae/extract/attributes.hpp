#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pae/util/sha256.hpp"

namespace pae::extract {

enum class AttributeKey { Color, SleeveStyle, ProductType, Material, Features, Categories, Age, Neck };

inline constexpr std::size_t kAttributeCount = 8;
inline constexpr std::array<AttributeKey, kAttributeCount> kAllAttributes = {
    AttributeKey::Color,    AttributeKey::SleeveStyle, AttributeKey::ProductType, AttributeKey::Material,
    AttributeKey::Features, AttributeKey::Categories,  AttributeKey::Age,         AttributeKey::Neck};

inline constexpr std::string_view kNotMentioned = "Not Mentioned";

// "Sleeve Style", "Product Type", ...
std::string_view display_name(AttributeKey key);

// Case-, space- and underscore-insensitive. Accepts the synonyms
// "Age Group", "Neck Style" and "Product Categories".
std::optional<AttributeKey> parse_attribute_key(std::string_view text);

// "Not Mentioned", "N/A", "NA", "None" (any case) all mean "no value".
bool is_absent_marker(std::string_view value);

enum class Source { Text, Image, Merged };
std::string_view to_string(Source source);

// Eight keys, each holding either real values or exactly ["Not Mentioned"].
class AttributeSet {
 public:
  AttributeSet(Source source = Source::Text, std::size_t page_index = 0);

  const std::vector<std::string>& values(AttributeKey key) const { return values_[index(key)]; }
  bool mentioned(AttributeKey key) const;

  // Trims `value`; ignores empties, absent markers and exact duplicates.
  // The first real value replaces the sentinel.
  void add(AttributeKey key, std::string_view value);
  void clear(AttributeKey key);

  Source source() const { return source_; }
  std::size_t page_index() const { return page_index_; }
  const std::optional<util::Digest256>& image_hash() const { return image_hash_; }
  void set_image_hash(const util::Digest256& h) { image_hash_ = h; }

  bool all_sentinel() const;
  bool operator==(const AttributeSet&) const = default;

 private:
  static std::size_t index(AttributeKey key) { return static_cast<std::size_t>(key); }

  std::array<std::vector<std::string>, kAttributeCount> values_;
  Source source_;
  std::size_t page_index_;
  std::optional<util::Digest256> image_hash_;
};

// "Key: v1, v2" per line in canonical key order; the inverse of the response
// parser for sentinel-free, comma-free values.
std::string format_attribute_set(const AttributeSet& set, bool include_sentinels = true);

}  // namespace pae::extract
