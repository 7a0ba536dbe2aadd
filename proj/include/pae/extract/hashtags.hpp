#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace pae::extract {

struct Hashtag {
  std::string tag;  // without '#'
  std::size_t page_index = 0;
  bool operator==(const Hashtag&) const = default;
};

// Every '#' followed by a maximal run of [A-Za-z0-9_], in order of
// appearance, duplicates kept.
std::vector<Hashtag> extract_hashtags(std::string_view text, std::size_t page_index = 0);

}  // namespace pae::extract
