#include "pae/extract/hashtags.hpp"

#include <cctype>

namespace pae::extract {

namespace {
bool word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
}  // namespace

std::vector<Hashtag> extract_hashtags(std::string_view text, std::size_t page_index) {
  std::vector<Hashtag> tags;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '#') continue;
    std::size_t end = i + 1;
    while (end < text.size() && word_char(text[end])) ++end;
    if (end > i + 1) {
      tags.push_back({std::string(text.substr(i + 1, end - i - 1)), page_index});
      i = end - 1;
    }
  }
  return tags;
}

}  // namespace pae::extract
