#include "pae/normalize/boilerplate.hpp"

#include <cmath>
#include <map>
#include <regex>
#include <set>

#include "pae/error.hpp"
#include "pae/util/strings.hpp"

namespace pae::normalize {

namespace {

const std::regex& page_number_pattern() {
  static const std::regex re(R"(^\s*(page\s+)?\d{1,4}(\s*(/|of)\s*\d{1,4})?\s*$)", std::regex::icase);
  return re;
}

std::pair<std::string, long> repeat_key(const ingest::TextBlock& b, double band) {
  return {util::to_lower(util::collapse_whitespace(b.text)), std::lround(b.top / band)};
}

}  // namespace

std::vector<ingest::TextBlock> filter_boilerplate(const std::vector<ingest::TextBlock>& blocks,
                                                  const BoilerplateRules& rules) {
  std::vector<std::regex> extra;
  for (const auto& p : rules.extra_patterns) {
    try {
      extra.emplace_back(p);
    } catch (const std::regex_error& e) {
      throw Error(ErrorCode::ConfigInvalid, "bad boilerplate pattern '" + p + "': " + e.what());
    }
  }
  std::set<std::pair<std::string, long>> repeated;
  if (rules.drop_repeated) {
    const double band = rules.band_height > 0 ? rules.band_height : 36.0;
    std::map<std::pair<std::string, long>, std::set<std::size_t>> pages_by_key;
    std::set<std::size_t> pages;
    for (const auto& b : blocks) {
      pages.insert(b.page_index);
      if (b.origin == ingest::TextOrigin::Native) pages_by_key[repeat_key(b, band)].insert(b.page_index);
    }
    const double total = static_cast<double>(rules.page_count ? rules.page_count : pages.size());
    for (const auto& [key, on_pages] : pages_by_key)
      if (on_pages.size() >= 2 && static_cast<double>(on_pages.size()) >= rules.min_page_fraction * total)
        repeated.insert(key);
  }
  std::vector<ingest::TextBlock> kept;
  for (const auto& b : blocks) {
    if (rules.drop_page_numbers && std::regex_match(b.text, page_number_pattern())) continue;
    if (!repeated.empty() && repeated.count(repeat_key(b, rules.band_height > 0 ? rules.band_height : 36.0))) continue;
    bool hit = false;
    for (const auto& re : extra) hit = hit || std::regex_match(b.text, re);
    if (hit) continue;
    kept.push_back(b);
  }
  return kept;
}

}  // namespace pae::normalize
