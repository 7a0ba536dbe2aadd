#pragma once

#include <string>
#include <vector>

#include "pae/ingest/document.hpp"

namespace pae::normalize {

struct BoilerplateRules {
  bool drop_page_numbers = true;  // "12", "Page 3", "3 / 10", "3 of 10"
  bool drop_repeated = true;
  double min_page_fraction = 0.5;  // repeated line must appear on >= this share of pages
  double band_height = 36.0;       // points; "same position" = same band
  std::size_t page_count = 0;      // 0: number of distinct pages among the blocks
  std::vector<std::string> extra_patterns;  // ECMAScript regexes matched against the whole block
};

// Drops page-number blocks and header/footer lines that repeat (same text,
// same vertical band) across enough pages. Order is preserved.
std::vector<ingest::TextBlock> filter_boilerplate(const std::vector<ingest::TextBlock>& blocks,
                                                  const BoilerplateRules& rules = {});

}  // namespace pae::normalize
