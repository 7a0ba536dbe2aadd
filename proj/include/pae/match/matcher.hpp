#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pae/match/catalog.hpp"
#include "pae/match/embedding.hpp"
#include "pae/normalize/merge.hpp"

namespace pae::match {

inline constexpr double kDefaultThreshold = 0.85;

struct MatchResult {
  std::string predicted_value;
  extract::AttributeKey attribute;
  std::optional<std::string> best_catalog_value;
  double similarity = 0.0;
  bool matched = false;
};

// Each non-sentinel predicted value is compared with every catalog value
// under the same key; the first maximum wins. Results follow key order,
// then predicted-value order. Provider errors are rethrown with the
// offending value in the message. Throws Error(ConfigInvalid) when
// threshold is outside [0, 1].
std::vector<MatchResult> match_attributes(const normalize::MergedPageAttributes& predicted, const Catalog& catalog,
                                          EmbeddingCache& cache, double threshold = kDefaultThreshold);
std::vector<MatchResult> match_attributes(const normalize::MergedPageAttributes& predicted, const Catalog& catalog,
                                          EmbeddingProvider& provider, double threshold = kDefaultThreshold);

}  // namespace pae::match
