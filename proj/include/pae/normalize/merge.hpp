#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "pae/extract/attributes.hpp"
#include "pae/extract/hashtags.hpp"
#include "pae/normalize/alias_table.hpp"

namespace pae::normalize {

// Provenance labels: "text", "image:<sha256 hex>", or "merged" for inputs
// that were already merged.
std::string provenance_label(const extract::AttributeSet& set);

struct MergedPageAttributes {
  std::size_t page_index = 0;
  extract::AttributeSet attributes{extract::Source::Merged};
  std::vector<extract::Hashtag> hashtags;
  std::map<extract::AttributeKey, std::map<std::string, std::set<std::string>>> provenance;
};

// Per key: union of canonicalized values in first-seen order; the sentinel
// survives only when no set has a real value. Throws Error(MixedPages) if
// the sets disagree on page_index and Error(PreconditionViolation) if empty.
MergedPageAttributes merge_attribute_sets(const std::vector<extract::AttributeSet>& sets, const AliasTable& aliases,
                                          std::vector<extract::Hashtag> hashtags = {});

// Canonicalizes every value of a single set in place of merging.
extract::AttributeSet canonicalize_set(const extract::AttributeSet& set, const AliasTable& aliases);

}  // namespace pae::normalize
