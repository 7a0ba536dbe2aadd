#include "pae/normalize/merge.hpp"

#include "pae/error.hpp"

namespace pae::normalize {

std::string provenance_label(const extract::AttributeSet& set) {
  if (set.source() == extract::Source::Image && set.image_hash()) return "image:" + util::to_hex(*set.image_hash());
  return std::string(extract::to_string(set.source()));
}

MergedPageAttributes merge_attribute_sets(const std::vector<extract::AttributeSet>& sets, const AliasTable& aliases,
                                          std::vector<extract::Hashtag> hashtags) {
  if (sets.empty()) throw Error(ErrorCode::PreconditionViolation, "merge needs at least one attribute set");
  MergedPageAttributes out;
  out.page_index = sets.front().page_index();
  out.attributes = extract::AttributeSet(extract::Source::Merged, out.page_index);
  out.hashtags = std::move(hashtags);
  for (const auto& set : sets) {
    if (set.page_index() != out.page_index)
      throw Error(ErrorCode::MixedPages, "attribute sets from pages " + std::to_string(out.page_index) + " and " +
                                             std::to_string(set.page_index()));
    const std::string label = provenance_label(set);
    for (auto key : extract::kAllAttributes) {
      if (!set.mentioned(key)) continue;
      for (const auto& value : set.values(key)) {
        const std::string canon = canonicalize_value(value, aliases);
        out.attributes.add(key, canon);
        out.provenance[key][canon].insert(label);
      }
    }
  }
  return out;
}

extract::AttributeSet canonicalize_set(const extract::AttributeSet& set, const AliasTable& aliases) {
  extract::AttributeSet out(set.source(), set.page_index());
  if (set.image_hash()) out.set_image_hash(*set.image_hash());
  for (auto key : extract::kAllAttributes)
    if (set.mentioned(key))
      for (const auto& v : set.values(key)) out.add(key, canonicalize_value(v, aliases));
  return out;
}

}  // namespace pae::normalize
