#include "pae/ingest/clean.hpp"

#include <set>

namespace pae::ingest {

std::vector<ExtractedImage> clean_images(const std::vector<ExtractedImage>& images, const CleanPolicy& policy) {
  std::vector<ExtractedImage> kept;
  std::set<util::Digest256> seen;
  for (const auto& img : images) {
    if (img.width < policy.min_width || img.height < policy.min_height) continue;
    if (!seen.insert(img.content_hash).second) continue;
    kept.push_back(img);
  }
  return kept;
}

}  // namespace pae::ingest
