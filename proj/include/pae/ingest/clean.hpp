#pragma once

#include <cstddef>
#include <vector>

#include "pae/ingest/document.hpp"

namespace pae::ingest {

struct CleanPolicy {
  std::size_t min_width = 64;
  std::size_t min_height = 64;
};

// Keeps input order; drops undersized images and any image whose content
// hash matches an earlier kept image.
std::vector<ExtractedImage> clean_images(const std::vector<ExtractedImage>& images, const CleanPolicy& policy = {});

}  // namespace pae::ingest
