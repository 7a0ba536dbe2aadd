#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pae/error.hpp"
#include "pae/extract/attributes.hpp"
#include "pae/extract/hashtags.hpp"
#include "pae/extract/llm.hpp"
#include "pae/extract/prompt.hpp"
#include "pae/ingest/document.hpp"

namespace pae::extract {

struct TemplateSet {
  PromptTemplate text = builtin_template("default");
  PromptTemplate image = builtin_template("image-default");
};

struct CallError {
  ErrorCode code;
  std::string message;
  std::optional<std::size_t> image_position;  // empty for the text call
};

struct PageAttributes {
  std::size_t page_index = 0;
  AttributeSet text_set;
  std::vector<AttributeSet> image_sets;  // one per image, page order
  std::vector<Hashtag> hashtags;
  std::vector<CallError> errors;
  std::vector<std::string> warnings;
};

struct PageExtractOptions {
  bool include_images = true;
  RetryPolicy retry;
  // Text to scan for hashtags, before spell correction. Defaults to the
  // page's joined text blocks.
  std::optional<std::string> hashtag_text;
};

// Page text = text blocks joined by blank lines.
std::string page_text(const ingest::Page& page);

// One text call (skipped when the page has no text) plus one call per
// image. Failed calls are recorded in `errors`; a failed text call leaves
// the all-sentinel set and a failed image call drops that image's set.
PageAttributes extract_page_attributes(const ingest::Page& page, LlmBackend& backend, const TemplateSet& templates,
                                       const ModelParams& params, const PageExtractOptions& options = {});

}  // namespace pae::extract
