#include "pae/extract/page_attributes.hpp"

#include "pae/extract/response_parser.hpp"
#include "pae/util/strings.hpp"

namespace pae::extract {

std::string page_text(const ingest::Page& page) {
  std::string text;
  for (const auto& block : page.text_blocks) {
    if (!text.empty()) text += "\n\n";
    text += block.text;
  }
  return text;
}

PageAttributes extract_page_attributes(const ingest::Page& page, LlmBackend& backend, const TemplateSet& templates,
                                       const ModelParams& params, const PageExtractOptions& options) {
  PageAttributes out;
  out.page_index = page.index;
  out.text_set = AttributeSet(Source::Text, page.index);

  const std::string text = page_text(page);
  out.hashtags = extract_hashtags(options.hashtag_text ? *options.hashtag_text : text, page.index);

  if (!util::trim(text).empty()) {
    try {
      const auto resp = query_llm(backend, build_text_prompt(templates.text, text), params, options.retry);
      out.text_set = parse_attribute_response(resp.text, page.index, Source::Text, &out.warnings);
    } catch (const Error& e) {
      out.errors.push_back({e.code(), e.what(), std::nullopt});
    }
  }

  if (!options.include_images) return out;
  for (std::size_t i = 0; i < page.images.size(); ++i) {
    const auto& img = page.images[i];
    try {
      const auto resp = query_llm(backend, build_image_prompt(templates.image, img), params, options.retry);
      AttributeSet set = parse_attribute_response(resp.text, page.index, Source::Image, &out.warnings);
      set.set_image_hash(img.content_hash);
      out.image_sets.push_back(std::move(set));
    } catch (const Error& e) {
      out.errors.push_back({e.code(), e.what(), i});
    }
  }
  return out;
}

}  // namespace pae::extract
