#include "pae/extract/prompt.hpp"

#include <map>

#include "pae/error.hpp"
#include "pae/util/base64.hpp"
#include "pae/util/strings.hpp"

namespace pae::extract {

namespace {

std::size_t count_placeholders(std::string_view body) {
  std::size_t n = 0;
  for (auto pos = body.find(kPayloadPlaceholder); pos != std::string_view::npos;
       pos = body.find(kPayloadPlaceholder, pos + kPayloadPlaceholder.size()))
    ++n;
  return n;
}

const std::map<std::string, PromptTemplate, std::less<>>& builtins() {
  static const std::map<std::string, PromptTemplate, std::less<>> table = [] {
    std::map<std::string, PromptTemplate, std::less<>> t;
    auto add = [&](std::string id, std::string body, Modality m) { t.emplace(id, make_template(id, std::move(body), m)); };
    add("default",
        "Generate me color, sleeve style, product type, material, features, categories, age and neck attributes "
        "from the following text:\n{text}",
        Modality::Text);
    add("prompt1", "Give me all clothing characteristics of a product from the following text:\n{text}", Modality::Text);
    add("prompt2",
        "Give me color, sleeve style, product type, material, cloth features, categories, and neck attributes from "
        "the following text:\n{text}",
        Modality::Text);
    add("prompt3",
        "I want you to act as a product attribute extractor in retail space.Given the unstructured text data, you "
        "need to find different product attributes in the text. For example: For Input as \xE2\x80\x98Long contrast "
        "fabric Sleeve red cotton adult polo shirts for men with contemporary design element\xE2\x80\x99, the "
        "attribute extractor will return color attribute is red, sleeve attribute is Long, style sleeve attribute "
        "is contrast fabric, product type attribute is polo shirts, material attribute is cotton, feature attribute "
        "is contemporary,categories is polo shirts,  gender attribute is men and neck attribute is NA. Give me "
        "attributes like color, sleeve style, product type, material, features, categories, and neck attributes "
        "from the following text: {text}",
        Modality::Text);
    add("image-default",
        "Generate a list format color, sleeve style, product type, material attributes from the the below image. "
        "Also give me features, categories, age and neck attributes from below image.",
        Modality::Image);
    return t;
  }();
  return table;
}

}  // namespace

PromptTemplate make_template(std::string id, std::string body, Modality modality) {
  const auto n = count_placeholders(body);
  if (modality == Modality::Text && n != 1)
    throw Error(ErrorCode::ConfigInvalid, "text template '" + id + "' needs exactly one {text} placeholder");
  if (modality == Modality::Image && n != 0)
    throw Error(ErrorCode::ConfigInvalid, "image template '" + id + "' must not contain {text}");
  return PromptTemplate{std::move(id), std::move(body), modality};
}

const PromptTemplate& builtin_template(std::string_view id) {
  const auto& t = builtins();
  auto it = t.find(id);
  if (it == t.end()) throw Error(ErrorCode::ConfigInvalid, "unknown prompt id: " + std::string(id));
  return it->second;
}

std::vector<std::string> builtin_template_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, tpl] : builtins()) ids.push_back(id);
  return ids;
}

LlmRequest build_text_prompt(const PromptTemplate& tpl, std::string_view text) {
  if (tpl.modality != Modality::Text) throw Error(ErrorCode::WrongModality, "template '" + tpl.id + "' is an image template");
  if (util::trim(text).empty()) throw Error(ErrorCode::EmptyText, "no text to extract attributes from");
  LlmRequest req;
  const auto pos = tpl.body.find(kPayloadPlaceholder);
  req.prompt = tpl.body.substr(0, pos);
  req.prompt += text;
  req.prompt += tpl.body.substr(pos + kPayloadPlaceholder.size());
  req.payload = std::string(text);
  return req;
}

std::string encode_image_base64(const ingest::ExtractedImage& img) {
  if (img.bytes.empty()) throw Error(ErrorCode::EmptyImage, "image has no bytes");
  return util::base64_encode(img.bytes);
}

LlmRequest build_image_prompt(const PromptTemplate& tpl, const ingest::ExtractedImage& img) {
  if (tpl.modality != Modality::Image) throw Error(ErrorCode::WrongModality, "template '" + tpl.id + "' is a text template");
  if (img.format == ingest::ImageFormat::Other)
    throw Error(ErrorCode::UnsupportedFormat, "no MIME type for image format 'other'");
  LlmRequest req;
  req.prompt = tpl.body;
  req.image = InlineImage{ingest::mime_type(img.format), encode_image_base64(img)};
  return req;
}

}  // namespace pae::extract
