#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pae/ingest/document.hpp"

namespace pae::extract {

enum class Modality { Text, Image };

inline constexpr std::string_view kPayloadPlaceholder = "{text}";

struct PromptTemplate {
  std::string id;
  std::string body;
  Modality modality = Modality::Text;
};

// Validates placeholder count: exactly one for text templates, none for
// image templates. Throws Error(ConfigInvalid).
PromptTemplate make_template(std::string id, std::string body, Modality modality);

// Built-in ids: "default" (the attribute prompt "Generate me color, ..."),
// "prompt1" / "prompt2" / "prompt3" (the prompt-sensitivity variants) and
// "image-default".
const PromptTemplate& builtin_template(std::string_view id);
std::vector<std::string> builtin_template_ids();

struct InlineImage {
  std::string mime_type;
  std::string data;  // base64
};

struct LlmRequest {
  std::string prompt;
  // The text substituted into the template. Transport backends send only
  // `prompt`; the mock backend scans this so template wording cannot leak
  // into its matches.
  std::string payload;
  std::optional<InlineImage> image;
};

struct LlmResponse {
  std::string text;
  double latency_ms = 0;
};

LlmRequest build_text_prompt(const PromptTemplate& tpl, std::string_view text);
std::string encode_image_base64(const ingest::ExtractedImage& img);
LlmRequest build_image_prompt(const PromptTemplate& tpl, const ingest::ExtractedImage& img);

}  // namespace pae::extract
