#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pae::pipeline {

struct SynthSpec {
  std::size_t pages = 10;
  std::size_t words_min = 500, words_max = 1000;
  std::size_t images_min = 4, images_max = 6;
  std::size_t image_px_min = 96, image_px_max = 160;  // square side, stays above the clean threshold
  std::uint64_t seed = 1;
};

struct SynthPage {
  std::size_t page = 0;
  std::string text;  // exactly what native extraction returns
  std::size_t word_count = 0;
  std::vector<std::string> image_hashes;  // sha256 hex of the extracted PNG bytes
  std::vector<std::string> hashtags;      // without '#'
};

struct SynthManifest {
  SynthSpec spec;
  std::vector<SynthPage> pages;
};

struct SynthDocument {
  std::string pdf;
  SynthManifest manifest;
};

// Throws Error(PreconditionViolation) for empty or inverted ranges.
void validate(const SynthSpec& spec);

// Pure function of the spec.
SynthDocument generate_synthetic(const SynthSpec& spec);

// Writes the PDF to `out_path` and the manifest JSON next to it
// (<out_path>.manifest.json). Throws Error(IoError).
SynthManifest generate_synthetic_document(const SynthSpec& spec, const std::string& out_path);

std::string manifest_json(const SynthManifest& manifest);

// Mock LLM lexicon covering the attribute phrases the generator plants.
std::string synthetic_lexicon_json();

}  // namespace pae::pipeline
