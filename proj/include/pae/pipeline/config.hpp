#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pae/ingest/clean.hpp"

namespace pae::pipeline {

enum class BackendKind { Mock, Http };
enum class OutputFormat { Json, Table };

struct PipelineConfig {
  std::vector<std::string> inputs;  // PDF files or directories of PDFs

  BackendKind llm_backend = BackendKind::Mock;
  std::string llm_endpoint;
  std::string llm_model;
  std::string lexicon_path;  // mock LLM
  std::string prompt_id = "default";
  std::string image_prompt_id = "image-default";
  double temperature = 0.2;
  int max_retries = 2;
  int retry_base_ms = 1000;

  BackendKind embed_backend = BackendKind::Mock;
  std::string embed_endpoint;
  std::string embed_model;

  ingest::CleanPolicy clean;
  bool include_images = true;
  std::string ocr_command;      // empty: no OCR engine
  std::string spelling_path;    // "wrong => right" lines; empty: no correction
  std::string alias_path;       // extra alias rules on top of the defaults
  std::string catalog_path;     // empty: match stage skipped
  bool require_match = false;   // set by the match subcommand
  double threshold = 0.85;

  int concurrency = 4;
  std::string output_dir;  // empty: nothing written
  OutputFormat format = OutputFormat::Json;
  bool redact_timings = false;  // zero every timing so reports are byte-stable

  std::uint64_t seed = 1;
  std::vector<std::size_t> bench_pages = {10, 50, 100, 500};
};

// INI-style file with sections [input] [llm] [embedding] [clean] [ocr]
// [normalize] [match] [run] [bench]; unknown sections or keys are errors.
// Settings are applied on top of `base`. Throws Error(ConfigInvalid).
PipelineConfig parse_config(const std::string& text, PipelineConfig base = {});
PipelineConfig load_config(const std::string& path, PipelineConfig base = {});

// Throws Error(ConfigInvalid): temperature outside [0, 1], concurrency < 1,
// threshold outside [0, 1], mock LLM without a lexicon, http backends
// without an endpoint, a configured catalog that does not exist, or
// require_match without a catalog.
void validate(const PipelineConfig& cfg);

BackendKind parse_backend(const std::string& s);
OutputFormat parse_format(const std::string& s);

// Expands directories to their *.pdf files (sorted); files pass through.
std::vector<std::string> expand_inputs(const std::vector<std::string>& inputs);

}  // namespace pae::pipeline
