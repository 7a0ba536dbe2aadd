#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pae/extract/page_attributes.hpp"
#include "pae/ingest/ocr.hpp"
#include "pae/match/matcher.hpp"
#include "pae/normalize/boilerplate.hpp"
#include "pae/normalize/merge.hpp"
#include "pae/pipeline/config.hpp"

namespace pae::pipeline {

struct PageReport {
  std::size_t page = 0;
  extract::AttributeSet text_set;
  std::vector<extract::AttributeSet> image_sets;
  normalize::MergedPageAttributes merged;
  std::vector<match::MatchResult> matches;
  std::vector<extract::CallError> errors;
};

// Stage names: "ingest", "extract", "merge", "match".
struct DocumentReport {
  std::string document;
  std::vector<PageReport> pages;  // ascending page index
  std::map<std::string, double> timings_ms;
  std::vector<std::string> warnings;
  bool failed = false;
};

struct RunReport {
  std::vector<DocumentReport> documents;
  std::map<std::string, double> timings_ms;  // per-stage totals plus "total"
  std::vector<std::string> warnings;

  // 0 when every document produced output, 1 when any wholly failed.
  int exit_code() const;
};

// Everything the pipeline talks to. Null members are built from the config.
struct Services {
  extract::LlmBackend* llm = nullptr;
  match::EmbeddingProvider* embeddings = nullptr;
  ingest::OcrEngine* ocr = nullptr;
  ingest::SpellCorrector* speller = nullptr;
  std::function<void(std::chrono::milliseconds)> sleep;  // retry backoff; default sleeps
};

// Validates `cfg`, processes documents one after another and pages in
// parallel, then writes reports when cfg.output_dir is set. Per-document
// failures are recorded and processing continues.
RunReport run_pipeline(const PipelineConfig& cfg, Services services = {});

// Stage 4 alone, on reports produced earlier (for example read back from
// JSON).
void match_reports(RunReport& report, const PipelineConfig& cfg, Services services = {});

// Backends named by the config (mock LLM from the lexicon, trigram or
// HTTP embeddings; tokens from PAE_LLM_TOKEN / PAE_EMBED_TOKEN).
std::unique_ptr<extract::LlmBackend> make_llm_backend(const PipelineConfig& cfg);
std::unique_ptr<match::EmbeddingProvider> make_embedding_provider(const PipelineConfig& cfg);

}  // namespace pae::pipeline
