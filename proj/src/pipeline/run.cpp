#include "pae/pipeline/run.hpp"

#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <mutex>
#include <sstream>

#include "pae/error.hpp"
#include "pae/ingest/clean.hpp"
#include "pae/ingest/raster.hpp"
#include "pae/pipeline/report.hpp"
#include "pae/util/strings.hpp"

namespace pae::pipeline {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::map<std::string, std::string> load_spelling(const std::string& path) {
  std::map<std::string, std::string> fixes;
  std::istringstream in(util::read_file(path));
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    const auto t = util::trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto arrow = t.find("=>");
    if (arrow == std::string::npos)
      throw Error(ErrorCode::ConfigInvalid, path + ":" + std::to_string(n) + ": expected 'wrong => right'");
    fixes[util::trim(t.substr(0, arrow))] = util::trim(t.substr(arrow + 2));
  }
  return fixes;
}

std::string env_or_empty(const char* name) {
  const char* v = std::getenv(name);
  return v ? v : "";
}

// Owns whatever the caller did not inject.
struct Context {
  const PipelineConfig& cfg;
  Services svc;
  std::unique_ptr<extract::LlmBackend> own_llm;
  std::unique_ptr<match::EmbeddingProvider> own_embed;
  std::unique_ptr<ingest::OcrEngine> own_ocr;
  std::unique_ptr<ingest::SpellCorrector> own_speller;
  normalize::AliasTable aliases;
  std::optional<match::Catalog> catalog;
  std::unique_ptr<match::EmbeddingCache> cache;

  Context(const PipelineConfig& c, Services s, bool need_llm) : cfg(c), svc(std::move(s)) {
    aliases = cfg.alias_path.empty() ? normalize::default_alias_table() : normalize::load_alias_table(cfg.alias_path);
    if (need_llm && !svc.llm) {
      own_llm = make_llm_backend(cfg);
      svc.llm = own_llm.get();
    }
    if (!svc.ocr) {
      if (cfg.ocr_command.empty())
        own_ocr = std::make_unique<ingest::NoOcrEngine>();
      else
        own_ocr = std::make_unique<ingest::CommandOcrEngine>(cfg.ocr_command);
      svc.ocr = own_ocr.get();
    }
    if (!svc.speller) {
      if (cfg.spelling_path.empty())
        own_speller = std::make_unique<ingest::IdentityCorrector>();
      else
        own_speller = std::make_unique<ingest::DictionaryCorrector>(load_spelling(cfg.spelling_path));
      svc.speller = own_speller.get();
    }
    if (!cfg.catalog_path.empty()) {
      try {
        catalog = match::load_catalog(cfg.catalog_path, aliases);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::FileNotFound) throw Error(ErrorCode::ConfigInvalid, e.what());
        throw;
      }
      if (!svc.embeddings) {
        own_embed = make_embedding_provider(cfg);
        svc.embeddings = own_embed.get();
      }
      cache = std::make_unique<match::EmbeddingCache>(*svc.embeddings);
    }
  }
};

void run_match_stage(DocumentReport& doc, Context& ctx) {
  for (auto& page : doc.pages) {
    page.matches.clear();
    if (!page.merged.attributes.all_sentinel())
      page.matches = match::match_attributes(page.merged, *ctx.catalog, *ctx.cache, ctx.cfg.threshold);
  }
}

DocumentReport process_document(const std::string& path, Context& ctx) {
  const auto& cfg = ctx.cfg;
  DocumentReport out;
  out.document = std::filesystem::path(path).filename().string();

  auto t0 = Clock::now();
  ingest::Document doc;
  try {
    doc = ingest::load_document(path);
  } catch (const Error& e) {
    out.failed = true;
    out.warnings.push_back(e.what());
    out.timings_ms["ingest"] = ms_since(t0);
    return out;
  }

  const auto n = static_cast<std::ptrdiff_t>(doc.page_count);
  std::vector<ingest::Page> pages(doc.pages.begin(), doc.pages.end());
  std::vector<std::vector<std::string>> warn(pages.size());
  std::vector<char> page_failed(pages.size(), 0);
  std::mutex ocr_mu;
  ingest::OcrEngine& ocr = *ctx.svc.ocr;

#pragma omp parallel for schedule(dynamic) num_threads(cfg.concurrency)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    auto& page = pages[idx];
    try {
      page.text_blocks = ingest::extract_text_native(doc, idx, &warn[idx]);
      bool has_text = false;
      for (const auto& b : page.text_blocks) has_text = has_text || !util::trim(b.text).empty();
      if (!has_text) {
        page.text_blocks.clear();
        if (ocr.available()) {
          const auto raster = ingest::preprocess_raster(ingest::rasterize_page(doc, idx));
          std::unique_lock<std::mutex> lock(ocr_mu, std::defer_lock);
          if (!ocr.concurrent()) lock.lock();
          page.text_blocks = ingest::extract_text_ocr(raster, ocr, idx);
        } else {
          warn[idx].push_back("no native text and no OCR engine configured");
        }
      }
      if (cfg.include_images) page.images = ingest::clean_images(ingest::extract_images(doc, idx, &warn[idx]), cfg.clean);
    } catch (const Error& e) {
      page_failed[idx] = 1;
      warn[idx].push_back(e.what());
    }
  }

  std::vector<ingest::TextBlock> all_blocks;
  for (auto& p : pages) {
    all_blocks.insert(all_blocks.end(), p.text_blocks.begin(), p.text_blocks.end());
    p.text_blocks.clear();
  }
  normalize::BoilerplateRules rules;
  rules.page_count = pages.size();
  for (auto& b : normalize::filter_boilerplate(all_blocks, rules)) pages[b.page_index].text_blocks.push_back(std::move(b));

  std::vector<std::string> hashtag_text(pages.size());
  for (std::size_t i = 0; i < pages.size(); ++i) {
    hashtag_text[i] = extract::page_text(pages[i]);
    ingest::correct_ocr_blocks(pages[i].text_blocks, *ctx.svc.speller);
  }
  out.timings_ms["ingest"] = ms_since(t0);

  t0 = Clock::now();
  extract::ModelParams params;
  params.temperature = cfg.temperature;
  params.max_retries = cfg.max_retries;
  params.backend_id = ctx.svc.llm->id();
  extract::TemplateSet templates{extract::builtin_template(cfg.prompt_id), extract::builtin_template(cfg.image_prompt_id)};
  extract::LimitedBackend limited(*ctx.svc.llm, cfg.concurrency);
  std::vector<extract::PageAttributes> attrs(pages.size());

#pragma omp parallel for schedule(dynamic) num_threads(cfg.concurrency)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    extract::PageExtractOptions opts;
    opts.include_images = cfg.include_images;
    opts.retry.base = std::chrono::milliseconds(cfg.retry_base_ms);
    opts.retry.sleep = ctx.svc.sleep;
    opts.hashtag_text = hashtag_text[idx];
    attrs[idx] = extract::extract_page_attributes(pages[idx], limited, templates, params, opts);
  }
  out.timings_ms["extract"] = ms_since(t0);

  t0 = Clock::now();
  std::size_t calls_failed = 0, calls_total = 0;
  for (std::size_t i = 0; i < pages.size(); ++i) {
    auto& a = attrs[i];
    PageReport pr;
    pr.page = i;
    pr.text_set = a.text_set;
    pr.image_sets = a.image_sets;
    pr.errors = a.errors;
    std::vector<extract::AttributeSet> sets{a.text_set};
    sets.insert(sets.end(), a.image_sets.begin(), a.image_sets.end());
    pr.merged = normalize::merge_attribute_sets(sets, ctx.aliases, a.hashtags);
    calls_total += a.image_sets.size() + a.errors.size() + (util::trim(extract::page_text(pages[i])).empty() ? 0 : 1);
    calls_failed += a.errors.size();
    for (const auto& w : warn[i]) out.warnings.push_back("page " + std::to_string(i) + ": " + w);
    for (const auto& w : a.warnings) out.warnings.push_back("page " + std::to_string(i) + ": " + w);
    for (const auto& e : a.errors)
      out.warnings.push_back("page " + std::to_string(i) + ": " +
                             (e.image_position ? "image " + std::to_string(*e.image_position) : std::string("text")) +
                             " call failed: " + e.message);
    out.pages.push_back(std::move(pr));
  }
  out.timings_ms["merge"] = ms_since(t0);

  if (ctx.catalog) {
    t0 = Clock::now();
    run_match_stage(out, ctx);
    out.timings_ms["match"] = ms_since(t0);
  }

  bool all_pages_failed = !pages.empty();
  for (char f : page_failed) all_pages_failed = all_pages_failed && f;
  out.failed = all_pages_failed || (calls_total > 0 && calls_failed == calls_total);
  return out;
}

void add_timings(RunReport& report, const DocumentReport& doc) {
  for (const auto& [stage, ms] : doc.timings_ms) report.timings_ms[stage] += ms;
}

}  // namespace

int RunReport::exit_code() const {
  for (const auto& d : documents)
    if (d.failed) return 1;
  return 0;
}

std::unique_ptr<extract::LlmBackend> make_llm_backend(const PipelineConfig& cfg) {
  if (cfg.llm_backend == BackendKind::Mock) {
    try {
      return std::make_unique<extract::MockLlmBackend>(extract::load_lexicon(cfg.lexicon_path));
    } catch (const Error& e) {
      throw Error(ErrorCode::ConfigInvalid, std::string("lexicon: ") + e.what());
    }
  }
  return std::make_unique<extract::HttpLlmBackend>(
      extract::HttpBackendConfig{cfg.llm_endpoint, cfg.llm_model, env_or_empty("PAE_LLM_TOKEN"), 60});
}

std::unique_ptr<match::EmbeddingProvider> make_embedding_provider(const PipelineConfig& cfg) {
  if (cfg.embed_backend == BackendKind::Mock) return std::make_unique<match::TrigramProvider>();
  return std::make_unique<match::HttpEmbeddingProvider>(
      match::HttpEmbeddingConfig{cfg.embed_endpoint, cfg.embed_model, env_or_empty("PAE_EMBED_TOKEN"), 60});
}

RunReport run_pipeline(const PipelineConfig& cfg, Services services) {
  const auto start = Clock::now();
  PipelineConfig checked = cfg;
  if (services.llm && checked.llm_backend == BackendKind::Mock && checked.lexicon_path.empty())
    checked.lexicon_path = ".";  // an injected backend needs no lexicon
  validate(checked);
  extract::builtin_template(cfg.prompt_id);
  extract::builtin_template(cfg.image_prompt_id);

  Context ctx(cfg, std::move(services), true);
  RunReport report;
  for (const auto& path : expand_inputs(cfg.inputs)) {
    report.documents.push_back(process_document(path, ctx));
    add_timings(report, report.documents.back());
  }
  report.timings_ms["total"] = ms_since(start);
  if (!cfg.output_dir.empty()) emit_report(report, cfg.output_dir, cfg.format, cfg.redact_timings);
  return report;
}

void match_reports(RunReport& report, const PipelineConfig& cfg, Services services) {
  const auto start = Clock::now();
  PipelineConfig checked = cfg;
  checked.require_match = true;
  checked.llm_backend = BackendKind::Mock;
  checked.lexicon_path = ".";
  validate(checked);
  Context ctx(cfg, std::move(services), false);
  report.timings_ms.clear();
  for (auto& doc : report.documents) {
    const auto t0 = Clock::now();
    for (auto& page : doc.pages) {
      std::vector<extract::AttributeSet> sets{page.merged.attributes};
      page.merged = normalize::merge_attribute_sets(sets, ctx.aliases, page.merged.hashtags);
      page.merged.provenance.clear();
    }
    run_match_stage(doc, ctx);
    doc.timings_ms["match"] = ms_since(t0);
    add_timings(report, doc);
  }
  report.timings_ms["total"] = ms_since(start);
  if (!cfg.output_dir.empty()) emit_report(report, cfg.output_dir, cfg.format, cfg.redact_timings);
}

}  // namespace pae::pipeline
