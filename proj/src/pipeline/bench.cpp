#include "pae/pipeline/bench.hpp"

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>

#include "pae/error.hpp"
#include "pae/extract/llm.hpp"
#include "pae/match/embedding.hpp"
#include "pae/pipeline/run.hpp"
#include "pae/util/strings.hpp"

namespace pae::pipeline {

namespace fs = std::filesystem;

std::vector<BenchRow> bench(const std::vector<std::size_t>& page_counts, const SynthSpec& tmpl,
                            const PipelineConfig& cfg, int repeats) {
  std::vector<BenchRow> rows;
  if (page_counts.empty()) return rows;
  const fs::path dir = fs::temp_directory_path() / ("pae-bench-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  extract::MockLlmBackend llm(extract::parse_lexicon(synthetic_lexicon_json()));
  match::TrigramProvider embed;
  try {
    for (std::size_t n : page_counts) {
      SynthSpec spec = tmpl;
      spec.pages = n;
      const auto pdf = (dir / ("synthetic-" + std::to_string(n) + ".pdf")).string();
      generate_synthetic_document(spec, pdf);

      PipelineConfig run = cfg;
      run.inputs = {pdf};
      run.output_dir.clear();
      run.llm_backend = BackendKind::Mock;
      run.embed_backend = BackendKind::Mock;
      run.ocr_command.clear();

      BenchRow row{n, 0.0};
      for (int r = 0; r < std::max(1, repeats); ++r) {
        Services svc;
        svc.llm = &llm;
        svc.embeddings = &embed;
        const auto t0 = std::chrono::steady_clock::now();
        const auto report = run_pipeline(run, svc);
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (report.exit_code() != 0) throw Error(ErrorCode::EngineFailure, "benchmark run failed on " + pdf);
        row.seconds = r == 0 ? s : std::min(row.seconds, s);
      }
      rows.push_back(row);
    }
  } catch (...) {
    std::error_code ec;
    fs::remove_all(dir, ec);
    throw;
  }
  std::error_code ec;
  fs::remove_all(dir, ec);
  return rows;
}

double doubling_ratio(const BenchRow& a, const BenchRow& b) {
  return std::pow(b.seconds / a.seconds,
                  std::log(2.0) / std::log(static_cast<double>(b.pages) / static_cast<double>(a.pages)));
}

std::string bench_table(const std::vector<BenchRow>& rows) {
  std::string out = "pages  seconds\n";
  char buf[64];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%5zu  %.4f\n", r.pages, r.seconds);
    out += buf;
  }
  return out;
}

}  // namespace pae::pipeline
