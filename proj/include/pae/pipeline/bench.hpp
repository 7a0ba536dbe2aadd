#pragma once

#include <string>
#include <vector>

#include "pae/pipeline/config.hpp"
#include "pae/pipeline/synth.hpp"

namespace pae::pipeline {

struct BenchRow {
  std::size_t pages = 0;
  double seconds = 0;  // best of `repeats`
};

// For each N: generate a synthetic document of N pages from `tmpl` (seed
// kept), then time run_pipeline over it with the mock LLM and trigram
// embeddings. Generation is not timed. cfg supplies concurrency, images,
// catalog and threshold; its backends are ignored.
std::vector<BenchRow> bench(const std::vector<std::size_t>& page_counts, const SynthSpec& tmpl,
                            const PipelineConfig& cfg, int repeats = 1);

// (t2/t1)^(ln 2 / ln(N2/N1)): the time ratio scaled to one doubling of N.
double doubling_ratio(const BenchRow& a, const BenchRow& b);

std::string bench_table(const std::vector<BenchRow>& rows);

}  // namespace pae::pipeline
