#pragma once

#include <string>
#include <vector>

#include "pae/eval/metrics.hpp"
#include "pae/pipeline/run.hpp"

namespace pae::pipeline {

// Canonical JSON of one document:
// {"document", "pages": [{"page", "text_attributes", "image_attributes",
//  "merged", "hashtags", "matches"}], "timings_ms", "warnings"}.
std::string document_json(const DocumentReport& doc, bool redact_timings = false);
std::string summary_json(const RunReport& report, const std::vector<std::string>& files, bool redact_timings = false);
std::string document_table(const DocumentReport& doc);

// Writes one file per document (<stem>.json or <stem>.txt, suffixed on
// name clashes) plus summary.json into `dir`, creating it if needed.
// Returns the paths written. Throws Error(IoError).
std::vector<std::string> emit_report(const RunReport& report, const std::string& dir, OutputFormat format,
                                     bool redact_timings = false);

// Reads a document JSON back. Throws Error(SchemaViolation).
DocumentReport parse_document_json(const std::string& json_text);

// Per-page predictions for scoring: the text set, the merge of the image
// sets, and the merged set.
struct ScoredViews {
  eval::Predictions text, image, merged;
};
ScoredViews prediction_views(const DocumentReport& doc, const normalize::AliasTable& aliases);

}  // namespace pae::pipeline
