#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "pae/eval/ground_truth.hpp"
#include "pae/extract/attributes.hpp"

namespace pae::eval {

struct MetricCounts {
  std::size_t tp = 0, fp = 0, fn = 0, tn = 0;

  MetricCounts& operator+=(const MetricCounts& o) {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    tn += o.tn;
    return *this;
  }
  bool operator==(const MetricCounts&) const = default;
};

// Value-level set comparison per key. Both sides must be canonicalized.
MetricCounts compare_key(const extract::AttributeSet& pred, const extract::AttributeSet& gt, extract::AttributeKey key);
MetricCounts compare_page(const extract::AttributeSet& pred, const extract::AttributeSet& gt);

// Empty when the denominator is zero.
std::optional<double> precision(const MetricCounts& c);
std::optional<double> recall(const MetricCounts& c);
std::optional<double> accuracy(const MetricCounts& c);
std::optional<double> f1(const MetricCounts& c);
// From precision and recall directly; empty when either is missing or
// both are zero.
std::optional<double> f1(std::optional<double> precision, std::optional<double> recall);

// 0.96854 -> 96.9 (half-up on the first decimal of the percentage).
double round_percent(double fraction);
// "96.9" or "n/a".
std::string format_percent(std::optional<double> fraction);

struct MetricsReport {
  std::optional<double> precision, recall, accuracy, f1;
  MetricCounts counts;
  std::map<extract::AttributeKey, std::optional<double>> per_attribute;
};

MetricsReport make_report(const MetricCounts& counts);

using Predictions = std::map<std::size_t, extract::AttributeSet>;

// Throws Error(MissingPages) when a predicted page has no ground truth.
// Ground-truth pages without predictions are scored as all-sentinel
// predictions.
std::map<extract::AttributeKey, std::optional<double>> per_attribute_accuracy(const Predictions& preds,
                                                                              const GroundTruth& gts);
MetricsReport score(const Predictions& preds, const GroundTruth& gts);

}  // namespace pae::eval
