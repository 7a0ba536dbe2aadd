#include "pae/eval/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "pae/error.hpp"

namespace pae::eval {

MetricCounts compare_key(const extract::AttributeSet& pred, const extract::AttributeSet& gt, extract::AttributeKey key) {
  MetricCounts c;
  const bool pred_has = pred.mentioned(key);
  if (!gt.mentioned(key)) {
    if (pred_has)
      c.fp += std::set<std::string>(pred.values(key).begin(), pred.values(key).end()).size();
    else
      c.tn += 1;
    return c;
  }
  const std::set<std::string> g(gt.values(key).begin(), gt.values(key).end());
  std::set<std::string> p;
  if (pred_has) p.insert(pred.values(key).begin(), pred.values(key).end());
  for (const auto& v : p) (g.count(v) ? c.tp : c.fp) += 1;
  for (const auto& v : g) c.fn += p.count(v) ? 0 : 1;
  return c;
}

MetricCounts compare_page(const extract::AttributeSet& pred, const extract::AttributeSet& gt) {
  MetricCounts c;
  for (auto key : extract::kAllAttributes) c += compare_key(pred, gt, key);
  return c;
}

namespace {
std::optional<double> ratio(std::size_t num, std::size_t den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}
}  // namespace

std::optional<double> precision(const MetricCounts& c) { return ratio(c.tp, c.tp + c.fp); }
std::optional<double> recall(const MetricCounts& c) { return ratio(c.tp, c.tp + c.fn); }
std::optional<double> accuracy(const MetricCounts& c) { return ratio(c.tp + c.tn, c.tp + c.tn + c.fp + c.fn); }
std::optional<double> f1(const MetricCounts& c) { return f1(precision(c), recall(c)); }

std::optional<double> f1(std::optional<double> p, std::optional<double> r) {
  if (!p || !r || *p + *r == 0.0) return std::nullopt;
  return 2.0 * *p * *r / (*p + *r);
}

double round_percent(double fraction) {
  // The 1e-9 nudge keeps values such as 0.9685 (stored as 0.96849999...)
  // on the half-up side.
  return std::floor(fraction * 1000.0 + 0.5 + 1e-9) / 10.0;
}

std::string format_percent(std::optional<double> fraction) {
  if (!fraction) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", round_percent(*fraction));
  return buf;
}

MetricsReport make_report(const MetricCounts& counts) {
  MetricsReport r;
  r.counts = counts;
  r.precision = precision(counts);
  r.recall = recall(counts);
  r.accuracy = accuracy(counts);
  r.f1 = f1(counts);
  return r;
}

namespace {

template <class Fn>
void for_each_pair(const Predictions& preds, const GroundTruth& gts, Fn fn) {
  for (const auto& [page, set] : preds)
    if (!gts.count(page)) throw Error(ErrorCode::MissingPages, "page " + std::to_string(page) + " has no ground truth");
  for (const auto& [page, gt] : gts) {
    auto it = preds.find(page);
    fn(it == preds.end() ? extract::AttributeSet(extract::Source::Merged, page) : it->second, gt);
  }
}

}  // namespace

std::map<extract::AttributeKey, std::optional<double>> per_attribute_accuracy(const Predictions& preds,
                                                                              const GroundTruth& gts) {
  std::map<extract::AttributeKey, MetricCounts> counts;
  for_each_pair(preds, gts, [&](const extract::AttributeSet& p, const extract::AttributeSet& g) {
    for (auto key : extract::kAllAttributes) counts[key] += compare_key(p, g, key);
  });
  std::map<extract::AttributeKey, std::optional<double>> out;
  for (auto key : extract::kAllAttributes) out[key] = accuracy(counts[key]);
  return out;
}

MetricsReport score(const Predictions& preds, const GroundTruth& gts) {
  MetricCounts total;
  for_each_pair(preds, gts, [&](const extract::AttributeSet& p, const extract::AttributeSet& g) {
    total += compare_page(p, g);
  });
  auto r = make_report(total);
  r.per_attribute = per_attribute_accuracy(preds, gts);
  return r;
}

}  // namespace pae::eval
