#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pae/eval/metrics.hpp"

namespace pae::eval {

struct DatasetScore {
  std::string name;
  std::optional<double> text_f1;
  std::optional<double> image_f1;
};

struct DatasetTable {
  std::vector<DatasetScore> rows;
  DatasetScore average;  // macro average over rows with a defined value
};

// Throws Error(PreconditionViolation) when `datasets` is empty.
DatasetTable aggregate_report(const std::vector<DatasetScore>& datasets);
std::optional<double> macro_average(const std::vector<std::optional<double>>& values);

std::string format_dataset_table(const DatasetTable& table);
std::string format_metrics(const MetricsReport& report, const std::string& title);

}  // namespace pae::eval
