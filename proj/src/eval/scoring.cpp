#include "pae/eval/scoring.hpp"

#include <cstdio>
#include <sstream>

#include "pae/error.hpp"

namespace pae::eval {

std::optional<double> macro_average(const std::vector<std::optional<double>>& values) {
  double sum = 0.0;
  std::size_t n = 0;
  for (const auto& v : values)
    if (v) {
      sum += *v;
      ++n;
    }
  if (n == 0) return std::nullopt;
  return sum / static_cast<double>(n);
}

DatasetTable aggregate_report(const std::vector<DatasetScore>& datasets) {
  if (datasets.empty()) throw Error(ErrorCode::PreconditionViolation, "aggregate needs at least one dataset");
  DatasetTable t;
  t.rows = datasets;
  std::vector<std::optional<double>> text, image;
  for (const auto& d : datasets) {
    text.push_back(d.text_f1);
    image.push_back(d.image_f1);
  }
  t.average = {"Average", macro_average(text), macro_average(image)};
  return t;
}

namespace {
std::string row(const std::string& a, const std::string& b, const std::string& c) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-28s %10s %10s\n", a.c_str(), b.c_str(), c.c_str());
  return buf;
}
}  // namespace

std::string format_dataset_table(const DatasetTable& table) {
  std::string out = row("Dataset", "F1 (text)", "F1 (image)");
  for (const auto& r : table.rows) out += row(r.name, format_percent(r.text_f1), format_percent(r.image_f1));
  out += row(table.average.name, format_percent(table.average.text_f1), format_percent(table.average.image_f1));
  return out;
}

std::string format_metrics(const MetricsReport& r, const std::string& title) {
  std::ostringstream os;
  os << title << "\n";
  os << "  precision " << format_percent(r.precision) << "  recall " << format_percent(r.recall) << "  accuracy "
     << format_percent(r.accuracy) << "  f1 " << format_percent(r.f1) << "\n";
  os << "  tp " << r.counts.tp << "  fp " << r.counts.fp << "  fn " << r.counts.fn << "  tn " << r.counts.tn << "\n";
  for (const auto& [key, acc] : r.per_attribute)
    os << "  " << extract::display_name(key) << ": " << format_percent(acc) << "\n";
  return os.str();
}

}  // namespace pae::eval
