// Command-line front end: extract, match, eval, bench, synth.
#include <cstdio>
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "pae/error.hpp"
#include "pae/eval/scoring.hpp"
#include "pae/pipeline/bench.hpp"
#include "pae/pipeline/report.hpp"
#include "pae/pipeline/run.hpp"
#include "pae/pipeline/synth.hpp"
#include "pae/util/strings.hpp"

namespace fs = std::filesystem;
using namespace pae;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPartial = 1;
constexpr int kExitConfig = 2;

struct Flags {
  std::vector<std::string> inputs;
  std::string config, output, format, backend, prompt_id, lexicon, catalog, aliases, ground_truth;
  double temperature = 0, threshold = 0;
  int concurrency = 0, repeats = 1;
  bool no_images = false, redact_timings = false;
  std::uint64_t seed = 1;
  std::vector<std::size_t> pages;
};

struct Options {
  CLI::Option *input = nullptr, *config = nullptr, *output = nullptr, *format = nullptr, *backend = nullptr,
              *prompt_id = nullptr, *temperature = nullptr, *threshold = nullptr, *no_images = nullptr,
              *concurrency = nullptr, *seed = nullptr, *pages = nullptr, *lexicon = nullptr, *catalog = nullptr,
              *aliases = nullptr, *redact = nullptr;
};

Options add_common(CLI::App* app, Flags& f) {
  Options o;
  o.input = app->add_option("-i,--input", f.inputs, "PDF files, directories, or report JSON files");
  o.config = app->add_option("-c,--config", f.config, "configuration file");
  o.output = app->add_option("-o,--output", f.output, "output directory (or file for synth)");
  o.format = app->add_option("--format", f.format, "json or table");
  o.backend = app->add_option("--backend", f.backend, "mock or http (LLM and embeddings)");
  o.prompt_id = app->add_option("--prompt-id", f.prompt_id, "text prompt template id");
  o.temperature = app->add_option("--temperature", f.temperature, "sampling temperature in [0, 1]");
  o.threshold = app->add_option("--threshold", f.threshold, "catalog match threshold in [0, 1]");
  o.no_images = app->add_flag("--no-images", f.no_images, "skip image extraction");
  o.concurrency = app->add_option("--concurrency", f.concurrency, "pages processed at once");
  o.seed = app->add_option("--seed", f.seed, "generator seed");
  o.pages = app->add_option("--pages", f.pages, "page counts (bench) or page count (synth)")->delimiter(',');
  o.lexicon = app->add_option("--lexicon", f.lexicon, "mock LLM lexicon");
  o.catalog = app->add_option("--catalog", f.catalog, "catalog CSV");
  o.aliases = app->add_option("--aliases", f.aliases, "extra alias rules");
  o.redact = app->add_flag("--redact-timings", f.redact_timings, "write zero timings");
  return o;
}

pipeline::PipelineConfig resolve(const Flags& f, const Options& o) {
  pipeline::PipelineConfig cfg;
  if (*o.config) cfg = pipeline::load_config(f.config, cfg);
  if (*o.input) cfg.inputs = f.inputs;
  if (*o.output) cfg.output_dir = f.output;
  if (*o.format) cfg.format = pipeline::parse_format(f.format);
  if (*o.backend) cfg.llm_backend = cfg.embed_backend = pipeline::parse_backend(f.backend);
  if (*o.prompt_id) cfg.prompt_id = f.prompt_id;
  if (*o.temperature) cfg.temperature = f.temperature;
  if (*o.threshold) cfg.threshold = f.threshold;
  if (*o.no_images) cfg.include_images = false;
  if (*o.concurrency) cfg.concurrency = f.concurrency;
  if (*o.seed) cfg.seed = f.seed;
  if (*o.pages) cfg.bench_pages = f.pages;
  if (*o.lexicon) cfg.lexicon_path = f.lexicon;
  if (*o.catalog) cfg.catalog_path = f.catalog;
  if (*o.aliases) cfg.alias_path = f.aliases;
  if (*o.redact) cfg.redact_timings = true;
  return cfg;
}

std::vector<std::string> report_files(const std::vector<std::string>& inputs) {
  std::vector<std::string> out;
  for (const auto& in : inputs) {
    if (fs::is_directory(in)) {
      std::vector<std::string> found;
      for (const auto& e : fs::directory_iterator(in))
        if (e.path().extension() == ".json" && e.path().filename() != "summary.json") found.push_back(e.path().string());
      std::sort(found.begin(), found.end());
      out.insert(out.end(), found.begin(), found.end());
    } else {
      out.push_back(in);
    }
  }
  return out;
}

pipeline::RunReport read_reports(const std::vector<std::string>& inputs) {
  pipeline::RunReport report;
  for (const auto& path : report_files(inputs))
    report.documents.push_back(pipeline::parse_document_json(util::read_file(path)));
  return report;
}

void print_report(const pipeline::RunReport& report, pipeline::OutputFormat format) {
  for (const auto& d : report.documents)
    std::cout << (format == pipeline::OutputFormat::Json ? pipeline::document_json(d) : pipeline::document_table(d));
}

int cmd_extract(const pipeline::PipelineConfig& cfg) {
  const auto report = pipeline::run_pipeline(cfg);
  if (cfg.output_dir.empty()) print_report(report, cfg.format);
  for (const auto& d : report.documents)
    for (const auto& w : d.warnings) std::cerr << "warning: " << d.document << ": " << w << "\n";
  return report.exit_code() == 0 ? kExitOk : kExitPartial;
}

int cmd_match(pipeline::PipelineConfig cfg) {
  cfg.require_match = true;
  auto report = read_reports(cfg.inputs);
  pipeline::match_reports(report, cfg);
  if (cfg.output_dir.empty()) print_report(report, cfg.format);
  return kExitOk;
}

int cmd_eval(const pipeline::PipelineConfig& cfg, const std::string& gt_path) {
  if (gt_path.empty()) throw Error(ErrorCode::ConfigInvalid, "eval needs --ground-truth");
  const auto aliases =
      cfg.alias_path.empty() ? normalize::default_alias_table() : normalize::load_alias_table(cfg.alias_path);
  const auto gt = eval::load_ground_truth(gt_path, aliases);
  const auto report = read_reports(cfg.inputs);
  std::vector<eval::DatasetScore> rows;
  for (const auto& d : report.documents) {
    const auto views = pipeline::prediction_views(d, aliases);
    const auto text = eval::score(views.text, gt);
    const auto image = eval::score(views.image, gt);
    const auto merged = eval::score(views.merged, gt);
    std::cout << eval::format_metrics(merged, d.document + " (merged)");
    std::cout << eval::format_metrics(text, d.document + " (text)");
    std::cout << eval::format_metrics(image, d.document + " (image)");
    rows.push_back({fs::path(d.document).stem().string(), text.f1, image.f1});
  }
  if (!rows.empty()) std::cout << "\n" << eval::format_dataset_table(eval::aggregate_report(rows));
  std::cout << "Image attributes are scored per page against the page's ground truth.\n";
  return kExitOk;
}

int cmd_bench(const pipeline::PipelineConfig& cfg, int repeats) {
  pipeline::SynthSpec spec;
  spec.seed = cfg.seed;
  const auto rows = pipeline::bench(cfg.bench_pages, spec, cfg, repeats);
  std::cout << pipeline::bench_table(rows);
  for (std::size_t i = 1; i < rows.size(); ++i)
    std::printf("doubling ratio %zu -> %zu: %.3f\n", rows[i - 1].pages, rows[i].pages,
                pipeline::doubling_ratio(rows[i - 1], rows[i]));
  return kExitOk;
}

int cmd_synth(const pipeline::PipelineConfig& cfg, const Flags& f, const Options& o) {
  if (cfg.output_dir.empty()) throw Error(ErrorCode::ConfigInvalid, "synth needs --output <file.pdf>");
  pipeline::SynthSpec spec;
  spec.seed = cfg.seed;
  if (*o.pages) {
    if (f.pages.size() != 1) throw Error(ErrorCode::ConfigInvalid, "synth takes a single --pages value");
    spec.pages = f.pages.front();
  }
  const auto m = pipeline::generate_synthetic_document(spec, cfg.output_dir);
  std::cout << "wrote " << cfg.output_dir << " (" << m.pages.size() << " pages) and " << cfg.output_dir
            << ".manifest.json\n";
  if (*o.lexicon) util::write_file(f.lexicon, pipeline::synthetic_lexicon_json());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Product attribute extraction from PDF trend reports"};
  app.require_subcommand(1);
  Flags f;
  auto* extract = app.add_subcommand("extract", "extract, normalize and (with a catalog) match attributes");
  auto* match = app.add_subcommand("match", "match saved report JSON against a catalog");
  auto* evalc = app.add_subcommand("eval", "score report JSON against ground truth");
  auto* benchc = app.add_subcommand("bench", "time the pipeline on synthetic documents");
  auto* synth = app.add_subcommand("synth", "write a synthetic trend report and its manifest");
  std::map<CLI::App*, Options> opts;
  for (auto* sub : {extract, match, evalc, benchc, synth}) opts[sub] = add_common(sub, f);
  evalc->add_option("--ground-truth", f.ground_truth, "ground-truth JSON")->required();
  benchc->add_option("--repeats", f.repeats, "runs per size, best kept");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    auto cfg = resolve(f, opts[sub]);
    if (sub == extract) return cmd_extract(cfg);
    if (sub == match) return cmd_match(cfg);
    if (sub == evalc) return cmd_eval(cfg, f.ground_truth);
    if (sub == benchc) return cmd_bench(cfg, f.repeats);
    return cmd_synth(cfg, f, opts[sub]);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::ConfigInvalid ? kExitConfig : kExitPartial;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPartial;
  }
}
