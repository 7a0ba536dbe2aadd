#include "pae/pipeline/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <algorithm>
#include <filesystem>
#include <functional>
#include <map>
#include <sstream>

#include "pae/error.hpp"
#include "pae/util/strings.hpp"

namespace pae::pipeline {

namespace fs = std::filesystem;

BackendKind parse_backend(const std::string& s) {
  const auto v = util::to_lower(util::trim(s));
  if (v == "mock") return BackendKind::Mock;
  if (v == "http") return BackendKind::Http;
  throw Error(ErrorCode::ConfigInvalid, "backend must be mock or http, got '" + s + "'");
}

OutputFormat parse_format(const std::string& s) {
  const auto v = util::to_lower(util::trim(s));
  if (v == "json") return OutputFormat::Json;
  if (v == "table") return OutputFormat::Table;
  throw Error(ErrorCode::ConfigInvalid, "format must be json or table, got '" + s + "'");
}

namespace {

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ConfigInvalid, key + ": not a number: '" + v + "'");
  }
}

long long to_int(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const long long n = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return n;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ConfigInvalid, key + ": not an integer: '" + v + "'");
  }
}

bool to_bool(const std::string& key, const std::string& v) {
  const auto s = util::to_lower(v);
  if (s == "true" || s == "yes" || s == "1" || s == "on") return true;
  if (s == "false" || s == "no" || s == "0" || s == "off") return false;
  throw Error(ErrorCode::ConfigInvalid, key + ": not a boolean: '" + v + "'");
}

std::vector<std::string> to_list(const std::string& v) {
  std::vector<std::string> out;
  for (auto& part : util::split(v, ','))
    if (auto t = util::trim(part); !t.empty()) out.push_back(t);
  return out;
}

using Setter = std::function<void(PipelineConfig&, const std::string& key, const std::string& value)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"input.paths", [](auto& c, auto&, auto& v) { c.inputs = to_list(v); }},
      {"llm.backend", [](auto& c, auto&, auto& v) { c.llm_backend = parse_backend(v); }},
      {"llm.endpoint", [](auto& c, auto&, auto& v) { c.llm_endpoint = v; }},
      {"llm.model", [](auto& c, auto&, auto& v) { c.llm_model = v; }},
      {"llm.lexicon", [](auto& c, auto&, auto& v) { c.lexicon_path = v; }},
      {"llm.prompt_id", [](auto& c, auto&, auto& v) { c.prompt_id = v; }},
      {"llm.image_prompt_id", [](auto& c, auto&, auto& v) { c.image_prompt_id = v; }},
      {"llm.temperature", [](auto& c, auto& k, auto& v) { c.temperature = to_double(k, v); }},
      {"llm.max_retries", [](auto& c, auto& k, auto& v) { c.max_retries = static_cast<int>(to_int(k, v)); }},
      {"llm.retry_base_ms", [](auto& c, auto& k, auto& v) { c.retry_base_ms = static_cast<int>(to_int(k, v)); }},
      {"embedding.backend", [](auto& c, auto&, auto& v) { c.embed_backend = parse_backend(v); }},
      {"embedding.endpoint", [](auto& c, auto&, auto& v) { c.embed_endpoint = v; }},
      {"embedding.model", [](auto& c, auto&, auto& v) { c.embed_model = v; }},
      {"clean.min_width", [](auto& c, auto& k, auto& v) { c.clean.min_width = static_cast<std::size_t>(to_int(k, v)); }},
      {"clean.min_height", [](auto& c, auto& k, auto& v) { c.clean.min_height = static_cast<std::size_t>(to_int(k, v)); }},
      {"clean.images", [](auto& c, auto& k, auto& v) { c.include_images = to_bool(k, v); }},
      {"ocr.command", [](auto& c, auto&, auto& v) { c.ocr_command = v; }},
      {"ocr.spelling", [](auto& c, auto&, auto& v) { c.spelling_path = v; }},
      {"normalize.aliases", [](auto& c, auto&, auto& v) { c.alias_path = v; }},
      {"match.catalog", [](auto& c, auto&, auto& v) { c.catalog_path = v; }},
      {"match.threshold", [](auto& c, auto& k, auto& v) { c.threshold = to_double(k, v); }},
      {"run.concurrency", [](auto& c, auto& k, auto& v) { c.concurrency = static_cast<int>(to_int(k, v)); }},
      {"run.output", [](auto& c, auto&, auto& v) { c.output_dir = v; }},
      {"run.format", [](auto& c, auto&, auto& v) { c.format = parse_format(v); }},
      {"run.redact_timings", [](auto& c, auto& k, auto& v) { c.redact_timings = to_bool(k, v); }},
      {"bench.seed", [](auto& c, auto& k, auto& v) { c.seed = static_cast<std::uint64_t>(to_int(k, v)); }},
      {"bench.pages",
       [](auto& c, auto& k, auto& v) {
         c.bench_pages.clear();
         for (const auto& p : to_list(v)) c.bench_pages.push_back(static_cast<std::size_t>(to_int(k, p)));
       }},
  };
  return table;
}

}  // namespace

PipelineConfig parse_config(const std::string& text, PipelineConfig base) {
  boost::property_tree::ptree tree;
  std::istringstream in(text);
  try {
    boost::property_tree::ini_parser::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw Error(ErrorCode::ConfigInvalid, std::string("config: ") + e.what());
  }
  for (const auto& [section, body] : tree) {
    if (body.empty() && !body.data().empty())
      throw Error(ErrorCode::ConfigInvalid, "config: key '" + section + "' is outside any section");
    for (const auto& [name, leaf] : body) {
      const std::string key = section + "." + name;
      auto it = setters().find(key);
      if (it == setters().end()) throw Error(ErrorCode::ConfigInvalid, "config: unknown setting '" + key + "'");
      it->second(base, key, util::trim(leaf.data()));
    }
  }
  return base;
}

PipelineConfig load_config(const std::string& path, PipelineConfig base) {
  std::string text;
  try {
    text = util::read_file(path);
  } catch (const Error& e) {
    throw Error(ErrorCode::ConfigInvalid, "cannot read config file " + path);
  }
  return parse_config(text, std::move(base));
}

void validate(const PipelineConfig& cfg) {
  const auto bad = [](const std::string& msg) { throw Error(ErrorCode::ConfigInvalid, msg); };
  if (!(cfg.temperature >= 0.0 && cfg.temperature <= 1.0)) bad("temperature must lie in [0, 1]");
  if (cfg.max_retries < 0) bad("max_retries must be >= 0");
  if (cfg.retry_base_ms < 0) bad("retry_base_ms must be >= 0");
  if (cfg.concurrency < 1) bad("concurrency must be >= 1");
  if (!(cfg.threshold >= 0.0 && cfg.threshold <= 1.0)) bad("threshold must lie in [0, 1]");
  if (cfg.llm_backend == BackendKind::Mock && cfg.lexicon_path.empty()) bad("the mock LLM backend needs a lexicon file");
  if (cfg.llm_backend == BackendKind::Mock && !fs::exists(cfg.lexicon_path))
    bad("lexicon file not found: " + cfg.lexicon_path);
  if (cfg.llm_backend == BackendKind::Http && cfg.llm_endpoint.empty()) bad("the http LLM backend needs an endpoint");
  if (cfg.embed_backend == BackendKind::Http && cfg.embed_endpoint.empty())
    bad("the http embedding backend needs an endpoint");
  if (cfg.require_match && cfg.catalog_path.empty()) bad("matching needs a catalog path");
  if (!cfg.catalog_path.empty() && !fs::exists(cfg.catalog_path)) bad("catalog file not found: " + cfg.catalog_path);
  if (!cfg.alias_path.empty() && !fs::exists(cfg.alias_path)) bad("alias table not found: " + cfg.alias_path);
  if (!cfg.spelling_path.empty() && !fs::exists(cfg.spelling_path)) bad("spelling file not found: " + cfg.spelling_path);
}

std::vector<std::string> expand_inputs(const std::vector<std::string>& inputs) {
  std::vector<std::string> out;
  for (const auto& in : inputs) {
    if (fs::is_directory(in)) {
      std::vector<std::string> found;
      for (const auto& e : fs::directory_iterator(in))
        if (e.is_regular_file() && util::to_lower(e.path().extension().string()) == ".pdf")
          found.push_back(e.path().string());
      std::sort(found.begin(), found.end());
      out.insert(out.end(), found.begin(), found.end());
    } else {
      out.push_back(in);
    }
  }
  return out;
}

}  // namespace pae::pipeline
