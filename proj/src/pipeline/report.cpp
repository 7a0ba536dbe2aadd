#include "pae/pipeline/report.hpp"

#include <cmath>
#include <filesystem>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pae/error.hpp"
#include "pae/util/strings.hpp"

namespace pae::pipeline {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

namespace {

ojson attributes_json(const extract::AttributeSet& set) {
  ojson j = ojson::object();
  for (auto key : extract::kAllAttributes) j[std::string(extract::display_name(key))] = set.values(key);
  return j;
}

double round6(double x) { return std::round(x * 1e6) / 1e6; }

ojson timings_json(const std::map<std::string, double>& timings, bool redact) {
  ojson j = ojson::object();
  for (const auto& [stage, ms] : timings) j[stage] = redact ? 0.0 : std::round(ms * 1000.0) / 1000.0;
  return j;
}

ojson document_object(const DocumentReport& doc, bool redact) {
  ojson j;
  j["document"] = doc.document;
  ojson pages = ojson::array();
  for (const auto& p : doc.pages) {
    ojson pj;
    pj["page"] = p.page;
    pj["text_attributes"] = attributes_json(p.text_set);
    ojson images = ojson::array();
    for (const auto& s : p.image_sets) {
      ojson ij;
      ij["image_hash"] = s.image_hash() ? util::to_hex(*s.image_hash()) : std::string();
      const ojson attrs = attributes_json(s);
      for (const auto& [k, v] : attrs.items()) ij[k] = v;
      images.push_back(std::move(ij));
    }
    pj["image_attributes"] = std::move(images);
    pj["merged"] = attributes_json(p.merged.attributes);
    ojson tags = ojson::array();
    for (const auto& h : p.merged.hashtags) tags.push_back(h.tag);
    pj["hashtags"] = std::move(tags);
    ojson matches = ojson::array();
    for (const auto& m : p.matches) {
      ojson mj;
      mj["attribute"] = std::string(extract::display_name(m.attribute));
      mj["predicted"] = m.predicted_value;
      mj["catalog"] = m.best_catalog_value ? ojson(*m.best_catalog_value) : ojson(nullptr);
      mj["similarity"] = round6(m.similarity);
      mj["matched"] = m.matched;
      matches.push_back(std::move(mj));
    }
    pj["matches"] = std::move(matches);
    pages.push_back(std::move(pj));
  }
  j["pages"] = std::move(pages);
  j["timings_ms"] = timings_json(doc.timings_ms, redact);
  j["warnings"] = doc.warnings;
  return j;
}

}  // namespace

std::string document_json(const DocumentReport& doc, bool redact_timings) {
  return document_object(doc, redact_timings).dump(2) + "\n";
}

std::string summary_json(const RunReport& report, const std::vector<std::string>& files, bool redact_timings) {
  ojson j;
  ojson docs = ojson::array();
  for (std::size_t i = 0; i < report.documents.size(); ++i) {
    const auto& d = report.documents[i];
    ojson dj;
    dj["document"] = d.document;
    dj["report"] = i < files.size() ? files[i] : std::string();
    dj["pages"] = d.pages.size();
    dj["status"] = d.failed ? "failed" : "ok";
    dj["warnings"] = d.warnings.size();
    docs.push_back(std::move(dj));
  }
  j["documents"] = std::move(docs);
  j["timings_ms"] = timings_json(report.timings_ms, redact_timings);
  j["warnings"] = report.warnings;
  j["exit_code"] = report.exit_code();
  return j.dump(2) + "\n";
}

std::string document_table(const DocumentReport& doc) {
  std::ostringstream os;
  os << "Document: " << doc.document << (doc.failed ? "  [FAILED]" : "") << "\n";
  for (const auto& p : doc.pages) {
    os << "\nPage " << p.page << "\n";
    for (auto key : extract::kAllAttributes)
      os << "  " << extract::display_name(key) << ": " << util::join(p.merged.attributes.values(key), ", ") << "\n";
    if (!p.merged.hashtags.empty()) {
      std::vector<std::string> tags;
      for (const auto& h : p.merged.hashtags) tags.push_back("#" + h.tag);
      os << "  Hashtags: " << util::join(tags, " ") << "\n";
    }
    os << "  Images: " << p.image_sets.size() << "\n";
    for (const auto& m : p.matches) {
      char sim[32];
      std::snprintf(sim, sizeof sim, "%.3f", m.similarity);
      os << "  match " << extract::display_name(m.attribute) << " '" << m.predicted_value << "' -> "
         << (m.best_catalog_value ? "'" + *m.best_catalog_value + "'" : std::string("none")) << " (" << sim << ", "
         << (m.matched ? "matched" : "unmatched") << ")\n";
    }
  }
  if (!doc.warnings.empty()) {
    os << "\nWarnings:\n";
    for (const auto& w : doc.warnings) os << "  " << w << "\n";
  }
  return os.str();
}

std::vector<std::string> emit_report(const RunReport& report, const std::string& dir, OutputFormat format,
                                     bool redact_timings) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create output directory " + dir + ": " + ec.message());
  const std::string ext = format == OutputFormat::Json ? ".json" : ".txt";
  std::set<std::string> used{"summary"};
  std::vector<std::string> names, written;
  for (const auto& d : report.documents) {
    std::string stem = fs::path(d.document).stem().string();
    if (stem.empty()) stem = "document";
    std::string name = stem;
    for (int k = 2; used.count(name); ++k) name = stem + "-" + std::to_string(k);
    used.insert(name);
    names.push_back(name + ext);
  }
  for (std::size_t i = 0; i < report.documents.size(); ++i) {
    const auto path = (fs::path(dir) / names[i]).string();
    const auto& d = report.documents[i];
    util::write_file(path, format == OutputFormat::Json ? document_json(d, redact_timings) : document_table(d));
    written.push_back(path);
  }
  const auto summary = (fs::path(dir) / "summary.json").string();
  util::write_file(summary, summary_json(report, names, redact_timings));
  written.push_back(summary);
  return written;
}

namespace {

util::Digest256 from_hex(const std::string& hex) {
  util::Digest256 d{};
  if (hex.size() != 64) throw Error(ErrorCode::SchemaViolation, "image_hash must be 64 hex digits");
  for (std::size_t i = 0; i < 32; ++i) {
    unsigned v = 0;
    for (int k = 0; k < 2; ++k) {
      const char c = hex[2 * i + k];
      v <<= 4;
      if (c >= '0' && c <= '9') v |= c - '0';
      else if (c >= 'a' && c <= 'f') v |= c - 'a' + 10;
      else if (c >= 'A' && c <= 'F') v |= c - 'A' + 10;
      else throw Error(ErrorCode::SchemaViolation, "image_hash is not hex");
    }
    d[i] = static_cast<std::uint8_t>(v);
  }
  return d;
}

void read_attributes(const nlohmann::json& j, extract::AttributeSet& set, bool allow_hash) {
  if (!j.is_object()) throw Error(ErrorCode::SchemaViolation, "attribute map must be an object");
  for (const auto& [name, values] : j.items()) {
    if (allow_hash && name == "image_hash") continue;
    const auto key = extract::parse_attribute_key(name);
    if (!key) throw Error(ErrorCode::SchemaViolation, "unknown attribute '" + name + "'");
    if (!values.is_array()) throw Error(ErrorCode::SchemaViolation, "values of '" + name + "' must be an array");
    for (const auto& v : values) set.add(*key, v.get<std::string>());
  }
}

}  // namespace

DocumentReport parse_document_json(const std::string& json_text) {
  DocumentReport doc;
  try {
    const auto j = nlohmann::json::parse(json_text);
    doc.document = j.at("document").get<std::string>();
    for (const auto& pj : j.at("pages")) {
      PageReport p;
      p.page = pj.at("page").get<std::size_t>();
      p.text_set = extract::AttributeSet(extract::Source::Text, p.page);
      read_attributes(pj.at("text_attributes"), p.text_set, false);
      for (const auto& ij : pj.at("image_attributes")) {
        extract::AttributeSet s(extract::Source::Image, p.page);
        read_attributes(ij, s, true);
        if (ij.contains("image_hash") && !ij["image_hash"].get<std::string>().empty())
          s.set_image_hash(from_hex(ij["image_hash"].get<std::string>()));
        p.image_sets.push_back(std::move(s));
      }
      p.merged.page_index = p.page;
      p.merged.attributes = extract::AttributeSet(extract::Source::Merged, p.page);
      read_attributes(pj.at("merged"), p.merged.attributes, false);
      for (const auto& t : pj.at("hashtags")) p.merged.hashtags.push_back({t.get<std::string>(), p.page});
      if (pj.contains("matches"))
        for (const auto& mj : pj["matches"]) {
          match::MatchResult m;
          const auto key = extract::parse_attribute_key(mj.at("attribute").get<std::string>());
          if (!key) throw Error(ErrorCode::SchemaViolation, "unknown attribute in matches");
          m.attribute = *key;
          m.predicted_value = mj.at("predicted").get<std::string>();
          if (!mj.at("catalog").is_null()) m.best_catalog_value = mj["catalog"].get<std::string>();
          m.similarity = mj.at("similarity").get<double>();
          m.matched = mj.at("matched").get<bool>();
          p.matches.push_back(std::move(m));
        }
      doc.pages.push_back(std::move(p));
    }
    if (j.contains("timings_ms"))
      for (const auto& [stage, ms] : j["timings_ms"].items()) doc.timings_ms[stage] = ms.get<double>();
    if (j.contains("warnings")) doc.warnings = j["warnings"].get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SchemaViolation, std::string("report JSON: ") + e.what());
  }
  return doc;
}

ScoredViews prediction_views(const DocumentReport& doc, const normalize::AliasTable& aliases) {
  ScoredViews v;
  for (const auto& p : doc.pages) {
    v.text.emplace(p.page, normalize::canonicalize_set(p.text_set, aliases));
    if (p.image_sets.empty())
      v.image.emplace(p.page, extract::AttributeSet(extract::Source::Merged, p.page));
    else
      v.image.emplace(p.page, normalize::merge_attribute_sets(p.image_sets, aliases).attributes);
    v.merged.emplace(p.page, normalize::canonicalize_set(p.merged.attributes, aliases));
  }
  return v;
}

}  // namespace pae::pipeline
