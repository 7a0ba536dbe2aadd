#include "pae/match/catalog.hpp"

#include <boost/tokenizer.hpp>
#include <set>
#include <sstream>

#include "pae/error.hpp"
#include "pae/util/strings.hpp"

namespace pae::match {

namespace {

std::vector<std::string> csv_fields(const std::string& line, std::size_t line_no) {
  using Tok = boost::tokenizer<boost::escaped_list_separator<char>>;
  std::vector<std::string> out;
  try {
    for (const auto& f : Tok(line)) out.push_back(util::trim(f));
  } catch (const boost::escaped_list_error& e) {
    throw Error(ErrorCode::SchemaViolation, "catalog line " + std::to_string(line_no) + ": " + e.what());
  }
  return out;
}

}  // namespace

Catalog parse_catalog(const std::string& csv, const normalize::AliasTable& aliases) {
  Catalog out;
  std::istringstream in(csv);
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::set<std::pair<extract::AttributeKey, std::string>> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (util::trim(line).empty()) continue;
    auto fields = csv_fields(line, line_no);
    if (!header_seen) {
      header_seen = true;
      if (fields.size() < 2 || fields.size() > 3 || !util::iequals(fields[0], "attribute") ||
          !util::iequals(fields[1], "value") || (fields.size() == 3 && !util::iequals(fields[2], "category")))
        throw Error(ErrorCode::SchemaViolation,
                    "catalog line " + std::to_string(line_no) + ": header must be attribute,value[,category]");
      continue;
    }
    const auto where = "catalog line " + std::to_string(line_no) + ": ";
    if (fields.size() < 2 || fields.size() > 3)
      throw Error(ErrorCode::SchemaViolation, where + "expected 2 or 3 fields, got " + std::to_string(fields.size()));
    const auto key = extract::parse_attribute_key(fields[0]);
    if (!key) throw Error(ErrorCode::SchemaViolation, where + "unknown attribute '" + fields[0] + "'");
    if (fields[1].empty() || extract::is_absent_marker(fields[1]))
      throw Error(ErrorCode::SchemaViolation, where + "empty value");
    CatalogEntry e{*key, normalize::canonicalize_value(fields[1], aliases), std::nullopt};
    if (fields.size() == 3 && !fields[2].empty()) e.category = fields[2];
    if (seen.emplace(e.attribute, e.value).second) out.push_back(std::move(e));
  }
  return out;
}

Catalog load_catalog(const std::string& path, const normalize::AliasTable& aliases) {
  return parse_catalog(util::read_file(path), aliases);
}

}  // namespace pae::match
