#include "pae/normalize/alias_table.hpp"

#include "pae/error.hpp"
#include "pae/util/strings.hpp"

namespace pae::normalize {

std::string alias_key(std::string_view raw) {
  std::string out;
  for (char c : util::to_lower(util::collapse_whitespace(raw)))
    if (c != '-' && c != '_' && c != '.') out.push_back(c);
  return util::collapse_whitespace(out);
}

void AliasTable::add(std::string_view variant, std::string_view canonical) {
  const std::string canon = util::collapse_whitespace(util::trim(canonical));
  if (canon.empty() || alias_key(variant).empty())
    throw Error(ErrorCode::ConfigInvalid, "alias rule with empty side");
  for (const auto& key : {alias_key(variant), alias_key(canon)}) {
    auto [it, inserted] = rules_.emplace(key, canon);
    if (!inserted && it->second != canon)
      throw Error(ErrorCode::ConfigInvalid, "alias '" + key + "' maps to both '" + it->second + "' and '" + canon + "'");
  }
}

const std::string* AliasTable::lookup(std::string_view raw) const {
  auto it = rules_.find(alias_key(raw));
  return it == rules_.end() ? nullptr : &it->second;
}

AliasTable default_alias_table() {
  AliasTable t;
  for (auto v : {"vneck", "v neck", "v-neck", "v-neckline", "vee neck"}) t.add(v, "V-Neck");
  for (auto v : {"crewneck", "crew neck", "crew-neck"}) t.add(v, "Crew Neck");
  for (auto v : {"longsleeve", "long sleeve", "long-sleeve", "long sleeves", "long sleeved"}) t.add(v, "Long Sleeve");
  for (auto v : {"shortsleeve", "short sleeve", "short sleeves", "short sleeved"}) t.add(v, "Short Sleeve");
  for (auto v : {"sleeveless", "no sleeves"}) t.add(v, "Sleeveless");
  for (auto v : {"turtleneck", "turtle neck", "roll neck", "rollneck"}) t.add(v, "Turtleneck");
  for (auto v : {"scoopneck", "scoop neck"}) t.add(v, "Scoop Neck");
  for (auto v : {"raglan sleeve", "raglan sleeves"}) t.add(v, "Raglan Sleeves");
  return t;
}

AliasTable parse_alias_table(std::string_view text, AliasTable base) {
  std::size_t line_no = 0;
  for (const auto& raw_line : util::split(text, '\n')) {
    ++line_no;
    const std::string line = util::trim(raw_line);
    if (line.empty() || line.front() == '#') continue;
    const auto arrow = line.find("=>");
    if (arrow == std::string::npos)
      throw Error(ErrorCode::SchemaViolation, "alias line " + std::to_string(line_no) + ": expected 'variant => Canonical'");
    const std::string variant = util::trim(line.substr(0, arrow));
    const std::string canonical = util::trim(line.substr(arrow + 2));
    if (variant.empty() || canonical.empty())
      throw Error(ErrorCode::SchemaViolation, "alias line " + std::to_string(line_no) + ": empty side");
    try {
      base.add(variant, canonical);
    } catch (const Error& e) {
      throw Error(ErrorCode::SchemaViolation, "alias line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return base;
}

AliasTable load_alias_table(const std::string& path, AliasTable base) {
  return parse_alias_table(util::read_file(path), std::move(base));
}

std::string canonicalize_value(std::string_view raw, const AliasTable& aliases) {
  const std::string norm = util::collapse_whitespace(util::trim(raw));
  if (norm.empty()) throw Error(ErrorCode::EmptyValue, "cannot canonicalize an empty value");
  if (const std::string* hit = aliases.lookup(norm)) return *hit;
  return util::title_case(norm);
}

}  // namespace pae::normalize
