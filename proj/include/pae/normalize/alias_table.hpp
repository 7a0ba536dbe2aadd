#pragma once

#include <map>
#include <string>
#include <string_view>

namespace pae::normalize {

// Lookup key of a surface form: whitespace collapsed, lower-cased, with
// '-', '_' and '.' removed ("V-Neck" -> "vneck", "v neck" -> "v neck").
std::string alias_key(std::string_view raw);

class AliasTable {
 public:
  // Registers `variant` -> `canonical`, and `canonical` -> itself so that
  // canonical forms are fixed points. Throws Error(ConfigInvalid) when a
  // key is already bound to a different canonical form.
  void add(std::string_view variant, std::string_view canonical);
  const std::string* lookup(std::string_view raw) const;
  const std::map<std::string, std::string>& rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }

 private:
  std::map<std::string, std::string> rules_;  // alias_key -> canonical
};

// Neckline and sleeve variants (vneck / v neck / v-neck -> V-Neck,
// crewneck -> Crew Neck, longsleeve -> Long Sleeve, ...).
AliasTable default_alias_table();

// "variant => Canonical Form" per line, '#' comments. Rules are added on
// top of `base`. Throws SchemaViolation naming the offending line.
AliasTable parse_alias_table(std::string_view text, AliasTable base = {});
AliasTable load_alias_table(const std::string& path, AliasTable base = default_alias_table());

// trim -> collapse whitespace -> alias lookup; misses are title-cased.
// Throws Error(EmptyValue) for blank input.
std::string canonicalize_value(std::string_view raw, const AliasTable& aliases);

}  // namespace pae::normalize
