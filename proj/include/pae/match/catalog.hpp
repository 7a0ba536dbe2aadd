#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pae/extract/attributes.hpp"
#include "pae/normalize/alias_table.hpp"

namespace pae::match {

struct CatalogEntry {
  extract::AttributeKey attribute;
  std::string value;  // canonical form
  std::optional<std::string> category;
};

using Catalog = std::vector<CatalogEntry>;

// CSV with header "attribute,value[,category]". Values are canonicalized
// and repeated (attribute, value) pairs collapsed to the first row. An empty
// file is an empty catalog. Throws Error(FileNotFound) or
// Error(SchemaViolation) naming the line.
Catalog load_catalog(const std::string& path, const normalize::AliasTable& aliases = normalize::default_alias_table());
Catalog parse_catalog(const std::string& csv, const normalize::AliasTable& aliases = normalize::default_alias_table());

}  // namespace pae::match
