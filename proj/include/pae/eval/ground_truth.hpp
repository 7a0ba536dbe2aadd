#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "pae/extract/attributes.hpp"
#include "pae/normalize/alias_table.hpp"

namespace pae::eval {

// page index -> annotated set; keys absent from a page entry are sentinel.
using GroundTruth = std::map<std::size_t, extract::AttributeSet>;

// {"pages": {"0": {"Color": ["..."], "Neck": "Not Mentioned", ...}, ...}}
// Values are canonicalized on load. Throws FileNotFound or SchemaViolation.
GroundTruth parse_ground_truth(const std::string& json_text,
                               const normalize::AliasTable& aliases = normalize::default_alias_table());
GroundTruth load_ground_truth(const std::string& path,
                              const normalize::AliasTable& aliases = normalize::default_alias_table());

}  // namespace pae::eval
