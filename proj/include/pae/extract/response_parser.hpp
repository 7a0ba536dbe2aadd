#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pae/extract/attributes.hpp"

namespace pae::extract {

// Reads "<Key>: <value>[, <value>...]" lines. Keys match case-insensitively
// (synonyms included); list bullets, markdown emphasis, quotes, braces and
// brackets around keys and values are ignored; values split on commas.
// Unknown keys and an entirely unparseable response add to `warnings`.
// Never throws: missing keys keep the "Not Mentioned" sentinel.
AttributeSet parse_attribute_response(std::string_view raw, std::size_t page_index, Source source,
                                      std::vector<std::string>* warnings = nullptr);

}  // namespace pae::extract
