#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace pae::ingest {

// Windows-1252 ("WinAnsiEncoding" in PDF) <-> UTF-8.
void append_utf8(std::string& out, std::uint32_t codepoint);
std::uint32_t winansi_to_unicode(std::uint8_t byte);  // 0 for undefined slots
// Characters with no WinAnsi slot become '?'.
std::string utf8_to_winansi(std::string_view utf8);

}  // namespace pae::ingest
