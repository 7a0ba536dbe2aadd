#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pae::util {

/// Standard alphabet (RFC 4648) with '=' padding.
std::string base64_encode(std::span<const std::uint8_t> bytes);

/// Throws pae::Error(SchemaViolation) on characters outside the alphabet or
/// bad padding.
std::vector<std::uint8_t> base64_decode(std::string_view text);

}  // namespace pae::util
