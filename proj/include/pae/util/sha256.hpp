#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>

namespace pae::util {

using Digest256 = std::array<std::uint8_t, 32>;

Digest256 sha256(std::span<const std::uint8_t> bytes);
std::string to_hex(const Digest256& digest);

}  // namespace pae::util
