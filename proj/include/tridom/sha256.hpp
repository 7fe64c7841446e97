#pragma once

#include <cstdint>
#include <string>

namespace tridom {

/// Hex digest of the FIPS 180-4 SHA-256 of `data`.
std::string sha256_hex(const std::string& data);

} // namespace tridom
