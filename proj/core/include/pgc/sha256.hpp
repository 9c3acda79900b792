#pragma once

#include <string>
#include <string_view>

namespace pgc {

// FIPS 180-4 SHA-256 of the given bytes, as lowercase hex.
// Guards certificate transport integrity only; proof validity is
// established by replay, not by the digest.
std::string sha256_hex(std::string_view data);

}  // namespace pgc
