#pragma once

#include <string>
#include <string_view>

#include "pgc/certificate.hpp"

namespace pgc {

// Result of an independent certificate replay. The checker re-derives
// every stored value with exact arithmetic and accepts only if each
// evidence node replays bit-for-bit and implies its parent claim. It
// never constructs enclosures of its own.
struct VerifyResult {
  bool accepted = false;
  std::string path;    // first failing node, canonical order
  std::string reason;  // empty when accepted
};

VerifyResult verify(const cert::BoundCertificate& certificate);
VerifyResult verify_text(std::string_view text);

}  // namespace pgc
