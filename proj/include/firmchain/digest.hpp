#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "firmchain/bytes.hpp"

namespace firmchain {

/// 32-byte SHA-256 value. Used for firmware fingerprints, transaction and
/// block hashes, and Merkle nodes.
struct Digest {
  std::array<std::uint8_t, 32> v{};

  auto operator<=>(const Digest&) const = default;

  std::string hex() const { return hex_encode(BytesView{v.data(), v.size()}); }
  BytesView view() const { return {v.data(), v.size()}; }

  /// Parses exactly 64 hex characters (case-insensitive). Throws FormatError
  /// on wrong length or a non-hex character (naming its position).
  static Digest from_hex(std::string_view s);
};

}  // namespace firmchain
