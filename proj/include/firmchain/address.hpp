#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "firmchain/bytes.hpp"

namespace firmchain {

/// 20-byte account or contract address, rendered 0x-prefixed lowercase hex.
struct Address {
  std::array<std::uint8_t, 20> v{};

  auto operator<=>(const Address&) const = default;

  std::string hex() const;
  BytesView view() const { return {v.data(), v.size()}; }

  /// Last 20 bytes of SHA-256 over the raw public key.
  static Address from_public_key(BytesView pubkey);

  /// Parses "0x" + 40 hex chars. Throws FormatError.
  static Address parse(std::string_view s);
};

}  // namespace firmchain
