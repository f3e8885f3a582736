#pragma once

#include <cstdint>
#include <string_view>

#include "firmchain/address.hpp"
#include "firmchain/bytes.hpp"

namespace firmchain {

/// Signature scheme identifiers carried in transactions. Only Ed25519 is
/// built in; the id keeps the wire format open to other schemes.
inline constexpr std::uint8_t kSchemeEd25519 = 1;

/// Ed25519 keypair. The private key is SHA-256 of the caller-provided seed,
/// so account derivation is deterministic for any seed length.
class KeyPair {
 public:
  static KeyPair from_seed(BytesView seed);
  static KeyPair from_seed(std::string_view seed);
  static KeyPair from_private_key(BytesView key32);

  const Bytes& public_key() const { return public_key_; }
  const Bytes& private_key() const { return private_key_; }
  std::uint8_t scheme_id() const { return kSchemeEd25519; }

  Bytes sign(BytesView message) const;
  static bool verify(BytesView pubkey, BytesView message, BytesView signature);

 private:
  KeyPair() = default;
  Bytes private_key_;  // 32 raw bytes
  Bytes public_key_;   // 32 raw bytes
};

/// Client-side account identity: keys plus the derived address. Nonce and
/// balance live on the ledger.
struct Account {
  KeyPair keys;
  Address address;

  static Account from_seed(BytesView seed);
  static Account from_seed(std::string_view seed);

  /// Well-known development accounts funded by the default genesis.
  static Account dev(unsigned index);
  static std::string dev_seed(unsigned index);
};

}  // namespace firmchain
