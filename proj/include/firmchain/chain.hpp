#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "firmchain/address.hpp"
#include "firmchain/bytes.hpp"
#include "firmchain/digest.hpp"
#include "firmchain/keys.hpp"
#include "firmchain/wei.hpp"

namespace firmchain {

/// A signed ledger mutation request. `to` absent means contract creation.
/// The envelope carries the sender public key so signature verification is
/// self-contained; the from address must equal the key's derived address.
struct SignedTransaction {
  Address from;
  std::optional<Address> to;
  std::uint64_t nonce = 0;
  std::uint64_t gas_limit = 0;
  Wei gas_price = 0;
  Wei value = 0;
  Bytes data;
  std::uint8_t scheme_id = kSchemeEd25519;
  Bytes sender_pubkey;
  Bytes signature;  // over hash(), excluded from it

  /// Canonical serialization of every field except the signature.
  Bytes unsigned_payload() const;
  Digest hash() const;  // SHA-256 of unsigned_payload()

  /// Full wire/chain-file serialization including the signature.
  Bytes serialize() const;
  static SignedTransaction deserialize(BytesView in);
};

struct TxDraft {
  std::optional<Address> to;
  std::uint64_t nonce = 0;
  std::uint64_t gas_limit = 0;
  Wei gas_price = 0;
  Wei value = 0;
  Bytes data;
};

SignedTransaction sign_transaction(const Account& sender, const TxDraft& draft);

enum class EventKind : std::uint8_t {
  HashStored = 1,
  VerificationPerformed = 2,
};

std::string event_kind_name(EventKind k);

/// Contract log entry. Payload fields beyond `digest` are optional and
/// depend on the emitting method. Two topics (kind, actor) are metered for
/// every event; data gas is metered over payload_bytes().
struct Event {
  EventKind kind = EventKind::HashStored;
  Address emitter;
  Address actor;
  Digest digest;
  std::optional<bool> matched;
  std::optional<std::string> firmware_id;
  std::optional<std::uint32_t> version;
  std::uint64_t block_number = 0;
  std::uint32_t log_index = 0;

  static constexpr std::uint64_t kTopicCount = 2;

  /// Canonical payload encoding: digest, then matched / firmware_id /
  /// version when present. Drives log gas and state hashing.
  Bytes payload_bytes() const;
};

/// Immutable transaction outcome, fixed once the containing block is sealed.
struct Receipt {
  Digest tx_hash;
  std::uint64_t block_number = 0;
  bool success = false;
  std::string revert_reason;  // errid string; empty on success
  std::uint64_t gas_used = 0;
  Wei fee = 0;  // gas_used * gas_price, exact
  std::optional<Address> contract_address;
  std::vector<Event> logs;
  Bytes return_data;

  std::string status() const { return success ? "success" : "reverted"; }
};

struct Block {
  std::uint64_t number = 0;
  Digest parent_hash;
  std::int64_t timestamp_ms = 0;
  std::uint64_t gas_used = 0;
  std::vector<SignedTransaction> transactions;

  std::vector<Digest> tx_hashes() const;
  /// Canonical header: number, parent, timestamp, gas_used, tx hash list.
  Bytes header_bytes() const;
  Digest hash() const;

  /// Chain-file record: header fields, full transactions, trailing hash.
  Bytes serialize() const;
  static Block deserialize(BytesView in);
};

}  // namespace firmchain
