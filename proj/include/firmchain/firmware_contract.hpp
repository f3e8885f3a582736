#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "firmchain/executor.hpp"
#include "firmchain/ledger.hpp"

namespace firmchain {

/// The firmware-integrity contract: stores one reference digest (one-time,
/// owner-only), answers verification queries, and keeps a versioned registry
/// keyed by firmware id. Verification is permissionless; every logged
/// interaction leaves an event.
///
/// Methods (selector = first 4 bytes of SHA-256 of the signature string):
///   storeHash(bytes32)                tx, owner-only, one-time
///   verifyHash(bytes32)               read-only -> bool
///   verifyHashLogged(bytes32)         tx, permissionless, emits event
///   registerVersioned(string,bytes32) tx, owner-only, version = prev + 1
///   verifyVersioned(string,bytes32)   read-only -> bool
///   getReference()                    read-only -> 32 bytes
///   getOwner()                        read-only -> 20 bytes
///   getEntry(string)                  read-only -> digest . u32 version . u64 block
class FirmwareIntegrity : public NativeContract {
 public:
  static constexpr const char* kKind = "FirmwareIntegrity";

  struct VersionedEntry {
    Digest digest;
    std::uint32_t version = 0;
    std::uint64_t registered_at_block = 0;
  };

  // Calldata builders (client side). Deploy data carries the kind name.
  static Bytes deploy_data();
  static Bytes store_hash_data(const Digest& d);
  static Bytes verify_hash_data(const Digest& d);
  static Bytes verify_hash_logged_data(const Digest& d);
  static Bytes register_versioned_data(const std::string& firmware_id, const Digest& d);
  static Bytes verify_versioned_data(const std::string& firmware_id, const Digest& d);
  static Bytes get_reference_data();
  static Bytes get_owner_data();
  static Bytes get_entry_data(const std::string& firmware_id);

  /// Method name for audit rendering; nullopt when the selector is unknown.
  static std::optional<std::string> method_name_for(BytesView calldata);

  static bool decode_bool(BytesView return_data);

  // NativeContract interface.
  std::string kind() const override { return kKind; }
  std::unique_ptr<NativeContract> clone() const override;
  void construct(ExecutionContext& ctx, BytesView args) override;
  Bytes call(ExecutionContext& ctx, BytesView calldata) override;
  std::optional<std::string> method_name(BytesView calldata) const override;
  Bytes state_bytes() const override;

  // State accessors.
  const Address& owner() const { return owner_; }
  const std::optional<Digest>& reference() const { return reference_; }
  std::uint64_t stored_at_block() const { return stored_at_block_; }
  const std::map<std::string, VersionedEntry>& registry() const { return registry_; }

 private:
  Bytes store_hash(ExecutionContext& ctx, BytesView args);
  Bytes verify_hash(BytesView args) const;
  Bytes verify_hash_logged(ExecutionContext& ctx, BytesView args);
  Bytes register_versioned(ExecutionContext& ctx, BytesView args);
  Bytes verify_versioned(BytesView args) const;
  Bytes get_entry(BytesView args) const;

  Address owner_;
  std::optional<Digest> reference_;
  std::uint64_t stored_at_block_ = 0;
  std::map<std::string, VersionedEntry> registry_;
};

/// Registers the FirmwareIntegrity factory with a ledger.
void register_firmware_contract(Ledger& ledger);

/// Maximum firmware_id length accepted by registerVersioned.
inline constexpr std::size_t kMaxFirmwareIdLen = 64;

}  // namespace firmchain
