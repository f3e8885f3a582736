#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace firmchain {

// Stable error identifiers. These strings travel through receipts (revert
// reason), RPC error messages and the CLI exit-code mapping, so they are
// part of the external interface and must not change.
namespace errid {
inline constexpr const char* invalid_signature = "invalid-signature";
inline constexpr const char* nonce_reuse = "nonce-reuse";
inline constexpr const char* nonce_gap = "nonce-gap";
inline constexpr const char* insufficient_balance = "insufficient-balance";
inline constexpr const char* not_found = "not-found";
inline constexpr const char* unauthorized = "unauthorized";
inline constexpr const char* already_stored = "already-stored";
inline constexpr const char* no_reference = "no-reference";
inline constexpr const char* unknown_method = "unknown-method";
inline constexpr const char* unknown_contract_kind = "unknown-contract-kind";
inline constexpr const char* out_of_gas = "out-of-gas";
inline constexpr const char* too_early = "too-early";
inline constexpr const char* read_only = "read-only";
inline constexpr const char* invalid_argument = "invalid-argument";
inline constexpr const char* format_error = "format-error";
inline constexpr const char* io_error = "io-error";
inline constexpr const char* connection_failed = "connection-failed";
inline constexpr const char* corrupt_chain_file = "corrupt-chain-file";
}  // namespace errid

/// Base error: a stable identifier plus a human-readable detail.
class Error : public std::runtime_error {
 public:
  explicit Error(std::string id, const std::string& detail = "")
      : std::runtime_error(detail.empty() ? id : id + ": " + detail),
        id_(std::move(id)) {}

  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

class ArgError : public Error {
 public:
  explicit ArgError(const std::string& detail)
      : Error(errid::invalid_argument, detail) {}
};

class FormatError : public Error {
 public:
  explicit FormatError(const std::string& detail)
      : Error(errid::format_error, detail) {}
};

/// I/O failure; `offset` is the byte position at which reading failed.
class IoError : public Error {
 public:
  IoError(const std::string& detail, std::uint64_t offset)
      : Error(errid::io_error, detail + " (offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::uint64_t offset() const noexcept { return offset_; }

 private:
  std::uint64_t offset_;
};

/// Contract execution revert. The reason is one of the errid constants.
class RevertError : public Error {
 public:
  explicit RevertError(const std::string& reason) : Error(reason) {}
};

}  // namespace firmchain
