#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "firmchain/chain.hpp"
#include "firmchain/ledger.hpp"

#include <nlohmann/json_fwd.hpp>

namespace firmchain {

/// Explorer-style transaction summary. Every field is reproducible from the
/// chain alone; field order in the JSON rendering is fixed for golden-file
/// comparison.
struct AuditRecord {
  std::string tx_hash;
  std::uint64_t block_number = 0;
  std::string from;
  std::string to;  // created contract address for deployments
  std::string method;
  std::string status;  // "success" | "reverted"
  std::uint64_t gas_used = 0;
  std::string gas_price_wei;
  std::string fee_wei;
  std::string fee_eth;
  std::uint64_t confirmations = 0;
  std::int64_t timestamp_ms = 0;

  nlohmann::ordered_json to_json() const;
};

/// Chain access abstraction so audits can be produced identically from an
/// in-process ledger or through the RPC gateway.
class ChainReader {
 public:
  virtual ~ChainReader() = default;
  virtual std::uint64_t head_number() = 0;
  virtual Block block(std::uint64_t number) = 0;
  virtual Receipt receipt(const Digest& tx_hash) = 0;
};

class LedgerReader : public ChainReader {
 public:
  explicit LedgerReader(const Ledger& ledger) : ledger_(ledger) {}
  std::uint64_t head_number() override { return ledger_.head_number(); }
  Block block(std::uint64_t number) override { return ledger_.block(number); }
  Receipt receipt(const Digest& tx_hash) override;

 private:
  const Ledger& ledger_;
};

/// One record per transaction touching `contract`, in chain order. Throws
/// Error(not-found) when no creation of that contract exists on chain.
std::vector<AuditRecord> export_audit(ChainReader& reader, const Address& contract);

/// Stable textual rendering (JSON array, 2-space indent, trailing newline).
std::string audit_to_string(const std::vector<AuditRecord>& records);

}  // namespace firmchain
