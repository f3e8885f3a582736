#pragma once

#include <cstdint>
#include <deque>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "firmchain/chain.hpp"
#include "firmchain/executor.hpp"
#include "firmchain/gas.hpp"

namespace firmchain {

struct GenesisAccount {
  Bytes pubkey;  // raw verification key; address derived
  Wei balance = 0;
};

struct LedgerConfig {
  CalibrationProfile profile;
  std::vector<GenesisAccount> genesis_accounts;
  std::optional<Address> coinbase;  // fee recipient; derived default when absent
  /// Seal a block immediately on every submission, with logical timestamps
  /// (k * block_interval) and no finality delay. Timing knobs of the profile
  /// are ignored; the gas model is not.
  bool instant_mine = false;
  std::int64_t genesis_time_ms = 0;
  /// Append-only chain persistence. Existing content is replayed on
  /// construction and must extend from the same genesis configuration.
  std::optional<std::filesystem::path> chain_file;
};

struct AccountView {
  std::uint64_t nonce = 0;  // next nonce expected by consensus state
  Wei balance = 0;
};

/// Deterministic single-chain ledger: accounts, mempool, block production,
/// native contract execution, gas metering, receipts and persistence.
///
/// Concurrency: a single mutex serializes every public entry point, giving
/// the single-writer contract; reads observe a consistent snapshot.
class Ledger {
 public:
  using ContractFactory = std::function<std::unique_ptr<NativeContract>()>;

  explicit Ledger(LedgerConfig config);

  void register_contract_kind(const std::string& kind, ContractFactory factory);

  /// Admits a transaction to the mempool. Throws Error with id
  /// invalid-signature / nonce-reuse / nonce-gap / insufficient-balance.
  /// Returns the canonical transaction hash. In instant-mine mode the
  /// containing block is produced before returning.
  Digest submit(const SignedTransaction& tx);

  /// Seals the next block at simulated time `now_ms`, draining the mempool
  /// in gas-price order (arrival order tie-break) along each sender's nonce
  /// frontier, up to the block gas limit. Throws Error(too-early) when
  /// now_ms precedes head timestamp + block interval.
  Block produce_block(std::int64_t now_ms);

  /// Advances observed time without producing (receipt finality gating).
  void advance_time(std::int64_t now_ms);
  std::int64_t current_time_ms() const;

  /// nullopt while pending (known but unsealed, or sealed within the
  /// finality window). Throws Error(not-found) for unknown hashes.
  std::optional<Receipt> receipt(const Digest& tx_hash) const;

  /// Read-only contract call: no state change, no fee. Throws
  /// Error(not-found) for an absent contract, RevertError from the method.
  Bytes call(const Address& to, BytesView data) const;

  /// Deterministic gas for the transaction under the active schedule,
  /// computed by dry-running execution against current state.
  std::uint64_t gas_for(const SignedTransaction& tx) const;

  AccountView account(const Address& addr) const;
  /// Next usable nonce including mempool-pending transactions.
  std::uint64_t pending_nonce(const Address& addr) const;

  std::uint64_t head_number() const;
  std::int64_t head_timestamp_ms() const;
  Digest head_hash() const;
  Block block(std::uint64_t number) const;  // throws Error(not-found)
  std::size_t mempool_size() const;
  bool contract_exists(const Address& addr) const;

  /// Events emitted by `contract` in blocks [from_block, to_block].
  std::vector<Event> logs(const Address& contract, std::uint64_t from_block,
                          std::uint64_t to_block) const;

  /// SHA-256 over the contract's canonical state serialization.
  Digest contract_state_hash(const Address& addr) const;

  Wei total_supply() const;  // sum of all balances including coinbase
  Address coinbase() const { return coinbase_; }
  const CalibrationProfile& profile() const { return config_.profile; }
  bool instant_mine() const { return config_.instant_mine; }

  static Address contract_address_for(const Address& deployer, std::uint64_t nonce);

 private:
  struct AccountState {
    std::uint64_t nonce = 0;
    Wei balance = 0;
  };
  struct PendingTx {
    SignedTransaction tx;
    Digest hash;
    std::uint64_t arrival = 0;
    Wei reserved = 0;  // gas_limit * gas_price + value, held until sealed
  };
  struct ExecOutcome {
    bool success = false;
    std::string revert_reason;
    std::uint64_t gas_used = 0;
    std::optional<Address> contract_address;
    std::vector<Event> events;
    Bytes return_data;
    std::unique_ptr<NativeContract> new_state;  // committed on success
    std::optional<Address> state_target;
  };

  void admit_locked(const SignedTransaction& tx, const Digest& hash);
  Block produce_block_locked(std::int64_t now_ms);
  void seal_block_locked(std::vector<PendingTx> included, std::int64_t now_ms,
                         const Block* expected);
  ExecOutcome execute_locked(const SignedTransaction& tx, std::uint64_t block_number,
                             bool commit) const;
  Receipt apply_locked(PendingTx& ptx, std::uint64_t block_number);
  void persist_block_locked(const Block& b);
  void replay_chain_file_locked();
  void bootstrap_genesis_locked();
  AccountState& account_state_locked(const Address& addr);
  std::uint64_t pending_count_locked(const Address& addr) const;

  mutable std::mutex mu_;
  LedgerConfig config_;
  Address coinbase_;
  std::map<std::string, ContractFactory> factories_;
  std::map<Address, AccountState> accounts_;
  std::map<Address, std::unique_ptr<NativeContract>> contracts_;
  std::map<Address, std::deque<PendingTx>> mempool_;  // per-sender nonce order
  std::map<Address, Wei> reserved_;
  std::uint64_t arrival_counter_ = 0;
  std::vector<Block> chain_;
  std::map<Digest, Receipt> receipts_;
  std::map<Digest, std::uint64_t> tx_block_;  // sealed tx -> block number
  std::map<Digest, bool> known_tx_;
  std::int64_t current_time_ms_ = 0;
  std::unique_ptr<std::ofstream> chain_out_;
  bool replaying_ = false;
};

}  // namespace firmchain
