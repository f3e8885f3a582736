#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "firmchain/chain.hpp"
#include "firmchain/gas.hpp"

namespace firmchain {

class NativeContract;

/// Per-invocation environment handed to native contract code. Routes all
/// state effects (storage writes, event emission) so the executor can meter
/// gas and enforce read-only semantics.
class ExecutionContext {
 public:
  ExecutionContext(Address caller, Address self, std::uint64_t block_number,
                   bool read_only, const GasSchedule& schedule,
                   NativeContract* contract);

  const Address& caller() const { return caller_; }
  const Address& self() const { return self_; }
  std::uint64_t block_number() const { return block_number_; }
  bool read_only() const { return read_only_; }

  /// Meters a storage write to the named logical slot: new-slot cost on
  /// first write, update cost afterwards. Throws RevertError(read-only)
  /// inside read-only execution.
  void write_slot(const std::string& key);

  /// Meters and records a log. kind/actor/digest and optional payload fields
  /// must be set by the caller; emitter, block_number and log_index are
  /// assigned by the executor.
  void emit(Event ev);

  std::uint64_t metered_gas() const { return gas_; }
  std::vector<Event>& events() { return events_; }

 private:
  Address caller_;
  Address self_;
  std::uint64_t block_number_;
  bool read_only_;
  const GasSchedule& schedule_;
  NativeContract* contract_;
  std::uint64_t gas_ = 0;
  std::vector<Event> events_;
};

/// A contract implemented as a native state machine. Instances are owned by
/// the ledger; all mutation happens on a clone that the executor swaps in on
/// success, so reverts and read-only calls never touch committed state.
class NativeContract {
 public:
  virtual ~NativeContract() = default;

  virtual std::string kind() const = 0;
  virtual std::unique_ptr<NativeContract> clone() const = 0;

  /// Constructor body. `args` is the creation payload after the kind name.
  virtual void construct(ExecutionContext& ctx, BytesView args) = 0;

  /// Dispatches a selector-prefixed calldata blob. Throws RevertError.
  virtual Bytes call(ExecutionContext& ctx, BytesView calldata) = 0;

  /// Method name for a 4-byte selector (surcharge lookup, audit naming).
  virtual std::optional<std::string> method_name(BytesView calldata) const = 0;

  /// Canonical serialization of contract state for state hashing.
  virtual Bytes state_bytes() const = 0;

  /// Logical storage slots ever written; new-vs-update gas classification.
  std::set<std::string> written_slots;
};

}  // namespace firmchain
