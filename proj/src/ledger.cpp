#include "firmchain/ledger.hpp"

#include <algorithm>
#include <fstream>

#include "firmchain/errors.hpp"
#include "firmchain/sha256.hpp"

namespace firmchain {

namespace {
constexpr const char* kCoinbaseSeed = "firmchain-coinbase";
}

Address Ledger::contract_address_for(const Address& deployer, std::uint64_t nonce) {
  ByteWriter w;
  w.raw(deployer.view());
  w.u64(nonce);
  Digest h = sha256(BytesView{w.bytes().data(), w.bytes().size()});
  Address a;
  std::copy(h.v.begin() + 12, h.v.end(), a.v.begin());
  return a;
}

Ledger::Ledger(LedgerConfig config) : config_(std::move(config)) {
  if (config_.profile.block_interval_ms <= 0) {
    throw ArgError("block_interval must be positive");
  }
  if (config_.profile.finality_delay_ms < 0) {
    throw ArgError("finality_delay must be non-negative");
  }
  coinbase_ = config_.coinbase.value_or(Account::from_seed(kCoinbaseSeed).address);
  bootstrap_genesis_locked();
  if (config_.chain_file.has_value()) {
    replay_chain_file_locked();
    chain_out_ = std::make_unique<std::ofstream>(
        *config_.chain_file, std::ios::binary | std::ios::app);
    if (!chain_out_->is_open()) {
      throw IoError("cannot open chain file " + config_.chain_file->string(), 0);
    }
    if (chain_out_->tellp() == std::streampos(0)) {
      // Fresh file: persist everything sealed so far (genesis included).
      for (const auto& b : chain_) persist_block_locked(b);
    }
  }
}

void Ledger::bootstrap_genesis_locked() {
  for (const auto& g : config_.genesis_accounts) {
    Address addr = Address::from_public_key({g.pubkey.data(), g.pubkey.size()});
    accounts_[addr].balance += g.balance;
  }
  accounts_[coinbase_];  // fee sink exists from genesis
  Block genesis;
  genesis.number = 0;
  genesis.timestamp_ms = config_.genesis_time_ms;
  chain_.push_back(std::move(genesis));
  current_time_ms_ = config_.genesis_time_ms;
}

void Ledger::register_contract_kind(const std::string& kind, ContractFactory factory) {
  std::lock_guard lk(mu_);
  factories_[kind] = std::move(factory);
}

std::uint64_t Ledger::pending_count_locked(const Address& addr) const {
  auto it = mempool_.find(addr);
  return it == mempool_.end() ? 0 : it->second.size();
}

Ledger::AccountState& Ledger::account_state_locked(const Address& addr) {
  return accounts_[addr];
}

void Ledger::admit_locked(const SignedTransaction& tx, const Digest& hash) {
  if (tx.scheme_id != kSchemeEd25519 || tx.sender_pubkey.size() != 32) {
    throw Error(errid::invalid_signature, "unsupported scheme or malformed key");
  }
  if (Address::from_public_key({tx.sender_pubkey.data(), tx.sender_pubkey.size()}) != tx.from) {
    throw Error(errid::invalid_signature, "sender key does not match from address");
  }
  if (!KeyPair::verify({tx.sender_pubkey.data(), tx.sender_pubkey.size()}, hash.view(),
                       {tx.signature.data(), tx.signature.size()})) {
    throw Error(errid::invalid_signature, "signature verification failed");
  }

  auto acct = accounts_.find(tx.from);
  std::uint64_t state_nonce = acct == accounts_.end() ? 0 : acct->second.nonce;
  std::uint64_t expected = state_nonce + pending_count_locked(tx.from);
  if (tx.nonce < expected) {
    throw Error(errid::nonce_reuse, "nonce " + std::to_string(tx.nonce) +
                                        " already used; expected " + std::to_string(expected));
  }
  if (tx.nonce > expected) {
    throw Error(errid::nonce_gap, "nonce " + std::to_string(tx.nonce) + " skips expected " +
                                      std::to_string(expected));
  }

  Wei cost = static_cast<Wei>(tx.gas_limit) * tx.gas_price + tx.value;
  Wei balance = acct == accounts_.end() ? 0 : acct->second.balance;
  Wei reserved = 0;
  if (auto r = reserved_.find(tx.from); r != reserved_.end()) reserved = r->second;
  if (balance < reserved + cost) {
    throw Error(errid::insufficient_balance,
                "balance " + wei_to_dec(balance) + " wei cannot cover " +
                    wei_to_dec(reserved + cost) + " wei");
  }

  mempool_[tx.from].push_back(PendingTx{tx, hash, arrival_counter_++, cost});
  reserved_[tx.from] += cost;
  known_tx_[hash] = true;
}

Digest Ledger::submit(const SignedTransaction& tx) {
  std::lock_guard lk(mu_);
  Digest hash = tx.hash();
  admit_locked(tx, hash);
  if (config_.instant_mine) {
    produce_block_locked(chain_.back().timestamp_ms + config_.profile.block_interval_ms);
  }
  return hash;
}

Ledger::ExecOutcome Ledger::execute_locked(const SignedTransaction& tx,
                                           std::uint64_t block_number, bool commit) const {
  const GasSchedule& sched = config_.profile.schedule;
  ExecOutcome out;

  std::uint64_t intrinsic = sched.tx_base + sched.calldata_gas({tx.data.data(), tx.data.size()});
  bool creation = !tx.to.has_value();
  if (creation) {
    intrinsic += sched.create_surcharge +
                 sched.code_deposit_per_byte * config_.profile.declared_code_size;
  }

  std::string method;
  std::unique_ptr<NativeContract> instance;
  std::optional<Address> target;
  Bytes call_args;
  bool plain_transfer = false;

  try {
    if (creation) {
      ByteReader r({tx.data.data(), tx.data.size()});
      std::string kind;
      try {
        kind = r.str();
      } catch (const FormatError&) {
        throw RevertError(errid::unknown_contract_kind);
      }
      auto fit = factories_.find(kind);
      if (fit == factories_.end()) throw RevertError(errid::unknown_contract_kind);
      method = "deploy";
      instance = fit->second();
      target = contract_address_for(tx.from, tx.nonce);
      call_args = r.raw(r.remaining());
    } else if (tx.data.empty()) {
      plain_transfer = true;
      method = "transfer";
    } else {
      auto cit = contracts_.find(*tx.to);
      if (cit == contracts_.end()) throw RevertError(errid::not_found);
      instance = cit->second->clone();
      target = *tx.to;
      auto name = instance->method_name({tx.data.data(), tx.data.size()});
      if (!name.has_value()) throw RevertError(errid::unknown_method);
      method = *name;
    }

    std::uint64_t gas = intrinsic + sched.surcharge_for(method);

    if (plain_transfer) {
      out.gas_used = gas;
    } else {
      ExecutionContext ctx(tx.from, *target, block_number, /*read_only=*/false,
                           sched, instance.get());
      if (creation) {
        instance->construct(ctx, {call_args.data(), call_args.size()});
        out.contract_address = target;
      } else {
        out.return_data = instance->call(ctx, {tx.data.data(), tx.data.size()});
      }
      out.events = std::move(ctx.events());
      gas += ctx.metered_gas();
      out.new_state = std::move(instance);
      out.state_target = target;
    }

    if (gas > tx.gas_limit) throw RevertError(errid::out_of_gas);
    out.gas_used = gas;
    out.success = true;
  } catch (const RevertError& e) {
    out.success = false;
    out.revert_reason = e.id();
    out.events.clear();
    out.new_state.reset();
    out.state_target.reset();
    out.contract_address.reset();
    out.return_data.clear();
    if (e.id() == errid::out_of_gas) {
      out.gas_used = tx.gas_limit;
    } else {
      // Execution aborted: intrinsic plus the attempted method's surcharge,
      // capped by the limit. Rolled-back storage/log costs are not charged.
      std::uint64_t gas = intrinsic + sched.surcharge_for(method);
      out.gas_used = std::min(gas, tx.gas_limit);
    }
  }
  (void)commit;
  return out;
}

Receipt Ledger::apply_locked(PendingTx& ptx, std::uint64_t block_number) {
  const SignedTransaction& tx = ptx.tx;
  AccountState& sender = account_state_locked(tx.from);
  sender.nonce += 1;

  ExecOutcome out = execute_locked(tx, block_number, /*commit=*/true);

  Wei fee = static_cast<Wei>(out.gas_used) * tx.gas_price;
  sender.balance -= fee;
  account_state_locked(coinbase_).balance += fee;

  if (out.success) {
    if (out.new_state != nullptr && out.state_target.has_value()) {
      contracts_[*out.state_target] = std::move(out.new_state);
    }
    if (tx.value > 0) {
      Address dest = out.contract_address.value_or(tx.to.value_or(Address{}));
      sender.balance -= tx.value;
      account_state_locked(dest).balance += tx.value;
    }
  }

  Receipt rcpt;
  rcpt.tx_hash = ptx.hash;
  rcpt.block_number = block_number;
  rcpt.success = out.success;
  rcpt.revert_reason = out.revert_reason;
  rcpt.gas_used = out.gas_used;
  rcpt.fee = fee;
  rcpt.contract_address = out.success ? out.contract_address : std::nullopt;
  rcpt.logs = std::move(out.events);
  rcpt.return_data = std::move(out.return_data);
  return rcpt;
}

Block Ledger::produce_block(std::int64_t now_ms) {
  std::lock_guard lk(mu_);
  return produce_block_locked(now_ms);
}

Block Ledger::produce_block_locked(std::int64_t now_ms) {
  const Block& head = chain_.back();
  if (!config_.instant_mine &&
      now_ms < head.timestamp_ms + config_.profile.block_interval_ms) {
    throw Error(errid::too_early,
                "block time " + std::to_string(now_ms) + " precedes " +
                    std::to_string(head.timestamp_ms + config_.profile.block_interval_ms));
  }

  // Drain along each sender's nonce frontier: at every step take the
  // highest-priced (then earliest-arrived) head-of-queue transaction that
  // still fits the remaining block gas budget.
  std::vector<PendingTx> included;
  std::uint64_t budget_used = 0;
  while (true) {
    Address best{};
    const PendingTx* best_tx = nullptr;
    for (const auto& [sender, queue] : mempool_) {
      if (queue.empty()) continue;
      const PendingTx& cand = queue.front();
      if (budget_used + cand.tx.gas_limit > config_.profile.block_gas_limit) continue;
      if (best_tx == nullptr || cand.tx.gas_price > best_tx->tx.gas_price ||
          (cand.tx.gas_price == best_tx->tx.gas_price && cand.arrival < best_tx->arrival)) {
        best = sender;
        best_tx = &cand;
      }
    }
    if (best_tx == nullptr) break;
    budget_used += best_tx->tx.gas_limit;
    auto& queue = mempool_[best];
    included.push_back(std::move(queue.front()));
    queue.pop_front();
    if (queue.empty()) mempool_.erase(best);
  }

  seal_block_locked(std::move(included), now_ms, nullptr);
  return chain_.back();
}

void Ledger::seal_block_locked(std::vector<PendingTx> included, std::int64_t now_ms,
                               const Block* expected) {
  Block b;
  b.number = chain_.back().number + 1;
  b.parent_hash = chain_.back().hash();
  b.timestamp_ms = now_ms;

  std::vector<Receipt> receipts;
  receipts.reserve(included.size());
  std::uint32_t log_index = 0;
  for (auto& ptx : included) {
    Receipt r = apply_locked(ptx, b.number);
    for (auto& ev : r.logs) ev.log_index = log_index++;
    b.gas_used += r.gas_used;
    Address sender = ptx.tx.from;
    Wei release = ptx.reserved;
    b.transactions.push_back(std::move(ptx.tx));
    reserved_[sender] -= release;
    if (reserved_[sender] == 0) reserved_.erase(sender);
    receipts.push_back(std::move(r));
  }

  if (expected != nullptr) {
    if (b.gas_used != expected->gas_used || b.hash() != expected->hash()) {
      throw Error(errid::corrupt_chain_file,
                  "replayed block " + std::to_string(b.number) +
                      " does not reproduce the stored block");
    }
  }

  for (auto& r : receipts) {
    tx_block_[r.tx_hash] = b.number;
    receipts_[r.tx_hash] = std::move(r);
  }
  chain_.push_back(std::move(b));
  current_time_ms_ = std::max(current_time_ms_, now_ms);
  if (!replaying_) persist_block_locked(chain_.back());
}

void Ledger::persist_block_locked(const Block& b) {
  if (chain_out_ == nullptr) return;
  Bytes blob = b.serialize();
  ByteWriter w;
  w.var({blob.data(), blob.size()});
  chain_out_->write(reinterpret_cast<const char*>(w.bytes().data()),
                    static_cast<std::streamsize>(w.bytes().size()));
  chain_out_->flush();
  if (!chain_out_->good()) {
    throw IoError("chain file write failed", static_cast<std::uint64_t>(b.number));
  }
}

void Ledger::replay_chain_file_locked() {
  std::ifstream in(*config_.chain_file, std::ios::binary);
  if (!in.is_open()) return;  // nothing persisted yet
  Bytes content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (content.empty()) return;

  replaying_ = true;
  ByteReader r({content.data(), content.size()});
  bool first = true;
  while (!r.done()) {
    Bytes blob = r.var();
    Block b = Block::deserialize({blob.data(), blob.size()});
    if (first) {
      first = false;
      if (b.hash() != chain_.front().hash()) {
        throw Error(errid::corrupt_chain_file,
                    "chain file genesis does not match this configuration");
      }
      continue;
    }
    if (b.number != chain_.back().number + 1 || b.parent_hash != chain_.back().hash()) {
      throw Error(errid::corrupt_chain_file,
                  "block " + std::to_string(b.number) + " breaks the parent link");
    }
    std::vector<PendingTx> txs;
    txs.reserve(b.transactions.size());
    for (const auto& tx : b.transactions) {
      Digest h = tx.hash();
      admit_locked(tx, h);
      txs.push_back(std::move(mempool_[tx.from].front()));
      mempool_[tx.from].pop_front();
      if (mempool_[tx.from].empty()) mempool_.erase(tx.from);
      reserved_[tx.from] -= txs.back().reserved;
      if (reserved_[tx.from] == 0) reserved_.erase(tx.from);
      txs.back().reserved = 0;
    }
    seal_block_locked(std::move(txs), b.timestamp_ms, &b);
  }
  replaying_ = false;
}

void Ledger::advance_time(std::int64_t now_ms) {
  std::lock_guard lk(mu_);
  current_time_ms_ = std::max(current_time_ms_, now_ms);
}

std::int64_t Ledger::current_time_ms() const {
  std::lock_guard lk(mu_);
  return current_time_ms_;
}

std::optional<Receipt> Ledger::receipt(const Digest& tx_hash) const {
  std::lock_guard lk(mu_);
  auto it = receipts_.find(tx_hash);
  if (it == receipts_.end()) {
    if (known_tx_.count(tx_hash) > 0) return std::nullopt;  // in mempool
    throw Error(errid::not_found, "unknown transaction " + tx_hash.hex());
  }
  if (!config_.instant_mine) {
    std::int64_t sealed_at = chain_[it->second.block_number].timestamp_ms;
    if (current_time_ms_ < sealed_at + config_.profile.finality_delay_ms) {
      return std::nullopt;  // within the finality window
    }
  }
  return it->second;
}

Bytes Ledger::call(const Address& to, BytesView data) const {
  std::lock_guard lk(mu_);
  auto it = contracts_.find(to);
  if (it == contracts_.end()) {
    throw Error(errid::not_found, "no contract at " + to.hex());
  }
  // Execute against a clone and discard it: ledger state stays untouched.
  std::unique_ptr<NativeContract> snapshot = it->second->clone();
  ExecutionContext ctx(Address{}, to, chain_.back().number, /*read_only=*/true,
                       config_.profile.schedule, snapshot.get());
  return snapshot->call(ctx, data);
}

std::uint64_t Ledger::gas_for(const SignedTransaction& tx) const {
  std::lock_guard lk(mu_);
  return execute_locked(tx, chain_.back().number + 1, /*commit=*/false).gas_used;
}

AccountView Ledger::account(const Address& addr) const {
  std::lock_guard lk(mu_);
  auto it = accounts_.find(addr);
  if (it == accounts_.end()) return {};
  return {it->second.nonce, it->second.balance};
}

std::uint64_t Ledger::pending_nonce(const Address& addr) const {
  std::lock_guard lk(mu_);
  auto it = accounts_.find(addr);
  std::uint64_t state_nonce = it == accounts_.end() ? 0 : it->second.nonce;
  return state_nonce + pending_count_locked(addr);
}

std::uint64_t Ledger::head_number() const {
  std::lock_guard lk(mu_);
  return chain_.back().number;
}

std::int64_t Ledger::head_timestamp_ms() const {
  std::lock_guard lk(mu_);
  return chain_.back().timestamp_ms;
}

Digest Ledger::head_hash() const {
  std::lock_guard lk(mu_);
  return chain_.back().hash();
}

Block Ledger::block(std::uint64_t number) const {
  std::lock_guard lk(mu_);
  if (number >= chain_.size()) {
    throw Error(errid::not_found, "no block " + std::to_string(number));
  }
  return chain_[number];
}

std::size_t Ledger::mempool_size() const {
  std::lock_guard lk(mu_);
  std::size_t n = 0;
  for (const auto& [_, q] : mempool_) n += q.size();
  return n;
}

bool Ledger::contract_exists(const Address& addr) const {
  std::lock_guard lk(mu_);
  return contracts_.count(addr) > 0;
}

std::vector<Event> Ledger::logs(const Address& contract, std::uint64_t from_block,
                                std::uint64_t to_block) const {
  std::lock_guard lk(mu_);
  std::vector<Event> out;
  to_block = std::min<std::uint64_t>(to_block, chain_.back().number);
  for (std::uint64_t n = from_block; n <= to_block && n < chain_.size(); ++n) {
    for (const auto& tx : chain_[n].transactions) {
      auto rit = receipts_.find(tx.hash());
      if (rit == receipts_.end()) continue;
      for (const auto& ev : rit->second.logs) {
        if (ev.emitter == contract) out.push_back(ev);
      }
    }
  }
  return out;
}

Digest Ledger::contract_state_hash(const Address& addr) const {
  std::lock_guard lk(mu_);
  auto it = contracts_.find(addr);
  if (it == contracts_.end()) {
    throw Error(errid::not_found, "no contract at " + addr.hex());
  }
  Bytes state = it->second->state_bytes();
  return sha256(BytesView{state.data(), state.size()});
}

Wei Ledger::total_supply() const {
  std::lock_guard lk(mu_);
  Wei total = 0;
  for (const auto& [_, acct] : accounts_) total += acct.balance;
  return total;
}

}  // namespace firmchain
