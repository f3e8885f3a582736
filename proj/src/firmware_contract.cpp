#include "firmchain/firmware_contract.hpp"

#include <array>
#include <map>

#include "firmchain/errors.hpp"
#include "firmchain/sha256.hpp"

namespace firmchain {

namespace {

// Selector = first 4 bytes of SHA-256 over the method signature string.
std::array<std::uint8_t, 4> selector_of(std::string_view signature) {
  Digest h = sha256(signature);
  return {h.v[0], h.v[1], h.v[2], h.v[3]};
}

struct MethodTable {
  std::array<std::uint8_t, 4> store_hash = selector_of("storeHash(bytes32)");
  std::array<std::uint8_t, 4> verify_hash = selector_of("verifyHash(bytes32)");
  std::array<std::uint8_t, 4> verify_hash_logged = selector_of("verifyHashLogged(bytes32)");
  std::array<std::uint8_t, 4> register_versioned =
      selector_of("registerVersioned(string,bytes32)");
  std::array<std::uint8_t, 4> verify_versioned = selector_of("verifyVersioned(string,bytes32)");
  std::array<std::uint8_t, 4> get_reference = selector_of("getReference()");
  std::array<std::uint8_t, 4> get_owner = selector_of("getOwner()");
  std::array<std::uint8_t, 4> get_entry = selector_of("getEntry(string)");
};

const MethodTable& methods() {
  static const MethodTable t;
  return t;
}

std::optional<std::array<std::uint8_t, 4>> read_selector(BytesView calldata) {
  if (calldata.size() < 4) return std::nullopt;
  return std::array<std::uint8_t, 4>{calldata[0], calldata[1], calldata[2], calldata[3]};
}

BytesView args_of(BytesView calldata) { return calldata.subspan(4); }

Bytes with_selector(const std::array<std::uint8_t, 4>& sel, BytesView args) {
  Bytes out(sel.begin(), sel.end());
  out.insert(out.end(), args.begin(), args.end());
  return out;
}

Digest read_digest_arg(BytesView args) {
  if (args.size() != 32) throw RevertError(errid::invalid_argument);
  Digest d;
  std::copy(args.begin(), args.end(), d.v.begin());
  return d;
}

std::pair<std::string, Digest> read_id_digest_args(BytesView args) {
  ByteReader r(args);
  std::string id;
  Digest d;
  try {
    id = r.str();
    Bytes raw = r.raw(32);
    std::copy(raw.begin(), raw.end(), d.v.begin());
    r.expect_done();
  } catch (const FormatError&) {
    throw RevertError(errid::invalid_argument);
  }
  if (id.empty() || id.size() > kMaxFirmwareIdLen) throw RevertError(errid::invalid_argument);
  return {std::move(id), d};
}

Bytes bool_bytes(bool v) { return Bytes{static_cast<std::uint8_t>(v ? 1 : 0)}; }

}  // namespace

Bytes FirmwareIntegrity::deploy_data() {
  ByteWriter w;
  w.str(kKind);
  return w.take();
}

Bytes FirmwareIntegrity::store_hash_data(const Digest& d) {
  return with_selector(methods().store_hash, d.view());
}

Bytes FirmwareIntegrity::verify_hash_data(const Digest& d) {
  return with_selector(methods().verify_hash, d.view());
}

Bytes FirmwareIntegrity::verify_hash_logged_data(const Digest& d) {
  return with_selector(methods().verify_hash_logged, d.view());
}

Bytes FirmwareIntegrity::register_versioned_data(const std::string& firmware_id,
                                                 const Digest& d) {
  ByteWriter w;
  w.str(firmware_id);
  w.raw(d.view());
  return with_selector(methods().register_versioned, {w.bytes().data(), w.bytes().size()});
}

Bytes FirmwareIntegrity::verify_versioned_data(const std::string& firmware_id,
                                               const Digest& d) {
  ByteWriter w;
  w.str(firmware_id);
  w.raw(d.view());
  return with_selector(methods().verify_versioned, {w.bytes().data(), w.bytes().size()});
}

Bytes FirmwareIntegrity::get_reference_data() {
  return with_selector(methods().get_reference, {});
}

Bytes FirmwareIntegrity::get_owner_data() { return with_selector(methods().get_owner, {}); }

Bytes FirmwareIntegrity::get_entry_data(const std::string& firmware_id) {
  ByteWriter w;
  w.str(firmware_id);
  return with_selector(methods().get_entry, {w.bytes().data(), w.bytes().size()});
}

std::optional<std::string> FirmwareIntegrity::method_name_for(BytesView calldata) {
  auto sel = read_selector(calldata);
  if (!sel.has_value()) return std::nullopt;
  const MethodTable& t = methods();
  if (*sel == t.store_hash) return "storeHash";
  if (*sel == t.verify_hash) return "verifyHash";
  if (*sel == t.verify_hash_logged) return "verifyHashLogged";
  if (*sel == t.register_versioned) return "registerVersioned";
  if (*sel == t.verify_versioned) return "verifyVersioned";
  if (*sel == t.get_reference) return "getReference";
  if (*sel == t.get_owner) return "getOwner";
  if (*sel == t.get_entry) return "getEntry";
  return std::nullopt;
}

bool FirmwareIntegrity::decode_bool(BytesView return_data) {
  return return_data.size() == 1 && return_data[0] == 1;
}

std::unique_ptr<NativeContract> FirmwareIntegrity::clone() const {
  return std::make_unique<FirmwareIntegrity>(*this);
}

void FirmwareIntegrity::construct(ExecutionContext& ctx, BytesView args) {
  if (!args.empty()) throw RevertError(errid::invalid_argument);
  owner_ = ctx.caller();
  ctx.write_slot("owner");
}

std::optional<std::string> FirmwareIntegrity::method_name(BytesView calldata) const {
  return method_name_for(calldata);
}

Bytes FirmwareIntegrity::call(ExecutionContext& ctx, BytesView calldata) {
  auto sel = read_selector(calldata);
  if (!sel.has_value()) throw RevertError(errid::unknown_method);
  const MethodTable& t = methods();
  BytesView args = args_of(calldata);

  if (*sel == t.store_hash) return store_hash(ctx, args);
  if (*sel == t.verify_hash) return verify_hash(args);
  if (*sel == t.verify_hash_logged) return verify_hash_logged(ctx, args);
  if (*sel == t.register_versioned) return register_versioned(ctx, args);
  if (*sel == t.verify_versioned) return verify_versioned(args);
  if (*sel == t.get_reference) {
    if (!reference_.has_value()) throw RevertError(errid::no_reference);
    return Bytes(reference_->v.begin(), reference_->v.end());
  }
  if (*sel == t.get_owner) return Bytes(owner_.v.begin(), owner_.v.end());
  if (*sel == t.get_entry) return get_entry(args);
  throw RevertError(errid::unknown_method);
}

Bytes FirmwareIntegrity::store_hash(ExecutionContext& ctx, BytesView args) {
  Digest d = read_digest_arg(args);
  if (ctx.caller() != owner_) throw RevertError(errid::unauthorized);
  if (reference_.has_value()) throw RevertError(errid::already_stored);
  reference_ = d;
  stored_at_block_ = ctx.block_number();
  ctx.write_slot("reference");
  Event ev;
  ev.kind = EventKind::HashStored;
  ev.actor = ctx.caller();
  ev.digest = d;
  ctx.emit(std::move(ev));
  return {};
}

Bytes FirmwareIntegrity::verify_hash(BytesView args) const {
  Digest d = read_digest_arg(args);
  if (!reference_.has_value()) throw RevertError(errid::no_reference);
  return bool_bytes(d == *reference_);
}

Bytes FirmwareIntegrity::verify_hash_logged(ExecutionContext& ctx, BytesView args) {
  Digest d = read_digest_arg(args);
  if (!reference_.has_value()) throw RevertError(errid::no_reference);
  bool matched = (d == *reference_);
  Event ev;
  ev.kind = EventKind::VerificationPerformed;
  ev.actor = ctx.caller();
  ev.digest = d;
  ev.matched = matched;
  ctx.emit(std::move(ev));
  return bool_bytes(matched);
}

Bytes FirmwareIntegrity::register_versioned(ExecutionContext& ctx, BytesView args) {
  auto [id, d] = read_id_digest_args(args);
  if (ctx.caller() != owner_) throw RevertError(errid::unauthorized);
  auto it = registry_.find(id);
  std::uint32_t version = it == registry_.end() ? 1 : it->second.version + 1;
  registry_[id] = VersionedEntry{d, version, ctx.block_number()};
  // Each (id, version) pair lands in a fresh slot, so registration gas does
  // not depend on how many versions precede it.
  ctx.write_slot("registry/" + id + "/" + std::to_string(version));
  Event ev;
  ev.kind = EventKind::HashStored;
  ev.actor = ctx.caller();
  ev.digest = d;
  ev.firmware_id = id;
  ev.version = version;
  ctx.emit(std::move(ev));
  ByteWriter w;
  w.u32(version);
  return w.take();
}

Bytes FirmwareIntegrity::verify_versioned(BytesView args) const {
  auto [id, d] = read_id_digest_args(args);
  auto it = registry_.find(id);
  if (it == registry_.end()) throw RevertError(errid::no_reference);
  return bool_bytes(d == it->second.digest);
}

Bytes FirmwareIntegrity::get_entry(BytesView args) const {
  ByteReader r(args);
  std::string id;
  try {
    id = r.str();
    r.expect_done();
  } catch (const FormatError&) {
    throw RevertError(errid::invalid_argument);
  }
  auto it = registry_.find(id);
  if (it == registry_.end()) throw RevertError(errid::no_reference);
  ByteWriter w;
  w.raw(it->second.digest.view());
  w.u32(it->second.version);
  w.u64(it->second.registered_at_block);
  return w.take();
}

Bytes FirmwareIntegrity::state_bytes() const {
  ByteWriter w;
  w.str(kKind);
  w.raw(owner_.view());
  w.u8(reference_.has_value() ? 1 : 0);
  if (reference_.has_value()) {
    w.raw(reference_->view());
    w.u64(stored_at_block_);
  }
  w.u32(static_cast<std::uint32_t>(registry_.size()));
  for (const auto& [id, entry] : registry_) {
    w.str(id);
    w.raw(entry.digest.view());
    w.u32(entry.version);
    w.u64(entry.registered_at_block);
  }
  return w.take();
}

void register_firmware_contract(Ledger& ledger) {
  ledger.register_contract_kind(FirmwareIntegrity::kKind,
                                [] { return std::make_unique<FirmwareIntegrity>(); });
}

}  // namespace firmchain
