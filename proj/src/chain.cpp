#include "firmchain/chain.hpp"

#include "firmchain/errors.hpp"
#include "firmchain/sha256.hpp"

namespace firmchain {

namespace {
constexpr std::uint8_t kTxVersion = 1;
}

Bytes SignedTransaction::unsigned_payload() const {
  ByteWriter w;
  w.u8(kTxVersion);
  w.raw(from.view());
  w.u8(to.has_value() ? 1 : 0);
  if (to.has_value()) w.raw(to->view());
  w.u64(nonce);
  w.u64(gas_limit);
  w.u128(gas_price);
  w.u128(value);
  w.var({data.data(), data.size()});
  w.u8(scheme_id);
  w.var({sender_pubkey.data(), sender_pubkey.size()});
  return w.take();
}

Digest SignedTransaction::hash() const {
  Bytes payload = unsigned_payload();
  return sha256(BytesView{payload.data(), payload.size()});
}

Bytes SignedTransaction::serialize() const {
  ByteWriter w;
  Bytes payload = unsigned_payload();
  w.raw({payload.data(), payload.size()});
  w.var({signature.data(), signature.size()});
  return w.take();
}

SignedTransaction SignedTransaction::deserialize(BytesView in) {
  ByteReader r(in);
  SignedTransaction tx;
  if (r.u8() != kTxVersion) throw FormatError("unsupported transaction version");
  Bytes from_raw = r.raw(20);
  std::copy(from_raw.begin(), from_raw.end(), tx.from.v.begin());
  if (r.u8() != 0) {
    Bytes to_raw = r.raw(20);
    Address to;
    std::copy(to_raw.begin(), to_raw.end(), to.v.begin());
    tx.to = to;
  }
  tx.nonce = r.u64();
  tx.gas_limit = r.u64();
  tx.gas_price = r.u128();
  tx.value = r.u128();
  tx.data = r.var();
  tx.scheme_id = r.u8();
  tx.sender_pubkey = r.var();
  tx.signature = r.var();
  r.expect_done();
  return tx;
}

SignedTransaction sign_transaction(const Account& sender, const TxDraft& draft) {
  SignedTransaction tx;
  tx.from = sender.address;
  tx.to = draft.to;
  tx.nonce = draft.nonce;
  tx.gas_limit = draft.gas_limit;
  tx.gas_price = draft.gas_price;
  tx.value = draft.value;
  tx.data = draft.data;
  tx.scheme_id = sender.keys.scheme_id();
  tx.sender_pubkey = sender.keys.public_key();
  Digest h = tx.hash();
  tx.signature = sender.keys.sign(h.view());
  return tx;
}

std::string event_kind_name(EventKind k) {
  switch (k) {
    case EventKind::HashStored: return "HashStored";
    case EventKind::VerificationPerformed: return "VerificationPerformed";
  }
  return "Unknown";
}

Bytes Event::payload_bytes() const {
  ByteWriter w;
  w.raw(digest.view());
  if (matched.has_value()) w.u8(*matched ? 1 : 0);
  if (firmware_id.has_value()) w.str(*firmware_id);
  if (version.has_value()) w.u32(*version);
  return w.take();
}

std::vector<Digest> Block::tx_hashes() const {
  std::vector<Digest> out;
  out.reserve(transactions.size());
  for (const auto& tx : transactions) out.push_back(tx.hash());
  return out;
}

Bytes Block::header_bytes() const {
  ByteWriter w;
  w.u64(number);
  w.raw(parent_hash.view());
  w.u64(static_cast<std::uint64_t>(timestamp_ms));
  w.u64(gas_used);
  w.u32(static_cast<std::uint32_t>(transactions.size()));
  for (const auto& tx : transactions) w.raw(tx.hash().view());
  return w.take();
}

Digest Block::hash() const {
  Bytes h = header_bytes();
  return sha256(BytesView{h.data(), h.size()});
}

Bytes Block::serialize() const {
  ByteWriter w;
  w.u64(number);
  w.raw(parent_hash.view());
  w.u64(static_cast<std::uint64_t>(timestamp_ms));
  w.u64(gas_used);
  w.u32(static_cast<std::uint32_t>(transactions.size()));
  for (const auto& tx : transactions) {
    Bytes raw = tx.serialize();
    w.var({raw.data(), raw.size()});
  }
  w.raw(hash().view());
  return w.take();
}

Block Block::deserialize(BytesView in) {
  ByteReader r(in);
  Block b;
  b.number = r.u64();
  Bytes parent = r.raw(32);
  std::copy(parent.begin(), parent.end(), b.parent_hash.v.begin());
  b.timestamp_ms = static_cast<std::int64_t>(r.u64());
  b.gas_used = r.u64();
  std::uint32_t n = r.u32();
  b.transactions.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    Bytes raw = r.var();
    b.transactions.push_back(SignedTransaction::deserialize({raw.data(), raw.size()}));
  }
  Bytes stored_hash = r.raw(32);
  r.expect_done();
  Digest expect;
  std::copy(stored_hash.begin(), stored_hash.end(), expect.v.begin());
  if (b.hash() != expect) {
    throw Error(errid::corrupt_chain_file,
                "block " + std::to_string(b.number) + " hash mismatch");
  }
  return b;
}

}  // namespace firmchain
