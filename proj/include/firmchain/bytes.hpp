#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "firmchain/errors.hpp"

namespace firmchain {

using Bytes = std::vector<std::uint8_t>;
using BytesView = std::span<const std::uint8_t>;

std::string hex_encode(BytesView data);

/// Decodes a hex string (case-insensitive, no 0x prefix). Throws FormatError
/// naming the first offending character position.
Bytes hex_decode(std::string_view hex);

inline BytesView as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

/// Canonical serialization writer: big-endian fixed-width integers,
/// u32-length-prefixed variable byte fields. All tx/block/state hashing
/// goes through this encoding.
class ByteWriter {
 public:
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u32(std::uint32_t v);
  void u64(std::uint64_t v);
  void u128(unsigned __int128 v);
  void raw(BytesView b) { out_.insert(out_.end(), b.begin(), b.end()); }
  void var(BytesView b);                 // u32 length + bytes
  void str(std::string_view s) { var(as_bytes(s)); }

  const Bytes& bytes() const { return out_; }
  Bytes take() { return std::move(out_); }

 private:
  Bytes out_;
};

/// Bounds-checked reader over a canonical serialization. Throws FormatError
/// on truncated or oversized input.
class ByteReader {
 public:
  explicit ByteReader(BytesView in) : in_(in) {}

  std::uint8_t u8();
  std::uint32_t u32();
  std::uint64_t u64();
  unsigned __int128 u128();
  Bytes raw(std::size_t n);
  Bytes var();
  std::string str();

  std::size_t remaining() const { return in_.size() - pos_; }
  bool done() const { return pos_ == in_.size(); }
  void expect_done() const;

 private:
  void need(std::size_t n) const;
  BytesView in_;
  std::size_t pos_ = 0;
};

}  // namespace firmchain
