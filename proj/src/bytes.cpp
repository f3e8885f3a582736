#include "firmchain/bytes.hpp"

namespace firmchain {

namespace {
constexpr char kHexDigits[] = "0123456789abcdef";

int hex_nibble(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}
}  // namespace

std::string hex_encode(BytesView data) {
  std::string out;
  out.reserve(data.size() * 2);
  for (std::uint8_t b : data) {
    out.push_back(kHexDigits[b >> 4]);
    out.push_back(kHexDigits[b & 0x0f]);
  }
  return out;
}

Bytes hex_decode(std::string_view hex) {
  if (hex.size() % 2 != 0) {
    throw FormatError("hex string has odd length " + std::to_string(hex.size()));
  }
  Bytes out;
  out.reserve(hex.size() / 2);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    int hi = hex_nibble(hex[i]);
    int lo = hex_nibble(hex[i + 1]);
    if (hi < 0) {
      throw FormatError(std::string("invalid hex character '") + hex[i] +
                        "' at position " + std::to_string(i));
    }
    if (lo < 0) {
      throw FormatError(std::string("invalid hex character '") + hex[i + 1] +
                        "' at position " + std::to_string(i + 1));
    }
    out.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
  }
  return out;
}

void ByteWriter::u32(std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) {
    out_.push_back(static_cast<std::uint8_t>(v >> shift));
  }
}

void ByteWriter::u64(std::uint64_t v) {
  for (int shift = 56; shift >= 0; shift -= 8) {
    out_.push_back(static_cast<std::uint8_t>(v >> shift));
  }
}

void ByteWriter::u128(unsigned __int128 v) {
  for (int shift = 120; shift >= 0; shift -= 8) {
    out_.push_back(static_cast<std::uint8_t>(v >> shift));
  }
}

void ByteWriter::var(BytesView b) {
  u32(static_cast<std::uint32_t>(b.size()));
  raw(b);
}

void ByteReader::need(std::size_t n) const {
  if (pos_ + n > in_.size()) {
    throw FormatError("truncated input: need " + std::to_string(n) + " bytes at offset " +
                      std::to_string(pos_) + ", have " + std::to_string(in_.size() - pos_));
  }
}

std::uint8_t ByteReader::u8() {
  need(1);
  return in_[pos_++];
}

std::uint32_t ByteReader::u32() {
  need(4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v = (v << 8) | in_[pos_++];
  return v;
}

std::uint64_t ByteReader::u64() {
  need(8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v = (v << 8) | in_[pos_++];
  return v;
}

unsigned __int128 ByteReader::u128() {
  need(16);
  unsigned __int128 v = 0;
  for (int i = 0; i < 16; ++i) v = (v << 8) | in_[pos_++];
  return v;
}

Bytes ByteReader::raw(std::size_t n) {
  need(n);
  Bytes out(in_.begin() + static_cast<std::ptrdiff_t>(pos_),
            in_.begin() + static_cast<std::ptrdiff_t>(pos_ + n));
  pos_ += n;
  return out;
}

Bytes ByteReader::var() {
  std::uint32_t n = u32();
  return raw(n);
}

std::string ByteReader::str() {
  Bytes b = var();
  return {b.begin(), b.end()};
}

void ByteReader::expect_done() const {
  if (!done()) {
    throw FormatError(std::to_string(in_.size() - pos_) + " trailing bytes");
  }
}

}  // namespace firmchain
