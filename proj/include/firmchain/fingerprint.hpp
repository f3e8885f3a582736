#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <variant>

#include "firmchain/digest.hpp"

namespace firmchain {

inline constexpr std::size_t kDefaultChunkSize = 4096;

/// A firmware binary to fingerprint: either a file on disk or an in-memory
/// byte buffer, plus its declared length. The bytes are treated as opaque;
/// no format parsing happens here.
struct FirmwareImage {
  std::variant<std::filesystem::path, Bytes> source;
  std::uint64_t declared_length = 0;

  static FirmwareImage from_file(const std::filesystem::path& path);  // stats the file
  static FirmwareImage from_bytes(Bytes data);
};

/// SHA-256 of the full byte sequence, read in `chunk_size` blocks. The result
/// is independent of chunk_size. Throws ArgError on chunk_size = 0, IoError
/// (carrying the failing offset) on unreadable input or when the number of
/// bytes read differs from image.declared_length.
Digest compute_digest(const FirmwareImage& image, std::size_t chunk_size = kDefaultChunkSize);

/// Hashes a stream to exhaustion. No length check (used for stdin).
Digest compute_stream_digest(std::istream& in, std::size_t chunk_size = kDefaultChunkSize);

Digest compute_file_digest(const std::filesystem::path& path,
                           std::size_t chunk_size = kDefaultChunkSize);

/// 64-character lowercase hex rendering.
std::string digest_to_hex(const Digest& d);

/// Inverse of digest_to_hex; accepts upper or lower case.
Digest parse_hex_digest(std::string_view s);

}  // namespace firmchain
