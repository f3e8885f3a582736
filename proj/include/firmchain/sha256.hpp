#pragma once

#include <string_view>

#include "firmchain/bytes.hpp"
#include "firmchain/digest.hpp"

namespace firmchain {

/// Streaming SHA-256 (libcrypto-backed). Safe to create from any thread;
/// one instance is single-use.
class Sha256 {
 public:
  Sha256();
  ~Sha256();
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;

  void update(BytesView data);
  void update(const void* data, std::size_t len);
  Digest finish();

 private:
  void* ctx_;
};

Digest sha256(BytesView data);
Digest sha256(std::string_view data);

}  // namespace firmchain
