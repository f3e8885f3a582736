#include "firmchain/sha256.hpp"

#include <openssl/evp.h>

#include "firmchain/errors.hpp"

namespace firmchain {

Sha256::Sha256() {
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (ctx == nullptr || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1) {
    EVP_MD_CTX_free(ctx);
    throw Error("crypto-failure", "EVP_DigestInit_ex");
  }
  ctx_ = ctx;
}

Sha256::~Sha256() {
  if (ctx_ != nullptr) EVP_MD_CTX_free(static_cast<EVP_MD_CTX*>(ctx_));
}

void Sha256::update(BytesView data) { update(data.data(), data.size()); }

void Sha256::update(const void* data, std::size_t len) {
  if (len == 0) return;
  if (EVP_DigestUpdate(static_cast<EVP_MD_CTX*>(ctx_), data, len) != 1) {
    throw Error("crypto-failure", "EVP_DigestUpdate");
  }
}

Digest Sha256::finish() {
  Digest d;
  unsigned int len = 0;
  if (EVP_DigestFinal_ex(static_cast<EVP_MD_CTX*>(ctx_), d.v.data(), &len) != 1 || len != 32) {
    throw Error("crypto-failure", "EVP_DigestFinal_ex");
  }
  return d;
}

Digest sha256(BytesView data) {
  Sha256 h;
  h.update(data);
  return h.finish();
}

Digest sha256(std::string_view data) { return sha256(as_bytes(data)); }

}  // namespace firmchain
