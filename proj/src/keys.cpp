#include "firmchain/keys.hpp"

#include <openssl/evp.h>

#include "firmchain/errors.hpp"
#include "firmchain/sha256.hpp"

namespace firmchain {

namespace {

struct PkeyDeleter {
  void operator()(EVP_PKEY* p) const { EVP_PKEY_free(p); }
};
struct CtxDeleter {
  void operator()(EVP_MD_CTX* c) const { EVP_MD_CTX_free(c); }
};
using PkeyPtr = std::unique_ptr<EVP_PKEY, PkeyDeleter>;
using MdCtxPtr = std::unique_ptr<EVP_MD_CTX, CtxDeleter>;

PkeyPtr private_pkey(BytesView key32) {
  PkeyPtr p(EVP_PKEY_new_raw_private_key(EVP_PKEY_ED25519, nullptr, key32.data(),
                                         key32.size()));
  if (!p) throw Error("crypto-failure", "ed25519 private key");
  return p;
}

PkeyPtr public_pkey(BytesView pub32) {
  PkeyPtr p(EVP_PKEY_new_raw_public_key(EVP_PKEY_ED25519, nullptr, pub32.data(),
                                        pub32.size()));
  if (!p) throw Error("crypto-failure", "ed25519 public key");
  return p;
}

}  // namespace

KeyPair KeyPair::from_seed(BytesView seed) {
  Digest priv = sha256(seed);
  return from_private_key(priv.view());
}

KeyPair KeyPair::from_seed(std::string_view seed) { return from_seed(as_bytes(seed)); }

KeyPair KeyPair::from_private_key(BytesView key32) {
  if (key32.size() != 32) throw ArgError("ed25519 private key must be 32 bytes");
  KeyPair kp;
  kp.private_key_.assign(key32.begin(), key32.end());
  PkeyPtr p = private_pkey(key32);
  std::size_t publen = 32;
  kp.public_key_.resize(publen);
  if (EVP_PKEY_get_raw_public_key(p.get(), kp.public_key_.data(), &publen) != 1 ||
      publen != 32) {
    throw Error("crypto-failure", "derive public key");
  }
  return kp;
}

Bytes KeyPair::sign(BytesView message) const {
  PkeyPtr p = private_pkey({private_key_.data(), private_key_.size()});
  MdCtxPtr ctx(EVP_MD_CTX_new());
  if (!ctx || EVP_DigestSignInit(ctx.get(), nullptr, nullptr, nullptr, p.get()) != 1) {
    throw Error("crypto-failure", "sign init");
  }
  std::size_t siglen = 64;
  Bytes sig(siglen);
  if (EVP_DigestSign(ctx.get(), sig.data(), &siglen, message.data(), message.size()) != 1) {
    throw Error("crypto-failure", "sign");
  }
  sig.resize(siglen);
  return sig;
}

bool KeyPair::verify(BytesView pubkey, BytesView message, BytesView signature) {
  if (pubkey.size() != 32 || signature.size() != 64) return false;
  PkeyPtr p(EVP_PKEY_new_raw_public_key(EVP_PKEY_ED25519, nullptr, pubkey.data(),
                                        pubkey.size()));
  if (!p) return false;
  MdCtxPtr ctx(EVP_MD_CTX_new());
  if (!ctx || EVP_DigestVerifyInit(ctx.get(), nullptr, nullptr, nullptr, p.get()) != 1) {
    return false;
  }
  return EVP_DigestVerify(ctx.get(), signature.data(), signature.size(), message.data(),
                          message.size()) == 1;
}

Account Account::from_seed(BytesView seed) {
  Account a{KeyPair::from_seed(seed), {}};
  a.address = Address::from_public_key({a.keys.public_key().data(), a.keys.public_key().size()});
  return a;
}

Account Account::from_seed(std::string_view seed) { return from_seed(as_bytes(seed)); }

std::string Account::dev_seed(unsigned index) {
  return "firmchain-dev-" + std::to_string(index);
}

Account Account::dev(unsigned index) { return from_seed(dev_seed(index)); }

}  // namespace firmchain
