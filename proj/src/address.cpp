#include "firmchain/address.hpp"

#include "firmchain/errors.hpp"
#include "firmchain/sha256.hpp"

namespace firmchain {

std::string Address::hex() const {
  return "0x" + hex_encode(view());
}

Address Address::from_public_key(BytesView pubkey) {
  Digest h = sha256(pubkey);
  Address a;
  std::copy(h.v.begin() + 12, h.v.end(), a.v.begin());
  return a;
}

Address Address::parse(std::string_view s) {
  if (s.size() != 42 || s.substr(0, 2) != "0x") {
    throw FormatError("address must be 0x followed by 40 hex characters");
  }
  Bytes raw = hex_decode(s.substr(2));
  Address a;
  std::copy(raw.begin(), raw.end(), a.v.begin());
  return a;
}

}  // namespace firmchain
