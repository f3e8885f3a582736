#include "firmchain/digest.hpp"

#include "firmchain/errors.hpp"

namespace firmchain {

Digest Digest::from_hex(std::string_view s) {
  if (s.size() != 64) {
    throw FormatError("digest hex must be 64 characters, got " + std::to_string(s.size()));
  }
  Bytes raw = hex_decode(s);
  Digest d;
  std::copy(raw.begin(), raw.end(), d.v.begin());
  return d;
}

}  // namespace firmchain
