#include "firmchain/wei.hpp"

#include <algorithm>

#include "firmchain/errors.hpp"

namespace firmchain {

std::string wei_to_dec(Wei v) {
  if (v == 0) return "0";
  std::string out;
  while (v > 0) {
    out.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Wei wei_from_dec(std::string_view s) {
  if (s.empty()) throw FormatError("empty wei amount");
  Wei v = 0;
  constexpr Wei kMax = ~static_cast<Wei>(0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c < '0' || c > '9') {
      throw FormatError(std::string("invalid digit '") + c + "' at position " +
                        std::to_string(i));
    }
    unsigned d = static_cast<unsigned>(c - '0');
    if (v > (kMax - d) / 10) throw FormatError("wei amount overflows 128 bits");
    v = v * 10 + d;
  }
  return v;
}

std::string wei_to_eth(Wei v) {
  Wei whole = v / kWeiPerEth;
  Wei frac = v % kWeiPerEth;
  std::string out = wei_to_dec(whole);
  if (frac == 0) return out;
  std::string f = wei_to_dec(frac);
  f.insert(f.begin(), 18 - f.size(), '0');
  while (!f.empty() && f.back() == '0') f.pop_back();
  out.push_back('.');
  out += f;
  return out;
}

}  // namespace firmchain
