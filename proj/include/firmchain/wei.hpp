#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace firmchain {

/// Currency amount in wei. All fee arithmetic is exact integer math;
/// 128 bits comfortably hold any balance this simulator can mint.
using Wei = unsigned __int128;

inline constexpr Wei kWeiPerGwei = 1'000'000'000ULL;
inline constexpr Wei kWeiPerEth = static_cast<Wei>(1'000'000'000ULL) * 1'000'000'000ULL;

std::string wei_to_dec(Wei v);
Wei wei_from_dec(std::string_view s);  // throws FormatError

/// Exact decimal ETH rendering, e.g. "0.004430010654608835"; trailing
/// zeros trimmed, at least one digit after the point when fractional.
std::string wei_to_eth(Wei v);

}  // namespace firmchain
