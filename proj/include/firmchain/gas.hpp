#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

#include "firmchain/bytes.hpp"
#include "firmchain/wei.hpp"

#include <nlohmann/json_fwd.hpp>

namespace firmchain {

/// Cost constants for transaction execution. Profiles calibrate the
/// per-method surcharge table so that whole-transaction totals reproduce
/// measured environments; the structural constants keep gas sensitive to
/// calldata size, storage writes and log volume.
struct GasSchedule {
  std::uint64_t tx_base = 21'000;
  std::uint64_t calldata_zero_byte = 4;
  std::uint64_t calldata_nonzero_byte = 16;
  std::uint64_t create_surcharge = 32'000;
  std::uint64_t code_deposit_per_byte = 200;
  std::uint64_t storage_write_new = 20'000;
  std::uint64_t storage_write_update = 5'000;
  std::uint64_t log_base = 375;
  std::uint64_t log_per_topic = 375;
  std::uint64_t log_per_data_byte = 8;
  std::map<std::string, std::uint64_t> method_surcharge;  // method name -> gas

  std::uint64_t calldata_gas(BytesView data) const;
  std::uint64_t log_gas(std::uint64_t topics, std::uint64_t data_len) const;
  std::uint64_t surcharge_for(const std::string& method) const;
};

/// Named parameter set reproducing a measured chain environment: timing,
/// block capacity, gas schedule and suggested per-method gas prices.
struct CalibrationProfile {
  std::string name = "default";
  std::uint64_t chain_id = 1337;
  std::int64_t block_interval_ms = 12'000;
  std::int64_t finality_delay_ms = 0;
  std::uint64_t block_gas_limit = 30'000'000;
  std::uint64_t declared_code_size = 1'800;
  GasSchedule schedule;
  std::map<std::string, Wei> gas_price_wei;  // method name or "default" -> wei

  Wei gas_price_for(const std::string& method) const;

  nlohmann::json to_json() const;
  static CalibrationProfile from_json(const nlohmann::json& j);
  void save(const std::filesystem::path& path) const;
  static CalibrationProfile load(const std::filesystem::path& path);

  /// Built-in profiles: "default" and "sepolia-paper". Throws Error
  /// (not-found) for any other name.
  static CalibrationProfile builtin(const std::string& name);

  /// builtin() when `name_or_path` matches a built-in, otherwise load() it
  /// as a file path.
  static CalibrationProfile resolve(const std::string& name_or_path);
};

}  // namespace firmchain
