#include "firmchain/gas.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "firmchain/errors.hpp"

namespace firmchain {

std::uint64_t GasSchedule::calldata_gas(BytesView data) const {
  std::uint64_t gas = 0;
  for (std::uint8_t b : data) {
    gas += (b == 0) ? calldata_zero_byte : calldata_nonzero_byte;
  }
  return gas;
}

std::uint64_t GasSchedule::log_gas(std::uint64_t topics, std::uint64_t data_len) const {
  return log_base + topics * log_per_topic + data_len * log_per_data_byte;
}

std::uint64_t GasSchedule::surcharge_for(const std::string& method) const {
  auto it = method_surcharge.find(method);
  return it == method_surcharge.end() ? 0 : it->second;
}

Wei CalibrationProfile::gas_price_for(const std::string& method) const {
  auto it = gas_price_wei.find(method);
  if (it != gas_price_wei.end()) return it->second;
  it = gas_price_wei.find("default");
  if (it != gas_price_wei.end()) return it->second;
  return kWeiPerGwei;
}

nlohmann::json CalibrationProfile::to_json() const {
  nlohmann::json sched;
  sched["tx_base"] = schedule.tx_base;
  sched["calldata_zero_byte"] = schedule.calldata_zero_byte;
  sched["calldata_nonzero_byte"] = schedule.calldata_nonzero_byte;
  sched["create_surcharge"] = schedule.create_surcharge;
  sched["code_deposit_per_byte"] = schedule.code_deposit_per_byte;
  sched["storage_write_new"] = schedule.storage_write_new;
  sched["storage_write_update"] = schedule.storage_write_update;
  sched["log_base"] = schedule.log_base;
  sched["log_per_topic"] = schedule.log_per_topic;
  sched["log_per_data_byte"] = schedule.log_per_data_byte;
  sched["method_surcharge"] = schedule.method_surcharge;

  nlohmann::json prices;
  for (const auto& [k, v] : gas_price_wei) prices[k] = wei_to_dec(v);

  nlohmann::json j;
  j["name"] = name;
  j["chain_id"] = chain_id;
  j["block_interval_s"] = static_cast<double>(block_interval_ms) / 1000.0;
  j["finality_delay_s"] = static_cast<double>(finality_delay_ms) / 1000.0;
  j["block_gas_limit"] = block_gas_limit;
  j["declared_code_size"] = declared_code_size;
  j["gas_schedule"] = sched;
  j["gas_price_wei"] = prices;
  return j;
}

CalibrationProfile CalibrationProfile::from_json(const nlohmann::json& j) {
  CalibrationProfile p;
  p.name = j.value("name", std::string("custom"));
  p.chain_id = j.value("chain_id", std::uint64_t{1337});
  if (j.contains("block_interval_s")) {
    p.block_interval_ms = static_cast<std::int64_t>(j.at("block_interval_s").get<double>() * 1000.0 + 0.5);
  }
  if (j.contains("finality_delay_s")) {
    p.finality_delay_ms = static_cast<std::int64_t>(j.at("finality_delay_s").get<double>() * 1000.0 + 0.5);
  }
  if (p.block_interval_ms <= 0) throw FormatError("block_interval_s must be positive");
  if (p.finality_delay_ms < 0) throw FormatError("finality_delay_s must be non-negative");
  p.block_gas_limit = j.value("block_gas_limit", std::uint64_t{30'000'000});
  p.declared_code_size = j.value("declared_code_size", std::uint64_t{1800});
  if (j.contains("gas_schedule")) {
    const auto& s = j.at("gas_schedule");
    GasSchedule& g = p.schedule;
    g.tx_base = s.value("tx_base", g.tx_base);
    g.calldata_zero_byte = s.value("calldata_zero_byte", g.calldata_zero_byte);
    g.calldata_nonzero_byte = s.value("calldata_nonzero_byte", g.calldata_nonzero_byte);
    g.create_surcharge = s.value("create_surcharge", g.create_surcharge);
    g.code_deposit_per_byte = s.value("code_deposit_per_byte", g.code_deposit_per_byte);
    g.storage_write_new = s.value("storage_write_new", g.storage_write_new);
    g.storage_write_update = s.value("storage_write_update", g.storage_write_update);
    g.log_base = s.value("log_base", g.log_base);
    g.log_per_topic = s.value("log_per_topic", g.log_per_topic);
    g.log_per_data_byte = s.value("log_per_data_byte", g.log_per_data_byte);
    if (s.contains("method_surcharge")) {
      g.method_surcharge = s.at("method_surcharge").get<std::map<std::string, std::uint64_t>>();
    }
  }
  if (j.contains("gas_price_wei")) {
    for (const auto& [k, v] : j.at("gas_price_wei").items()) {
      p.gas_price_wei[k] = v.is_string() ? wei_from_dec(v.get<std::string>())
                                         : static_cast<Wei>(v.get<std::uint64_t>());
    }
  }
  return p;
}

void CalibrationProfile::save(const std::filesystem::path& path) const {
  std::ofstream f(path);
  if (!f.is_open()) throw IoError("cannot write " + path.string(), 0);
  f << to_json().dump(2) << "\n";
}

CalibrationProfile CalibrationProfile::load(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f.is_open()) throw IoError("cannot open " + path.string(), 0);
  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError("profile " + path.string() + ": " + e.what());
  }
  return from_json(j);
}

CalibrationProfile CalibrationProfile::builtin(const std::string& name) {
  // Method surcharges below are calibrated so that whole-transaction totals
  // under the documented calldata encodings land on the measured values:
  // deploy 454,695 / storeHash 78,200 / verifyHashLogged 91,891 gas, and
  // registerVersioned 78,200 for a 6-character firmware id.
  if (name == "default" || name == "sepolia-paper") {
    CalibrationProfile p;
    p.name = name;
    p.schedule.method_surcharge = {
        {"deploy", 21'359},
        {"storeHash", 35'243},
        {"verifyHashLogged", 68'926},
        {"registerVersioned", 34'971},
    };
    p.gas_price_wei["default"] = kWeiPerGwei;
    if (name == "sepolia-paper") {
      p.chain_id = 11155111;
      p.block_interval_ms = 12'000;
      p.finality_delay_ms = 8'600;
      // Uniform calldata byte cost keeps method totals independent of the
      // digest's byte content.
      p.schedule.calldata_zero_byte = 16;
      p.gas_price_wei["deploy"] = 9'742'818'053ULL;
      p.gas_price_wei["storeHash"] = 1'539'866'239ULL;
      p.gas_price_wei["verifyHashLogged"] = 1'539'866'239ULL;
      p.gas_price_wei["registerVersioned"] = 1'539'866'239ULL;
    }
    return p;
  }
  throw Error(errid::not_found, "no builtin profile named '" + name + "'");
}

CalibrationProfile CalibrationProfile::resolve(const std::string& name_or_path) {
  if (name_or_path == "default" || name_or_path == "sepolia-paper") {
    return builtin(name_or_path);
  }
  return load(name_or_path);
}

}  // namespace firmchain
