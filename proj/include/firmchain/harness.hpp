#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "firmchain/wei.hpp"

#include <nlohmann/json_fwd.hpp>

namespace firmchain::harness {

enum class MutationModel {
  BitFlip,   // flip one random bit
  BytePatch, // overwrite one random byte with a different value
  Truncate,  // drop a random-length tail
  Extend,    // append random bytes
  Identity,  // no change (control arm)
  Mixed,     // uniform choice among the four tampering models
};

MutationModel mutation_model_from_string(const std::string& s);
std::string mutation_model_name(MutationModel m);

struct TrialRecord {
  std::uint64_t index = 0;
  double latency_ms = 0;
  std::uint64_t gas_used = 0;
  bool detected = false;
  bool rejected = false;
  bool false_accept = false;

  nlohmann::ordered_json to_json() const;
};

/// Aggregated scenario outcome. Every statistic is recomputable from
/// trial_log; the seed makes the run exactly replayable.
struct ScenarioReport {
  std::string scenario;
  std::string profile;
  std::uint64_t seed = 0;
  std::string interpretation;
  std::uint64_t trials = 0;
  std::uint64_t detections = 0;
  std::uint64_t rejections = 0;
  std::uint64_t false_accepts = 0;
  std::uint64_t control_accepts = 0;
  double mean_latency_s = 0;
  double p50_latency_s = 0;
  double p95_latency_s = 0;
  double analytic_latency_s = 0;
  double throughput_tx_per_min = 0;
  double analytic_throughput_tx_per_min = 0;
  double mean_gas = 0;
  Wei fee_total_wei = 0;
  std::vector<TrialRecord> trial_log;

  nlohmann::ordered_json to_json(bool include_trial_log = true) const;
  void write(const std::filesystem::path& path, bool include_trial_log = true) const;
  std::string summary_lines() const;
};

struct TamperConfig {
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  MutationModel mutation = MutationModel::BitFlip;
  std::size_t firmware_size = 4096;
  std::string profile = "sepolia-paper";
};

struct ReplayConfig {
  std::uint64_t trials = 100;
  std::uint64_t seed = 1;
  std::string profile = "sepolia-paper";
};

struct SpoofConfig {
  std::uint64_t trials = 100;
  std::uint64_t seed = 1;
  std::size_t adversaries = 4;
  std::string profile = "sepolia-paper";
};

struct PerfConfig {
  unsigned submitters = 1;
  std::uint64_t txs_per_submitter = 1000;
  std::uint64_t seed = 1;
  std::string profile = "sepolia-paper";
};

/// Mutate-and-verify trials against a registered reference. Detection means
/// the read-only verification returned false; a false accept is a match
/// verdict despite an actual digest difference.
ScenarioReport run_tamper_scenario(const TamperConfig& cfg);

/// Resubmits captured signed transactions verbatim; each must be rejected
/// nonce-reuse. A fresh correctly-nonced control transaction is accepted.
ScenarioReport run_replay_scenario(const ReplayConfig& cfg);

/// Adversarial store/register attempts from non-owner accounts; all must
/// revert unauthorized with the contract state hash unchanged.
ScenarioReport run_spoof_scenario(const SpoofConfig& cfg);

/// Sequential submitters (send, wait for receipt, think, repeat) against a
/// simulated-clock node. Confirmation latency is submission to inclusion-
/// block sealing plus finality delay. Uniform-random think time in
/// [0, block_interval) randomizes the submission phase; reported throughput
/// is the in-flight rate, submitters * 60 / mean latency.
ScenarioReport run_perf_bench(const PerfConfig& cfg);

}  // namespace firmchain::harness
