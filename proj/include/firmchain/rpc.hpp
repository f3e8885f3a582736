#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <thread>

#include "firmchain/audit.hpp"
#include "firmchain/chain.hpp"
#include "firmchain/ledger.hpp"

#include <nlohmann/json.hpp>

namespace firmchain::rpc {

// Wire error codes (remote-procedure convention).
inline constexpr int kParseError = -32700;
inline constexpr int kMethodNotFound = -32601;
inline constexpr int kInvalidParams = -32602;
inline constexpr int kExecutionError = -32000;

/// HTTP gateway exposing the ledger on POST /rpc. One JSON request object
/// per POST: {"id": <int>, "method": <string>, "params": [...]}. Responses
/// carry exactly one of "result" or "error" {code, message}.
///
/// Method table: net_connected, chain_id, get_balance, get_nonce,
/// send_transaction, call, get_receipt, get_block, get_logs, head_number,
/// profile_info. Transactions travel pre-signed; the gateway holds no keys.
class GatewayServer {
 public:
  explicit GatewayServer(Ledger& ledger, std::string host = "127.0.0.1");
  ~GatewayServer();

  /// Binds (any free port when `port` is 0), serves on background threads,
  /// returns the bound port. Throws Error on bind failure.
  int start(int port);
  void stop();
  const std::string& host() const { return host_; }
  int port() const { return port_; }
  std::string url() const;

  /// Optional wall-time source; when set, the ledger's observed time is
  /// advanced before read methods (finality gating on real-time nodes).
  void set_time_source(std::function<std::int64_t()> now_ms);

  nlohmann::json handle(const std::string& body);  // exposed for tests

 private:
  nlohmann::json dispatch(const nlohmann::json& request);

  Ledger& ledger_;
  std::string host_;
  int port_ = 0;
  std::function<std::int64_t()> time_source_;
  struct Impl;
  std::unique_ptr<Impl> impl_;
  std::thread server_thread_;
};

/// Error returned by the gateway (code + message). The message carries the
/// ledger's stable error id for execution-level failures.
class RpcError : public Error {
 public:
  RpcError(int code, const std::string& message)
      : Error("rpc-error", message + " (code " + std::to_string(code) + ")"),
        code_(code), message_(message) {}
  int code() const { return code_; }
  const std::string& message() const { return message_; }

 private:
  int code_;
  std::string message_;
};

/// Client for the gateway protocol. Transport failures throw
/// Error(connection-failed); gateway errors throw RpcError.
class RpcClient {
 public:
  explicit RpcClient(std::string url, double timeout_s = 5.0);

  nlohmann::json call_method(const std::string& method, nlohmann::json params);

  bool net_connected();
  std::uint64_t chain_id();
  Wei get_balance(const Address& addr);
  std::uint64_t get_nonce(const Address& addr);
  Digest send_transaction(const SignedTransaction& tx);
  Bytes call(const Address& to, BytesView data);
  std::optional<Receipt> get_receipt(const Digest& tx_hash);  // nullopt = pending
  Receipt wait_receipt(const Digest& tx_hash, double timeout_s = 60.0);
  Block get_block(std::uint64_t number, std::vector<Receipt>* receipts = nullptr);
  std::uint64_t head_number();
  nlohmann::json profile_info();

  const std::string& url() const { return url_; }

 private:
  std::string url_;
  double timeout_s_;
  std::atomic<int> next_id_{1};
};

/// Connectivity check: true iff `url` answers net_connected affirmatively
/// within the timeout. Never throws; every failure is `false`.
bool client_connect(const std::string& url, double timeout_s = 5.0);

/// ChainReader over the gateway, for audits identical to in-process ones.
class RemoteReader : public ChainReader {
 public:
  explicit RemoteReader(RpcClient& client) : client_(client) {}
  std::uint64_t head_number() override { return client_.head_number(); }
  Block block(std::uint64_t number) override;
  Receipt receipt(const Digest& tx_hash) override;

 private:
  RpcClient& client_;
};

// JSON codecs shared by server and client.
nlohmann::ordered_json receipt_to_json(const Receipt& r);
Receipt receipt_from_json(const nlohmann::json& j);
nlohmann::ordered_json event_to_json(const Event& e);
Event event_from_json(const nlohmann::json& j);
nlohmann::ordered_json block_to_json(const Block& b);
Block block_from_json(const nlohmann::json& j);

}  // namespace firmchain::rpc
