#pragma once

// JSON-over-HTTP facade. handle() is a pure function of the request plus the
// problem store, so tests drive it without sockets; listen() wires it into
// cpp-httplib.

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>

#include <nlohmann/json.hpp>

#include "ndagg/sampling.hpp"

namespace ndagg::app {

struct Request {
  std::string method;
  std::string path;
  std::string body;
};

struct Response {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
  std::map<std::string, std::string> headers;

  nlohmann::json json() const { return nlohmann::json::parse(body); }
};

struct ServiceConfig {
  std::filesystem::path data_dir = "ndagg-problems";
  std::string cors_origin;  // empty disables CORS headers
  SamplingConfig sampling;
};

// Flat JSON files, one per id. Writes are serialized; reads run concurrently.
class ProblemStore {
 public:
  explicit ProblemStore(std::filesystem::path dir) : dir_(std::move(dir)) {}

  static bool validId(const std::string& id);

  void put(const std::string& id, const nlohmann::json& doc);
  // nullopt when absent.
  std::optional<nlohmann::json> get(const std::string& id) const;
  bool remove(const std::string& id);

 private:
  std::filesystem::path file(const std::string& id) const { return dir_ / (id + ".json"); }

  std::filesystem::path dir_;
  mutable std::shared_mutex mu_;
};

class Service {
 public:
  explicit Service(ServiceConfig cfg = {});

  Response handle(const Request& req) const;

  // Binds host:port (0 picks a free port) and returns the port, or -1.
  int bind(const std::string& host, int port);
  // Serves on the bound socket until stop() is called.
  bool serve();
  bool listen(const std::string& host, int port) { return bind(host, port) >= 0 && serve(); }
  void stop();
  bool running() const;

  const ServiceConfig& config() const noexcept { return cfg_; }

 private:
  Response dispatch(const Request& req) const;

  ServiceConfig cfg_;
  std::unique_ptr<ProblemStore> store_;
  struct Server;
  std::shared_ptr<Server> server_;
};

// Port from NDAGG_PORT, default 8080.
int defaultPort();

}  // namespace ndagg::app
