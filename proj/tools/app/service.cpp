#include "app/service.hpp"

#include <cstdlib>
#include <fstream>
#include <regex>
#include <sstream>

#include <httplib.h>

#include "app/commands.hpp"
#include "ndagg/error.hpp"
#include "ndagg/mcgdm.hpp"

namespace ndagg::app {

using nlohmann::json;

namespace {

Response jsonResponse(int status, const json& body) {
  Response r;
  r.status = status;
  r.body = body.dump();
  return r;
}

// Every non-2xx response carries exactly one ApiError.
Response apiError(int status, const std::string& code, const std::string& message,
                  json detail = nullptr) {
  json body{{"code", code}, {"message", message}};
  if (!detail.is_null()) body["detail"] = std::move(detail);
  return jsonResponse(status, body);
}

json parseBody(const std::string& body) {
  try {
    return json::parse(body);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON body: ") + e.what());
  }
}

SamplingConfig samplingFrom(const json& body, SamplingConfig base) {
  if (body.contains("seed")) {
    if (!body.at("seed").is_number_unsigned()) throw ValidationError("expected an unsigned integer", "seed");
    base.seed = body.at("seed").get<std::uint64_t>();
  }
  if (body.contains("samples")) {
    if (!body.at("samples").is_number_unsigned()) throw ValidationError("expected an unsigned integer", "samples");
    base.samples = body.at("samples").get<std::size_t>();
  }
  enforceTrialGuard(base.samples);
  return base;
}

DecisionProblem problemFrom(const json& body, bool require_method) {
  DecisionProblem p = DecisionProblem::fromJson(body, require_method);
  enforceSizeGuard(p);
  return p;
}

}  // namespace

bool ProblemStore::validId(const std::string& id) {
  static const std::regex re("[A-Za-z0-9_-]{1,64}");
  return std::regex_match(id, re);
}

void ProblemStore::put(const std::string& id, const json& doc) {
  std::unique_lock lock(mu_);
  std::filesystem::create_directories(dir_);
  const auto tmp = dir_ / (id + ".json.tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << doc.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, file(id));
}

std::optional<json> ProblemStore::get(const std::string& id) const {
  std::shared_lock lock(mu_);
  std::ifstream in(file(id));
  if (!in) return std::nullopt;
  return json::parse(in);
}

bool ProblemStore::remove(const std::string& id) {
  std::unique_lock lock(mu_);
  return std::filesystem::remove(file(id));
}

struct Service::Server {
  httplib::Server http;
};

Service::Service(ServiceConfig cfg)
    : cfg_(std::move(cfg)),
      store_(std::make_unique<ProblemStore>(cfg_.data_dir)),
      server_(std::make_shared<Server>()) {}

Response Service::handle(const Request& req) const {
  Response r;
  try {
    r = dispatch(req);
  } catch (const ValidationError& e) {
    json detail = nullptr;
    if (!e.path().empty()) detail = json{{"path", e.path()}};
    r = apiError(400, "VALIDATION", e.message(), std::move(detail));
  } catch (const ContractViolation& e) {
    r = apiError(422, "VALIDATION", e.what(), json{{"axiom", e.axiom()}});
  } catch (const std::exception& e) {
    r = apiError(500, "INTERNAL", e.what());
  }
  if (!cfg_.cors_origin.empty()) {
    r.headers["Access-Control-Allow-Origin"] = cfg_.cors_origin;
    r.headers["Vary"] = "Origin";
  }
  return r;
}

Response Service::dispatch(const Request& req) const {
  const std::string& m = req.method;
  const std::string& path = req.path;

  if (m == "OPTIONS" && !cfg_.cors_origin.empty()) {
    Response r;
    r.status = 204;
    r.content_type = "text/plain";
    r.headers["Access-Control-Allow-Methods"] = "GET, POST, PUT, DELETE, OPTIONS";
    r.headers["Access-Control-Allow-Headers"] = "Content-Type";
    return r;
  }
  if (m == "GET" && path == "/healthz") {
    Response r;
    r.content_type = "text/plain";
    r.body = "ok";
    return r;
  }
  if (m == "GET" && path == "/api/v1/catalog") return jsonResponse(200, catalogDocument());

  if (m == "POST" && path == "/api/v1/collective") {
    return jsonResponse(200, collectiveDocument(problemFrom(parseBody(req.body), false)));
  }
  if (m == "POST" && path == "/api/v1/rank") {
    return jsonResponse(200, rankDocument(problemFrom(parseBody(req.body), true), cfg_.sampling));
  }
  if (m == "POST" && path == "/api/v1/sensitivity") {
    const json body = parseBody(req.body);
    if (!body.is_object() || !body.contains("problem")) {
      throw ValidationError("missing", "problem");
    }
    DecisionProblem problem;
    try {
      problem = problemFrom(body.at("problem"), true);
    } catch (const ValidationError& e) {
      throw e.within("problem");
    }
    const std::vector<Edit> edits = parseEdits(body.value("edits", json::array()));
    return jsonResponse(200, sensitivityDocument(problem, edits, cfg_.sampling));
  }
  if (m == "POST" && path == "/api/v1/check-order") {
    const json body = parseBody(req.body);
    if (!body.is_object() || !body.contains("order")) throw ValidationError("missing", "order");
    AdmissibleOrderSpec spec;
    try {
      spec = AdmissibleOrderSpec::fromJson(body.at("order"));
    } catch (const ValidationError& e) {
      throw e.within("order");
    }
    if (spec.dimension() > kMaxSide) throw ValidationError("dimension must not exceed 64", "order.tau");
    return jsonResponse(200, checkOrderDocument(spec, samplingFrom(body, cfg_.sampling)));
  }
  if (m == "POST" && path == "/api/v1/classify") {
    const json body = parseBody(req.body);
    for (const char* key : {"aggregator", "order"}) {
      if (!body.is_object() || !body.contains(key)) throw ValidationError("missing", key);
    }
    AdmissibleOrderSpec spec;
    try {
      spec = AdmissibleOrderSpec::fromJson(body.at("order"));
    } catch (const ValidationError& e) {
      throw e.within("order");
    }
    if (spec.dimension() > kMaxSide) throw ValidationError("dimension must not exceed 64", "order.tau");
    std::optional<std::size_t> arity;
    if (body.contains("arity")) {
      if (!body.at("arity").is_number_unsigned()) throw ValidationError("expected an unsigned integer", "arity");
      arity = body.at("arity").get<std::size_t>();
    }
    return jsonResponse(200, classifyDocument(body.at("aggregator"), spec, arity,
                                              samplingFrom(body, cfg_.sampling)));
  }

  static const std::string kProblems = "/api/v1/problems/";
  if (path.rfind(kProblems, 0) == 0) {
    const std::string id = path.substr(kProblems.size());
    if (!ProblemStore::validId(id)) {
      throw ValidationError("problem ids are 1-64 characters from [A-Za-z0-9_-]", "id");
    }
    if (m == "PUT") {
      const json body = parseBody(req.body);
      problemFrom(body, false);
      store_->put(id, body);
      return jsonResponse(200, json{{"id", id}, {"problem", body}});
    }
    if (m == "GET") {
      if (auto doc = store_->get(id)) return jsonResponse(200, *doc);
      return apiError(404, "NOT_FOUND", "no problem with id '" + id + "'");
    }
    if (m == "DELETE") {
      if (store_->remove(id)) return jsonResponse(200, json{{"id", id}, {"deleted", true}});
      return apiError(404, "NOT_FOUND", "no problem with id '" + id + "'");
    }
  }
  return apiError(404, "NOT_FOUND", "no route for " + m + " " + path);
}

int Service::bind(const std::string& host, int port) {
  auto bridge = [this](const httplib::Request& hreq, httplib::Response& hres) {
    const Response r = handle(Request{hreq.method, hreq.path, hreq.body});
    hres.status = r.status;
    for (const auto& [k, v] : r.headers) hres.set_header(k, v);
    hres.set_content(r.body, r.content_type);
  };
  auto& http = server_->http;
  http.Get(".*", bridge);
  http.Post(".*", bridge);
  http.Put(".*", bridge);
  http.Delete(".*", bridge);
  http.Options(".*", bridge);
  if (port == 0) return http.bind_to_any_port(host);
  return http.bind_to_port(host, port) ? port : -1;
}

bool Service::serve() { return server_->http.listen_after_bind(); }

void Service::stop() { server_->http.stop(); }

bool Service::running() const { return server_->http.is_running(); }

int defaultPort() {
  const char* env = std::getenv("NDAGG_PORT");
  if (env == nullptr || *env == '\0') return 8080;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  return *end == '\0' && v > 0 && v < 65536 ? static_cast<int>(v) : 8080;
}

}  // namespace ndagg::app
