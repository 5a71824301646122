#pragma once

#include <map>
#include <memory>
#include <string>

#include "lotwise/store.hpp"

namespace lotwise {

struct ApiRequest {
    std::string method;
    std::string path;
    std::string body;
    std::map<std::string, std::string> headers;  // lower-case names
};

struct ApiResponse {
    int status = 200;
    std::string body;
    std::string content_type = "application/json";
    std::map<std::string, std::string> headers;
};

/// JSON-over-HTTP facade, independent of the transport:
///
///   GET    /healthz                    -> "ok"
///   POST   /api/v1/evaluate            scenario          -> recommendation + evaluation
///   POST   /api/v1/sweep               {scenario, axis, values} -> sweep table
///   POST   /api/v1/breakeven           scenario          -> break-even probability
///   POST   /api/v1/eoq                 scenario          -> EOQ comparison
///   GET    /api/v1/scenarios                             -> [{name, revision}]
///   POST   /api/v1/scenarios           scenario          -> 201 (409 on duplicate)
///   GET    /api/v1/scenarios/{name}                      -> {name, revision, created_at, scenario}
///   PUT    /api/v1/scenarios/{name}    scenario          -> revision + 1 (If-Match checked)
///   DELETE /api/v1/scenarios/{name}                      -> 204
///
/// Errors are {"code", "message", "field"?} with 400/404/405/409/412.
class ApiService {
public:
    explicit ApiService(ScenarioStore& store) : store_(store) {}

    ApiResponse handle(const ApiRequest& request) const;

private:
    ApiResponse evaluate(const ApiRequest& request) const;
    ApiResponse sweep(const ApiRequest& request) const;
    ApiResponse breakeven(const ApiRequest& request) const;
    ApiResponse eoq(const ApiRequest& request) const;
    ApiResponse scenarios(const ApiRequest& request) const;
    ApiResponse scenario_item(const ApiRequest& request, const std::string& name) const;

    ScenarioStore& store_;
};

struct ServeOptions {
    std::string host = "127.0.0.1";
    int port = 8080;
    std::string static_dir;  // optional directory served at /
};

/// HTTP transport for an ApiService. Port 0 binds an ephemeral port.
class HttpServer {
public:
    HttpServer(const ApiService& service, ServeOptions options);
    ~HttpServer();
    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    /// Bound port, or -1 when the address (or static directory) is unusable.
    int bind();
    /// Blocks until stop() is called from another thread.
    void run();
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Binds and serves until the process is stopped. False when binding fails.
bool serve_http(const ApiService& service, const ServeOptions& options);

}  // namespace lotwise
