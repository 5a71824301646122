#include <algorithm>
#include <cctype>

#include "httplib.h"
#include "lotwise/api.hpp"
#include "lotwise/json_io.hpp"

namespace lotwise {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

void dispatch(const ApiService& service, const httplib::Request& req, httplib::Response& res) {
    ApiRequest request{req.method, req.path, req.body, {}};
    for (const auto& [name, value] : req.headers) request.headers[lower(name)] = value;

    const ApiResponse response = service.handle(request);
    res.status = response.status;
    for (const auto& [name, value] : response.headers) res.set_header(name, value);
    if (response.status != 204) res.set_content(response.body, response.content_type);
}

}  // namespace

struct HttpServer::Impl {
    Impl(const ApiService& s, ServeOptions o) : service(s), options(std::move(o)) {}

    const ApiService& service;
    ServeOptions options;
    httplib::Server server;
};

HttpServer::HttpServer(const ApiService& service, ServeOptions options)
    : impl_(std::make_unique<Impl>(service, std::move(options))) {
    auto& server = impl_->server;
    // the planner UI may be hosted elsewhere on the LAN
    server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                {"Access-Control-Allow-Headers", "Content-Type, If-Match"},
                                {"Access-Control-Allow-Methods", "GET, POST, PUT, DELETE"},
                                {"Access-Control-Expose-Headers", "ETag"}});

    auto handler = [&svc = impl_->service](const httplib::Request& req, httplib::Response& res) {
        dispatch(svc, req, res);
    };
    const std::string routes = R"((/healthz|/api/.*))";
    server.Get(routes, handler);
    server.Post(routes, handler);
    server.Put(routes, handler);
    server.Delete(routes, handler);
    server.Options(".*", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
    server.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
        if (res.status == 404 && res.body.empty()) {
            const Json body = {{"code", "not_found"},
                               {"message", "no route for " + req.method + " " + req.path}};
            res.set_content(body.dump(), "application/json");
        }
    });
}

HttpServer::~HttpServer() = default;

int HttpServer::bind() {
    auto& opts = impl_->options;
    if (!opts.static_dir.empty() && !impl_->server.set_mount_point("/", opts.static_dir)) {
        return -1;
    }
    if (opts.port == 0) return impl_->server.bind_to_any_port(opts.host);
    return impl_->server.bind_to_port(opts.host, opts.port) ? opts.port : -1;
}

void HttpServer::run() { impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

bool serve_http(const ApiService& service, const ServeOptions& options) {
    HttpServer server(service, options);
    if (server.bind() < 0) return false;
    server.run();
    return true;
}

}  // namespace lotwise
