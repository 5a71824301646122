#include "lotwise/api.hpp"

#include <charconv>

#include "lotwise/json_io.hpp"

namespace lotwise {

namespace {

constexpr std::string_view kScenarioPrefix = "/api/v1/scenarios/";

ApiResponse json_response(int status, const Json& body) {
    ApiResponse r;
    r.status = status;
    r.body = body.dump();
    return r;
}

ApiResponse error_response(int status, const std::string& code, const std::string& message,
                           const std::string& field = "") {
    Json body = {{"code", code}, {"message", message}};
    if (!field.empty()) body["field"] = field;
    return json_response(status, body);
}

ApiResponse input_error(const InputError& e) {
    return error_response(400, e.code(), e.what(), e.field());
}

ApiResponse method_not_allowed() {
    return error_response(405, "method_not_allowed", "method not allowed on this route");
}

Json parse_body(const std::string& body) {
    try {
        return Json::parse(body);
    } catch (const Json::parse_error& e) {
        throw InputError("parse_error", "", std::string("parse error: ") + e.what());
    }
}

/// Parses and validates; throws InputError on the first hard violation.
Scenario checked_scenario(const Json& doc, std::vector<Violation>& violations,
                          const std::string& prefix = "") {
    Scenario s;
    try {
        s = scenario_from_json(doc);
    } catch (const InputError& e) {
        if (prefix.empty()) throw;
        const std::string field = e.field().empty() ? prefix : prefix + "." + e.field();
        throw InputError(e.code(), field, e.what());
    }
    violations = validate_scenario(s);
    for (const auto& v : violations) {
        if (v.severity == Severity::error) {
            throw InputError("validation_failed", prefix.empty() ? v.field : prefix + "." + v.field,
                             v.message);
        }
    }
    return s;
}

std::optional<int> if_match(const ApiRequest& request) {
    const auto it = request.headers.find("if-match");
    if (it == request.headers.end()) return std::nullopt;
    std::string_view text = it->second;
    // accept both 3 and "3"
    if (text.size() >= 2 && text.front() == '"' && text.back() == '"') {
        text = text.substr(1, text.size() - 2);
    }
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw InputError("invalid_header", "If-Match", "If-Match must be a revision number");
    }
    return value;
}

int store_status(StoreError::Kind kind) {
    switch (kind) {
        case StoreError::Kind::not_found: return 404;
        case StoreError::Kind::conflict: return 409;
        case StoreError::Kind::precondition_failed: return 412;
        case StoreError::Kind::invalid_name: return 400;
        case StoreError::Kind::io: return 500;
    }
    return 500;
}

const char* store_code(StoreError::Kind kind) {
    switch (kind) {
        case StoreError::Kind::not_found: return "not_found";
        case StoreError::Kind::conflict: return "conflict";
        case StoreError::Kind::precondition_failed: return "revision_mismatch";
        case StoreError::Kind::invalid_name: return "invalid_name";
        case StoreError::Kind::io: return "store_io";
    }
    return "store_error";
}

Json stored_document(const StoredScenario& stored) {
    return {{"name", stored.scenario.name},
            {"revision", stored.revision},
            {"created_at", stored.created_at},
            {"scenario", to_json(stored.scenario)}};
}

ApiResponse with_revision(ApiResponse r, int revision) {
    r.headers["ETag"] = "\"" + std::to_string(revision) + "\"";
    return r;
}

}  // namespace

ApiResponse ApiService::handle(const ApiRequest& request) const {
    const std::string& path = request.path;
    try {
        if (path == "/healthz") {
            if (request.method != "GET") return method_not_allowed();
            return {200, "ok", "text/plain", {}};
        }
        if (path == "/api/v1/evaluate") {
            return request.method == "POST" ? evaluate(request) : method_not_allowed();
        }
        if (path == "/api/v1/sweep") {
            return request.method == "POST" ? sweep(request) : method_not_allowed();
        }
        if (path == "/api/v1/breakeven") {
            return request.method == "POST" ? breakeven(request) : method_not_allowed();
        }
        if (path == "/api/v1/eoq") {
            return request.method == "POST" ? eoq(request) : method_not_allowed();
        }
        if (path == "/api/v1/scenarios") return scenarios(request);
        if (path.size() > kScenarioPrefix.size() && path.rfind(kScenarioPrefix, 0) == 0) {
            const std::string name = path.substr(kScenarioPrefix.size());
            if (name.find('/') == std::string::npos) return scenario_item(request, name);
        }
        return error_response(404, "not_found", "no route for " + request.method + " " + path);
    } catch (const InputError& e) {
        return input_error(e);
    } catch (const DomainError& e) {
        return error_response(400, "domain_error", e.what());
    } catch (const StoreError& e) {
        return error_response(store_status(e.kind()), store_code(e.kind()), e.what());
    } catch (const std::exception& e) {
        return error_response(500, "internal", e.what());
    }
}

ApiResponse ApiService::evaluate(const ApiRequest& request) const {
    std::vector<Violation> violations;
    const Scenario s = checked_scenario(parse_body(request.body), violations);
    return json_response(200, evaluation_document(s, recommend(s), violations));
}

ApiResponse ApiService::sweep(const ApiRequest& request) const {
    const Json body = parse_body(request.body);
    if (!body.is_object()) throw InputError("invalid_type", "", "body must be a JSON object");
    for (const auto& item : body.items()) {
        if (item.key() != "scenario" && item.key() != "axis" && item.key() != "values") {
            throw InputError("unknown_key", item.key(), "unknown key '" + item.key() + "'");
        }
    }
    if (!body.contains("scenario")) {
        throw InputError("missing_field", "scenario", "missing field 'scenario'");
    }
    std::vector<Violation> violations;
    const Scenario s = checked_scenario(body.at("scenario"), violations, "scenario");
    const SweepSpec spec = sweep_spec_from_json(body);
    Json doc = to_json(run_sweep(s, spec));
    doc["warnings"] = to_json(violations);
    return json_response(200, doc);
}

ApiResponse ApiService::breakeven(const ApiRequest& request) const {
    std::vector<Violation> violations;
    const Scenario s = checked_scenario(parse_body(request.body), violations);
    const PushEvaluation e = evaluate_target(s);
    return json_response(200, {{"scenario", s.name},
                               {"extra_qty", e.extra_qty},
                               {"break_even_probability",
                                e.break_even_probability ? Json(*e.break_even_probability)
                                                         : Json(nullptr)},
                               {"warnings", to_json(violations)}});
}

ApiResponse ApiService::eoq(const ApiRequest& request) const {
    std::vector<Violation> violations;
    const Scenario s = checked_scenario(parse_body(request.body), violations);
    if (!s.annual_demand) {
        throw InputError("missing_field", "annual_demand", "EOQ undefined: missing annual_demand");
    }
    Json doc = to_json(compare_to_eoq(s));
    doc["scenario"] = s.name;
    doc["warnings"] = to_json(violations);
    return json_response(200, doc);
}

ApiResponse ApiService::scenarios(const ApiRequest& request) const {
    if (request.method == "GET") {
        Json list = Json::array();
        for (const auto& item : store_.list()) {
            list.push_back({{"name", item.name}, {"revision", item.revision}});
        }
        return json_response(200, list);
    }
    if (request.method == "POST") {
        std::vector<Violation> violations;
        const Scenario s = checked_scenario(parse_body(request.body), violations);
        const StoredScenario stored = store_.create(s);
        return with_revision(json_response(201, stored_document(stored)), stored.revision);
    }
    return method_not_allowed();
}

ApiResponse ApiService::scenario_item(const ApiRequest& request, const std::string& name) const {
    if (!ScenarioStore::valid_name(name)) {
        return error_response(404, "not_found", "no scenario '" + name + "'");
    }
    if (request.method == "GET") {
        const auto stored = store_.get(name);
        if (!stored) return error_response(404, "not_found", "no scenario '" + name + "'");
        return with_revision(json_response(200, stored_document(*stored)), stored->revision);
    }
    if (request.method == "PUT") {
        const auto expected = if_match(request);
        std::vector<Violation> violations;
        const Scenario s = checked_scenario(parse_body(request.body), violations);
        if (s.name != name) {
            throw InputError("name_mismatch", "name",
                             "document name '" + s.name + "' does not match the path");
        }
        const StoredScenario stored = store_.update(name, s, expected);
        return with_revision(json_response(200, stored_document(stored)), stored.revision);
    }
    if (request.method == "DELETE") {
        store_.remove(name, if_match(request));
        return {204, "", "application/json", {}};
    }
    return method_not_allowed();
}

}  // namespace lotwise
