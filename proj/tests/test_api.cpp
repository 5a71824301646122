#include "doctest.h"

#include "httplib.h"
#include "lotwise/api.hpp"
#include "lotwise/json_io.hpp"

#include <atomic>
#include <random>
#include <thread>

using namespace lotwise;
namespace fs = std::filesystem;

namespace {

struct Fixture {
    fs::path dir;
    std::unique_ptr<ScenarioStore> store;
    std::unique_ptr<ApiService> service;

    Fixture() {
        static std::atomic<int> counter{0};
        dir = fs::temp_directory_path() / ("lotwise-api-test-" +
                                           std::to_string(std::random_device{}()) + "-" +
                                           std::to_string(counter++));
        store = std::make_unique<ScenarioStore>(dir);
        service = std::make_unique<ApiService>(*store);
    }
    ~Fixture() {
        std::error_code ec;
        fs::remove_all(dir, ec);
    }

    ApiResponse call(const std::string& method, const std::string& path,
                     const std::string& body = "",
                     std::map<std::string, std::string> headers = {}) const {
        return service->handle({method, path, body, std::move(headers)});
    }
};

std::string document(ReferencePiece piece) { return to_json(reference_scenario(piece)).dump(); }

}  // namespace

TEST_CASE("health") {
    Fixture f;
    const auto r = f.call("GET", "/healthz");
    CHECK(r.status == 200);
    CHECK(r.body == "ok");
}

TEST_CASE("evaluate endpoint") {
    Fixture f;
    const auto b = f.call("POST", "/api/v1/evaluate", document(ReferencePiece::b));
    REQUIRE(b.status == 200);
    const Json doc = Json::parse(b.body);
    CHECK(doc["recommendation"]["strategy"] == "push");
    CHECK(doc["recommendation"]["recommended_extra_qty"] == 20000);
    CHECK(std::abs(doc["recommendation"]["gain_at_recommendation"].get<double>() - 178.08) <= 0.005);
    CHECK(doc["warnings"][0]["message"] == "rate below industry range 15–35%");

    const auto a = f.call("POST", "/api/v1/evaluate", document(ReferencePiece::a));
    REQUIRE(a.status == 200);
    CHECK(Json::parse(a.body)["recommendation"]["strategy"] == "pull");
}

TEST_CASE("evaluate endpoint errors") {
    Fixture f;
    Json doc = to_json(reference_scenario(ReferencePiece::b));
    doc["order"].erase("ordered_qty");
    auto r = f.call("POST", "/api/v1/evaluate", doc.dump());
    CHECK(r.status == 400);
    Json err = Json::parse(r.body);
    CHECK(err["field"] == "order.ordered_qty");
    CHECK(err["code"] == "missing_field");

    r = f.call("POST", "/api/v1/evaluate", "{");
    CHECK(r.status == 400);
    CHECK(Json::parse(r.body)["code"] == "parse_error");

    Json invalid = to_json(reference_scenario(ReferencePiece::b));
    invalid["forecast"]["sale_probability"] = 2;
    r = f.call("POST", "/api/v1/evaluate", invalid.dump());
    CHECK(r.status == 400);
    err = Json::parse(r.body);
    CHECK(err["code"] == "validation_failed");
    CHECK(err["field"] == "forecast.sale_probability");

    CHECK(f.call("GET", "/api/v1/evaluate").status == 405);
}

TEST_CASE("sweep endpoint") {
    Fixture f;
    const Json body = {{"scenario", to_json(reference_scenario(ReferencePiece::b))},
                       {"axis", "p"},
                       {"values", {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0}}};
    const auto r = f.call("POST", "/api/v1/sweep", body.dump());
    REQUIRE(r.status == 200);
    const Json doc = Json::parse(r.body);
    REQUIRE(doc["rows"].size() == 10);
    CHECK(doc["rows"][6]["evaluation"]["expected_gain"].get<double>() < 0);
    CHECK(doc["rows"][7]["evaluation"]["expected_gain"].get<double>() > 0);

    // singleton row equals the evaluate endpoint's evaluation
    const Json one = {{"scenario", to_json(reference_scenario(ReferencePiece::b))},
                      {"axis", "x"},
                      {"values", {20000}}};
    const Json row = Json::parse(f.call("POST", "/api/v1/sweep", one.dump()).body)["rows"][0];
    const Json eval =
        Json::parse(f.call("POST", "/api/v1/evaluate", document(ReferencePiece::b)).body);
    Json expected = eval["evaluation"];
    expected.erase("cost_slope");
    CHECK(row["evaluation"] == expected);

    Json bad_axis = body;
    bad_axis["axis"] = "rate";
    const auto e = f.call("POST", "/api/v1/sweep", bad_axis.dump());
    CHECK(e.status == 400);
    CHECK(Json::parse(e.body)["code"] == "invalid_axis");

    Json bad_values = body;
    bad_values["values"] = Json::array();
    CHECK(f.call("POST", "/api/v1/sweep", bad_values.dump()).status == 400);

    Json bad_scenario = body;
    bad_scenario["scenario"]["piece"].erase("setup_cost");
    const auto s = f.call("POST", "/api/v1/sweep", bad_scenario.dump());
    CHECK(s.status == 400);
    CHECK(Json::parse(s.body)["field"] == "scenario.piece.setup_cost");
}

TEST_CASE("break-even and EOQ endpoints") {
    Fixture f;
    const auto be = f.call("POST", "/api/v1/breakeven", document(ReferencePiece::a));
    REQUIRE(be.status == 200);
    CHECK(Json::parse(be.body)["break_even_probability"].get<double>() ==
          doctest::Approx(0.8465194296896841).epsilon(1e-12));

    Json b = to_json(reference_scenario(ReferencePiece::b));
    CHECK(f.call("POST", "/api/v1/eoq", b.dump()).status == 400);
    b["annual_demand"] = 12000;
    const auto eoq = f.call("POST", "/api/v1/eoq", b.dump());
    REQUIRE(eoq.status == 200);
    CHECK(Json::parse(eoq.body)["eoq_qty"] == 42164);
}

TEST_CASE("scenario CRUD") {
    Fixture f;
    const std::string a = document(ReferencePiece::a);
    auto r = f.call("POST", "/api/v1/scenarios", a);
    CHECK(r.status == 201);
    CHECK(r.headers["ETag"] == "\"1\"");
    CHECK(f.call("POST", "/api/v1/scenarios", a).status == 409);

    r = f.call("GET", "/api/v1/scenarios/piece-a");
    REQUIRE(r.status == 200);
    Json doc = Json::parse(r.body);
    CHECK(doc["revision"] == 1);
    CHECK(doc["name"] == "piece-a");
    CHECK(doc["scenario"] == Json::parse(a));

    Json changed = Json::parse(a);
    changed["forecast"]["sale_probability"] = 0.95;
    r = f.call("PUT", "/api/v1/scenarios/piece-a", changed.dump());
    REQUIRE(r.status == 200);
    CHECK(Json::parse(r.body)["revision"] == 2);

    r = f.call("PUT", "/api/v1/scenarios/piece-a", changed.dump(), {{"if-match", "1"}});
    CHECK(r.status == 412);
    r = f.call("PUT", "/api/v1/scenarios/piece-a", changed.dump(), {{"if-match", "\"2\""}});
    CHECK(r.status == 200);
    CHECK(Json::parse(r.body)["revision"] == 3);

    CHECK(f.call("PUT", "/api/v1/scenarios/other", changed.dump()).status == 400);

    r = f.call("GET", "/api/v1/scenarios");
    REQUIRE(r.status == 200);
    CHECK(Json::parse(r.body) == Json::parse(R"([{"name":"piece-a","revision":3}])"));

    CHECK(f.call("GET", "/api/v1/scenarios/missing").status == 404);
    CHECK(f.call("DELETE", "/api/v1/scenarios/piece-a").status == 204);
    CHECK(f.call("GET", "/api/v1/scenarios/piece-a").status == 404);
    CHECK(f.call("DELETE", "/api/v1/scenarios/piece-a").status == 404);
}

TEST_CASE("unknown routes") {
    Fixture f;
    for (const char* path : {"/", "/api", "/api/v2/evaluate", "/api/v1/scenarios/a/b"}) {
        const auto r = f.call("GET", path);
        CHECK(r.status == 404);
        CHECK(Json::parse(r.body)["code"] == "not_found");
    }
    CHECK(f.call("PATCH", "/api/v1/scenarios").status == 405);
}

TEST_CASE("computation leaves the store untouched") {
    Fixture f;
    f.call("POST", "/api/v1/evaluate", document(ReferencePiece::a));
    f.call("POST", "/api/v1/breakeven", document(ReferencePiece::a));
    CHECK(f.store->list().empty());
}

TEST_CASE("over HTTP on an ephemeral port") {
    Fixture f;
    HttpServer server(*f.service, {"127.0.0.1", 0, ""});
    const int port = server.bind();
    REQUIRE(port > 0);
    std::thread runner([&] { server.run(); });

    httplib::Client client("127.0.0.1", port);
    auto health = client.Get("/healthz");
    REQUIRE(health);
    CHECK(health->status == 200);
    CHECK(health->body == "ok");

    auto eval = client.Post("/api/v1/evaluate", document(ReferencePiece::b), "application/json");
    REQUIRE(eval);
    CHECK(eval->status == 200);
    CHECK(Json::parse(eval->body)["recommendation"]["strategy"] == "push");
    CHECK(eval->get_header_value("Access-Control-Allow-Origin") == "*");

    auto created = client.Post("/api/v1/scenarios", document(ReferencePiece::a), "application/json");
    REQUIRE(created);
    CHECK(created->status == 201);
    auto stale = client.Put("/api/v1/scenarios/piece-a", httplib::Headers{{"If-Match", "5"}},
                            document(ReferencePiece::a), "application/json");
    REQUIRE(stale);
    CHECK(stale->status == 412);

    auto missing = client.Get("/nowhere");
    REQUIRE(missing);
    CHECK(missing->status == 404);
    CHECK(Json::parse(missing->body)["code"] == "not_found");

    server.stop();
    runner.join();
}
