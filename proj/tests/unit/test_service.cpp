#include "landgen/app/http.hpp"
#include "landgen/app/service.hpp"
#include "landgen/generator.hpp"

#include <doctest.h>

#include <atomic>
#include <thread>

using namespace landgen;
using namespace landgen::app;

namespace {

std::string instance_text(std::uint64_t seed) { return serialize(random_instance(seed, GenerationStrata{})); }

}  // namespace

TEST_CASE("empty service answers 409 until an instance is loaded") {
    Service s;
    CHECK(s.get_instance().status == 409);
    CHECK(s.post_evaluate(R"({"points": [[0, 0]]})").status == 409);
    CHECK(s.get_optimum().status == 409);
    const auto d = s.get_defaults();
    CHECK(d.status == 200);
    CHECK(d.body["schema_version"] == kSchemaVersion);
    CHECK(d.body["parameters"].size() == parameter_table().size());
}

TEST_CASE("put replaces the instance only when valid") {
    Service s;
    REQUIRE(s.put_instance(instance_text(1)).status == 200);
    const auto before = s.get_instance().body;

    auto doc = json::parse(instance_text(2));
    doc["blocks"][0]["components"][0]["kappa"]["plus"][0] = 0;
    const auto rejected = s.put_instance(doc.dump());
    CHECK(rejected.status == 422);
    CHECK_FALSE(rejected.body["report"]["errors"].empty());
    CHECK(s.get_instance().body == before);

    CHECK(s.put_instance("{not json").status == 400);
    CHECK(s.get_instance().body == before);
}

TEST_CASE("random applies only on request") {
    Service s;
    const auto r = s.post_random(R"({"seed": 5})");
    REQUIRE(r.status == 200);
    CHECK(r.body["instance"] == to_json(random_instance(5, GenerationStrata{})));
    CHECK(s.get_instance().status == 409);
    CHECK(s.post_random(R"({"seed": 5, "apply": true, "strata": {"components": [2, 2]}})").status == 200);
    CHECK(s.get_instance().body["instance"]["blocks"][0]["components"].size() == 2);
    CHECK(s.post_random(R"({"seed": -1})").status == 400);
    CHECK(s.post_random(R"({"seed": 1, "strata": {"kappa": [0, 1]}})").status == 400);
}

TEST_CASE("evaluate and optimum agree") {
    Service s(random_instance(8, GenerationStrata{}));
    const auto opt = s.get_optimum();
    REQUIRE(opt.status == 200);
    json req = {{"points", json::array({opt.body["location"]})}};
    const auto ev = s.post_evaluate(req.dump());
    REQUIRE(ev.status == 200);
    CHECK(ev.body["values"][0].get<double>() == doctest::Approx(opt.body["value"].get<double>()).epsilon(1e-12));
    CHECK(ev.body["attribution"][0][0]["block"] == 0);
    CHECK(s.post_evaluate(R"({"points": [[1]]})").status == 400);
}

TEST_CASE("grid endpoint matches evaluate at probe points") {
    Service s(random_instance(12, GenerationStrata{}));
    const auto g = s.post_grid(R"({"axes": [{"index": 1, "resolution": 9}, {"index": 2, "resolution": 7}]})");
    REQUIRE(g.status == 200);
    const auto& fixed = g.body["fixed"];
    const auto& xs = g.body["axes"][0]["values"];
    const auto& ys = g.body["axes"][1]["values"];
    json points = json::array();
    std::vector<double> expected;
    for (std::size_t k = 0; k < 10; ++k) {
        const std::size_t row = (k * 3) % 7, col = (k * 5) % 9;
        json p = fixed;
        p[0] = xs[col];
        p[1] = ys[row];
        points.push_back(p);
        expected.push_back(g.body["values"][row * 9 + col].get<double>());
    }
    const auto ev = s.post_evaluate(json{{"points", points}}.dump());
    REQUIRE(ev.status == 200);
    for (std::size_t k = 0; k < 10; ++k) CHECK(ev.body["values"][k].get<double>() == expected[k]);
    CHECK(s.post_grid(R"({"axes": [{"index": 1, "resolution": 1}, {"index": 2}]})").status == 400);
}

TEST_CASE("readers never see a partial instance during swaps") {
    Service s(random_instance(1, GenerationStrata{}));
    const std::string a = instance_text(1), b = instance_text(2);
    std::atomic<bool> stop{false};
    std::atomic<int> bad{0};
    std::thread reader([&] {
        while (!stop) {
            const auto snap = s.snapshot();
            if (snap->document != to_json(snap->problem.instance())) ++bad;
        }
    });
    for (int k = 0; k < 200; ++k) s.put_instance(k % 2 ? a : b);
    stop = true;
    reader.join();
    CHECK(bad == 0);
}

TEST_CASE("http round trip on localhost") {
    Service s;
    httplib::Server server;
    mount_routes(server, s);
    const int port = server.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    std::thread th([&] { server.listen_after_bind(); });
    server.wait_until_ready();

    httplib::Client client("127.0.0.1", port);
    auto r = client.Get("/api/instance");
    REQUIRE(r);
    CHECK(r->status == 409);

    r = client.Put("/api/instance", instance_text(4), "application/json");
    REQUIRE(r);
    CHECK(r->status == 200);

    auto bad = json::parse(instance_text(4));
    bad["blocks"][0]["weight"] = -1;
    r = client.Put("/api/instance", bad.dump(), "application/json");
    REQUIRE(r);
    CHECK(r->status == 422);
    CHECK(json::parse(r->body)["schema_version"] == kSchemaVersion);

    r = client.Get("/api/instance");
    REQUIRE(r);
    CHECK(json::parse(r->body)["instance"] == json::parse(instance_text(4)));

    r = client.Get("/api/optimum");
    REQUIRE(r);
    const auto opt = json::parse(r->body);
    CHECK(opt["exactness"] == "exact");

    r = client.Post("/api/evaluate", json{{"points", json::array({opt["location"]})}}.dump(), "application/json");
    REQUIRE(r);
    CHECK(json::parse(r->body)["values"][0] == opt["value"]);

    r = client.Get("/api/defaults");
    REQUIRE(r);
    CHECK(r->status == 200);

    server.stop();
    th.join();
}
