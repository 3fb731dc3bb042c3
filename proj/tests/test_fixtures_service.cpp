#include "doctest.h"
#include "testkit.hpp"

#include "dpz/io.hpp"
#include "dpz/service.hpp"

#include <httplib.h>

#include <thread>

using namespace dpz;
using namespace dpz::testkit;

namespace {

bool only_subject_prefix_fails(const Report& r, const std::string& prefix) {
    bool any = false;
    for (const auto& c : r.results)
        if (!c.ok) {
            if (c.subject.rfind(prefix, 0) != 0) return false;
            any = true;
        }
    return any;
}

json p2_json() {
    return json{{"surface", "P2"},
                {"objects", json::array({json{{"r", 1}, {"c1", {0}}}, json{{"r", 1}, {"c1", {1}}}, json{{"r", 1}, {"c1", {2}}}})}};
}

}  // namespace

TEST_CASE("published tables") {
    const auto& fx = fixtures();
    CHECK(fx.size() == 10);
    int labels = 0;
    for (const auto& sf : fx) labels += static_cast<int>(sf.entries.size());
    CHECK(labels == 30);
    const Report r = verify_tables(fx);
    CHECK(r.failures() == 0);
    CHECK(r.results.size() >= 30 * 10);
    CHECK(fixture("X8", 3, 15).ranks == Vec{1, 2, 4});
    CHECK(fixture("X8", 3, 15).alphas == std::vector<int>{8, 2, 1});
    CHECK_THROWS_AS(fixture("X8", 3, 1), std::out_of_range);
}

TEST_CASE("fault injection in the tables") {
    auto fx = fixtures();
    for (auto& sf : fx)
        if (sf.surface == "X4")
            for (auto& e : sf.entries)
                if (e.label == Label{3, 5}) e.collection.objects[1].c1[0] += 1;
    const Report r = verify_tables(fx);
    CHECK(r.failures() > 0);
    CHECK(only_subject_prefix_fails(r, "X4 (3,5): "));
}

TEST_CASE("relations") {
    const Report r = verify_relations(fixtures());
    CHECK(r.failures() == 0);
    CHECK(r.results.size() == 20);
    bool saw = false;
    for (const auto& c : r.results) saw = saw || c.subject.rfind("X8 (3,21) -> (3,20)", 0) == 0;
    CHECK(saw);
    std::vector<SurfaceFixtures> p2_only{fixtures()[0]};
    REQUIRE(p2_only[0].surface == "P2");
    CHECK(verify_relations(p2_only).results.empty());
}

TEST_CASE("Weyl orbit certificates") {
    const CertificateReport cr = verify_certificates(fixtures());
    CHECK(cr.report.failures() == 0);
    REQUIRE(cr.offset);
    CHECK(*cr.offset == 0);
    const FixtureEntry& e = fixture("X5", 3, 7);
    CHECK(e.orbit == OrbitKind::certificate);
    CHECK(e.certificate.size() == 6);
    int pairs = 0;
    for (const auto& c : cr.report.results)
        if (c.subject.rfind("X5 (3,7): pair", 0) == 0) pairs += c.ok;
    CHECK(pairs == 6);
    CHECK(fixture("P2", 3, 1).orbit == OrbitKind::trivial_group);
    CHECK(fixture("P1xP1", 3, 2).orbit == OrbitKind::all_reflections_equivalent);
}

TEST_CASE("JSON forms") {
    const Collection c = collection_from_json(p2_json());
    CHECK(c.objects == p2_standard().objects);
    CHECK(with_blocks(c).blocks == std::vector<int>{1, 1, 1});
    const Collection back = collection_from_json(to_json(c));
    CHECK(back.objects == c.objects);
    CHECK(to_json(Rational(3, 2)) == "3/2");
    CHECK(to_json(Rational(4)) == 4);

    json bad = p2_json();
    bad["objects"][0]["c1"] = {0, 0};
    CHECK_THROWS_AS(collection_from_json(bad), std::invalid_argument);
    bad = p2_json();
    bad["objects"][1]["chi"] = 4;
    CHECK_THROWS_AS(collection_from_json(bad), std::invalid_argument);
    bad = p2_json();
    bad["surface"] = "X12";
    CHECK_THROWS_AS(collection_from_json(bad), std::invalid_argument);
    const json torsion{{"r", 0}, {"c1", {0, 1}}};
    CHECK_THROWS_AS(numclass_from_json(torsion, Surface::get("X1")), std::invalid_argument);
}

TEST_CASE("service handlers") {
    const Service svc(fixtures());
    const Response surfaces = svc.handle("GET", "/surfaces", "");
    CHECK(surfaces.status == 200);
    CHECK(surfaces.body.size() == 10);

    const Response labels = svc.handle("GET", "/fixtures", "");
    CHECK(labels.body["X4"].size() == 6);
    const Response one = svc.handle("GET", "/fixtures/P1xP1/3/2", "");
    CHECK(one.status == 200);
    CHECK(one.body["minimal"] == true);
    CHECK(svc.handle("GET", "/fixtures/P2/3/9", "").status == 404);

    const Response valid = svc.handle("POST", "/collection/validate", to_json(fixture("X6", 3, 8).collection).dump());
    CHECK(valid.status == 200);
    CHECK(valid.body["ok"] == true);
    CHECK(valid.body["very_strong"] == true);

    const json req{{"collection", p2_json()}, {"op", "quiver_mutate"}, {"index", 0}, {"side", "right"}};
    const Response mutated = svc.handle("POST", "/collection/mutate", req.dump());
    CHECK(mutated.status == 200);
    CHECK(mutated.body["total_rank"] == 4);
    CHECK(mutated.body["minimal"] == false);
    CHECK(mutated.body["area_x2"] == 6);
    CHECK(mutated.body["quiver"]["arrows"] == json::parse("[[0,3,-6],[-3,0,3],[6,-3,0]]"));

    json braid = req;
    braid["op"] = "braid";
    braid["index"] = 1;
    CHECK(svc.handle("POST", "/collection/mutate", braid.dump()).body["total_rank"] == 4);
    braid["op"] = "twist";
    CHECK(svc.handle("POST", "/collection/mutate", braid.dump()).status == 400);

    const Response polygon = svc.handle("POST", "/collection/polygon", json{{"collection", p2_json()}, {"svg", true}}.dump());
    CHECK(polygon.body["polygon"]["vertices"] == json::parse("[[1,8],[-1,-7],[0,-1]]"));
    CHECK(polygon.body["svg"].get<std::string>().find("<svg") == 0);
    CHECK(svc.handle("POST", "/collection/minimal", p2_json().dump()).body["minimal"] == true);
    CHECK(svc.handle("POST", "/collection/quiver", p2_json().dump()).body["quiver"]["n"] == 3);

    json bad = p2_json();
    bad["objects"][2]["c1"] = {2, 0};
    const Response malformed = svc.handle("POST", "/collection/validate", bad.dump());
    CHECK(malformed.status == 400);
    CHECK(malformed.body["ok"] == false);
    CHECK(svc.handle("POST", "/collection/validate", "{not json").status == 400);
    CHECK(svc.handle("GET", "/nowhere", "").status == 404);
}

TEST_CASE("service over HTTP") {
    const Service svc(fixtures());
    httplib::Server server;
    svc.mount(server);
    const int port = server.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    std::thread worker([&] { server.listen_after_bind(); });
    server.wait_until_ready();
    httplib::Client client("127.0.0.1", port);
    const json req{{"collection", p2_json()}, {"index", 0}, {"side", "right"}};
    const auto res = client.Post("/collection/mutate", req.dump(), "application/json");
    REQUIRE(res);
    CHECK(res->status == 200);
    CHECK(json::parse(res->body)["total_rank"] == 4);
    const auto missing = client.Get("/nowhere");
    REQUIRE(missing);
    CHECK(missing->status == 404);
    server.stop();
    worker.join();
}
