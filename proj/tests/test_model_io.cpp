#include "doctest.h"

#include "crsym/model_io.hpp"

#include <cstdio>

using namespace crsym;
using json = nlohmann::ordered_json;

TEST_CASE("builtin models survive a JSON round trip") {
    for (const auto& r : builtin_models()) {
        INFO(r.name);
        json a = model_to_json(r);
        ModelRecord back = model_from_json(json::parse(a.dump()));
        CHECK(model_to_json(back).dump() == a.dump());
        CHECK(back.name == r.name);
        CHECK(back.generators == r.generators);
        CHECK(back.expected_dim == r.expected_dim);
        CHECK(back.mode == r.mode);
        CHECK(back.witnesses.size() == r.witnesses.size());
        if (r.rho) CHECK(*back.rho == *r.rho);
        if (r.relations) CHECK(*back.relations == *r.relations);
        CHECK(back.symmetry_dim == r.symmetry_dim);
    }
}

TEST_CASE("numbers are strings") {
    json a = model_to_json(*find_model("pointblowup-n1-p"));
    for (const auto& w : a["witnesses"])
        for (const auto& c : w["point"]) CHECK(c.is_string());
    CHECK(a["schema_version"] == kSchemaVersion);
    CHECK(a["source"]["map"] == "pi_o");
}

TEST_CASE("file round trip and verification from file") {
    std::string path = "model_io_roundtrip.json";
    save_model_file(*find_model("ep123"), path);
    auto r = load_model_file(path);
    std::remove(path.c_str());
    auto rep = verify_model(r);
    CHECK(rep.pass());
    CHECK(rep.dim == 9);
}

TEST_CASE("reports are deterministic") {
    for (const char* name : {"quadric-n2-pm", "r3-heis3", "m5"}) {
        auto r = *find_model(name);
        CHECK(report_to_json(verify_model(r)).dump() == report_to_json(verify_model(r)).dump());
    }
}

TEST_CASE("a hand-written model file") {
    json j = json::parse(R"J({
      "schema_version": 1,
      "name": "hand",
      "n": 1,
      "signature": [1],
      "defining": "Im(w) - abs2(z1)*abs2(w)",
      "generators": ["Re(i*z1*d/dz1)", "Re(z1*d/dz1)", "Re(w*z1*d/dz1 + w^2*d/dw)"],
      "expected_dim": 3,
      "expected_algebra": "none",
      "mode": "full",
      "witnesses": [{"point": ["1", "0"], "levi": {"nondegenerate": false, "rank": 0}}, {"point": "z1=1/2, w=0"}]
    })J");
    auto r = model_from_json(j);
    CHECK(r.generators.size() == 3);
    CHECK(r.witnesses[1].point[0] == GaussRational(mpq_class(1, 2)));
    auto rep = verify_model(r);
    // the middle field is not tangent
    CHECK(!rep.pass());
}

TEST_CASE("malformed model files") {
    json good = model_to_json(*find_model("quadric-n1-p"));
    auto broken = [&](auto edit) {
        json j = good;
        edit(j);
        return j;
    };
    CHECK_THROWS_AS(model_from_json(broken([](json& j) { j["schema_version"] = 7; })), ModelFormatError);
    CHECK_THROWS_AS(model_from_json(broken([](json& j) { j.erase("name"); })), ModelFormatError);
    CHECK_THROWS_AS(model_from_json(broken([](json& j) { j["signature"] = json::array({1, 1}); })), ModelFormatError);
    CHECK_THROWS_AS(model_from_json(broken([](json& j) { j["defining"] = "Im(w"; })), ModelFormatError);
    CHECK_THROWS(model_from_json(broken([](json& j) { j["defining"] = "w"; })));
    CHECK_THROWS(model_from_json(broken([](json& j) { j["mode"] = "quick"; })));
    CHECK_THROWS_AS(model_from_json(broken([](json& j) { j["witnesses"] = json::array({json{{"point", json::array({1, 0})}}}); })),
                    ModelFormatError);
    CHECK_THROWS_AS(model_from_json(json::array()), ModelFormatError);
    CHECK_THROWS_AS(load_model_file("/nonexistent/model.json"), ModelFormatError);
}
