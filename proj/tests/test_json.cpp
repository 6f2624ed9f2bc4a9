#include <doctest.h>

#include "oracles.hpp"
#include "twistor/json_io.hpp"

using namespace twistor;
using twistor::io::json;

TEST_CASE("line and quaternion records round-trip") {
    auto l = sample_twistor_lines(1, 3)[0];
    json j = io::line_to_json(l);
    CHECK(j["points"].size() == 2);
    CHECK(j["points"][0][0][0].is_string());
    auto back = io::line_from_json(j);
    CHECK(back.a() == l.a());
    CHECK(back.b() == l.b());
    Quaternion q(GaussianRational(mpq_class(1, 2), mpq_class(1, 3)), GaussianRational(2));
    CHECK(io::quaternion_from_json(io::quaternion_to_json(q)) == q);
    CHECK(io::quaternion_to_json(q)["q1"] == json::array({"1/2", "1/3"}));
}

TEST_CASE("plucker records require the order tag") {
    auto l = sample_twistor_lines(1, 4)[0];
    json j = io::plucker_to_json(l.plucker());
    CHECK(j["order"] == "p01,p02,p03,p12,p13,p23");
    CHECK(io::plucker_from_json(j).p == l.plucker().p);
    json missing = j;
    missing.erase("order");
    CHECK_THROWS_AS(io::plucker_from_json(missing), InvalidInput);
    json wrong = j;
    wrong["order"] = "p01,p23,p02,p13,p03,p12";
    CHECK_THROWS_AS(io::plucker_from_json(wrong), InvalidInput);
    json off = j;
    off["plucker"][0] = json::array({"7", "0"});
    CHECK_THROWS_AS(io::plucker_from_json(off), InvalidInput);
}

TEST_CASE("surface records") {
    Configuration c;
    c.lines = sample_twistor_lines(6, 5);
    auto sys = linear_system(c, 4);
    Rng rng(1);
    ExactForm f = general_member(sys.basis, rng);
    json j = io::surface_to_json(f);
    CHECK(j["order"] == "gradedlex");
    CHECK(io::surface_from_json(j) == f);
    CHECK(io::surface_from_json(json::parse(j.dump())) == f);

    json sparse = json::parse(R"({"degree": 2, "order": "gradedlex",
        "coeffs": [{"alpha": [1,0,0,1], "re": "1", "im": "0"}, {"alpha": [0,1,1,0], "re": "-1"}]})");
    ExactForm q = io::surface_from_json(sparse);
    CHECK(q.coeff({1, 0, 0, 1}) == GaussianRational(1));
    CHECK(q.coeff({0, 1, 1, 0}) == GaussianRational(-1));
    CHECK(q.coeff({2, 0, 0, 0}).is_zero());

    json bad_degree = sparse;
    bad_degree["coeffs"][0]["alpha"] = json::array({1, 1, 1, 1});
    CHECK_THROWS_AS(io::surface_from_json(bad_degree), InvalidInput);
    json bad_order = sparse;
    bad_order["order"] = "lex";
    CHECK_THROWS_AS(io::surface_from_json(bad_order), InvalidInput);
    json bad_number = sparse;
    bad_number["coeffs"][0]["re"] = 0.5;
    CHECK_THROWS_AS(io::surface_from_json(bad_number), InvalidInput);
}

TEST_CASE("configuration and report records") {
    Configuration c;
    c.lines = sample_twistor_lines(2, 6);
    c.fat_points = {ExactPoint{1, 2, 3, 4}};
    json j = io::configuration_to_json(c);
    Configuration back = io::configuration_from_json(j);
    CHECK(back.lines.size() == 2);
    CHECK(back.fat_points[0] == c.fat_points[0]);
    auto r = cohomology(c, 3);
    json rj = io::report_to_json(r);
    CHECK(rj["h0"] == r.h0);
    CHECK(rj["cols"] == 20);
    CHECK(rj["rows"] == 12);
}
