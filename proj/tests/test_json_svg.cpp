#include "porism/json_io.hpp"
#include "porism/rng.hpp"
#include "porism/svg.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace porism;

TEST_CASE("sphere JSON round trip", "[io]") {
    Rng rng(157);
    for (int rep = 0; rep < 100; ++rep) {
        auto s = rng.sphere(rng.uniform_int(2, 4));
        nlohmann::json j = to_json(s);
        auto back = sphere_from_json(j);
        CHECK(back.bend() == s.bend());
        CHECK(back.cobend() == s.cobend());
        CHECK(norm(back.bend_center() - s.bend_center()) == 0.0);
    }
    auto line = OrientedSphere::line(Vec{0.0, 1.0}, 1.5);
    auto back = sphere_from_json(to_json(line));
    CHECK(back.is_line());
    CHECK(back.line_offset() == Catch::Approx(1.5));

    nlohmann::json bad = {{"bend", 1.0}, {"cobend", 1.0}, {"bend_center", {0.0, 0.0}}};
    CHECK_THROWS_AS(sphere_from_json(bad), std::domain_error);
}

TEST_CASE("quadruple JSON round trip", "[io]") {
    Quadruple q = construct_quadruple(2, 2, 3);
    Quadruple back = quadruple_from_json(to_json(q));
    for (int i = 0; i < 4; ++i) {
        CHECK(back.bends[i] == q.bends[i]);
        CHECK(back.centers->at(i).re == q.centers->at(i).re);
        CHECK(back.centers->at(i).im == q.centers->at(i).im);
    }
    Quadruple bare;
    bare.bends = {0, 0, 1, 1};
    Quadruple bare_back = quadruple_from_json(to_json(bare));
    CHECK_FALSE(bare_back.centers.has_value());
}

TEST_CASE("design JSON carries the catalog fields", "[io]") {
    nlohmann::json j = to_json(design_by_name("cube"));
    CHECK(j["strength"] == 3);
    CHECK(j["failure_degree"] == 4);
    CHECK(j["points"].size() == 8);
}

TEST_CASE("svg output contains the drawn circles", "[io]") {
    SvgCanvas canvas;
    canvas.add_circle(0.0, 0.0, 1.0);
    canvas.add_sphere(OrientedSphere::from_center_radius(Vec{2.0, 0.0}, 0.5), "#f00");
    canvas.add_sphere(OrientedSphere::line(Vec{0.0, 1.0}, -1.0));
    std::string svg = canvas.str();
    CHECK(canvas.circle_count() == 2);
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("<circle") != std::string::npos);
    CHECK(svg.find("<line") != std::string::npos);
    CHECK(svg.find("fill=\"none\"") != std::string::npos);
}
