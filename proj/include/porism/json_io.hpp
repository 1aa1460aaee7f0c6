#pragma once

// JSON encodings of the wire-facing types.
//   OrientedSphere: {"bend": f, "cobend": f, "bend_center": [f, ...]}
//   Quadruple:      {"bends": [f,f,f,f], "centers": [[x,y], ...]?}
//   SphericalDesign:{"name": s, "dim": n, "strength": M,
//                    "failure_degree": n, "points": [[...], ...]}

#include "porism/descartes.hpp"
#include "porism/designs.hpp"
#include "porism/sphere.hpp"

#include <json.hpp>

namespace porism {

inline nlohmann::json to_json(const OrientedSphere& s) {
    return {{"bend", s.bend()},
            {"cobend", s.cobend()},
            {"bend_center", s.bend_center().data()}};
}

inline OrientedSphere sphere_from_json(const nlohmann::json& j) {
    Vec bc(j.at("bend_center").get<std::vector<double>>());
    OrientedSphere s(j.at("bend").get<double>(), j.at("cobend").get<double>(), bc);
    if (std::abs(s.lorentz_residual()) > 1e-6)
        throw std::domain_error("sphere JSON violates the Lorentz normalization");
    return s;
}

inline nlohmann::json to_json(const Quadruple& q) {
    nlohmann::json j;
    j["bends"] = q.bends;
    if (q.centers) {
        nlohmann::json cs = nlohmann::json::array();
        for (const Cx& z : *q.centers) cs.push_back({z.re, z.im});
        j["centers"] = cs;
    }
    return j;
}

inline Quadruple quadruple_from_json(const nlohmann::json& j) {
    Quadruple q;
    auto bends = j.at("bends").get<std::vector<double>>();
    if (bends.size() != 4) throw std::domain_error("quadruple needs four bends");
    std::copy(bends.begin(), bends.end(), q.bends.begin());
    if (j.contains("centers")) {
        std::array<Cx, 4> cs;
        const auto& jc = j.at("centers");
        if (jc.size() != 4) throw std::domain_error("quadruple needs four centers");
        for (int i = 0; i < 4; ++i)
            cs[i] = Cx{jc[i][0].get<double>(), jc[i][1].get<double>()};
        q.centers = cs;
    }
    return q;
}

inline nlohmann::json to_json(const SphericalDesign& d) {
    nlohmann::json pts = nlohmann::json::array();
    for (const Vec& p : d.points) pts.push_back(p.data());
    return {{"name", d.name},
            {"dim", d.dim},
            {"strength", d.strength},
            {"failure_degree", d.failure_degree},
            {"points", pts}};
}

}  // namespace porism
