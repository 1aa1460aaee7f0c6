#pragma once

// Spherical designs: point sets on S^d whose averages of low-degree
// polynomials match the uniform sphere average, a small catalog of exact
// constructions, strength certification against closed-form monomial
// averages, and the conformal moment equalities for sphere configurations
// built on designs.

#include "porism/conformal.hpp"
#include "porism/exact.hpp"
#include "porism/linalg.hpp"
#include "porism/sphere.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace porism {

struct SphericalDesign {
    int dim = 1;       // lives on S^dim inside R^(dim+1)
    int strength = 0;  // certified degree M
    std::vector<Vec> points;
    std::string name;
    // First degree at which the average equality is known to break. For
    // antipodally symmetric sets this is the even degree M+1; the
    // tetrahedron already fails at the odd degree 3.
    int failure_degree = 0;
};

// n evenly spaced points on the circle; strength n-1, first failure at n.
inline SphericalDesign roots_of_unity_design(int n) {
    if (n < 2) throw std::domain_error("need at least two points on the circle");
    SphericalDesign d;
    d.dim = 1;
    d.strength = n - 1;
    d.failure_degree = n;
    d.name = "roots-" + std::to_string(n);
    for (int j = 0; j < n; ++j) {
        double th = 2.0 * std::numbers::pi * j / n;
        d.points.push_back(Vec{std::cos(th), std::sin(th)});
    }
    return d;
}

enum class Polytope { tetrahedron, cube, octahedron, dodecahedron, icosahedron, cell24 };

inline SphericalDesign polytope_design(Polytope which) {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    SphericalDesign d;
    auto add = [&](std::initializer_list<double> v) { d.points.push_back(Vec(v)); };
    switch (which) {
        case Polytope::tetrahedron:
            d.dim = 2;
            d.strength = 2;
            d.failure_degree = 3;
            d.name = "tetrahedron";
            add({1, 1, 1});
            add({1, -1, -1});
            add({-1, 1, -1});
            add({-1, -1, 1});
            break;
        case Polytope::cube:
            d.dim = 2;
            d.strength = 3;
            d.failure_degree = 4;
            d.name = "cube";
            for (double x : {-1.0, 1.0})
                for (double y : {-1.0, 1.0})
                    for (double z : {-1.0, 1.0}) add({x, y, z});
            break;
        case Polytope::octahedron:
            d.dim = 2;
            d.strength = 3;
            d.failure_degree = 4;
            d.name = "octahedron";
            for (int axis = 0; axis < 3; ++axis)
                for (double s : {-1.0, 1.0}) {
                    Vec v(3);
                    v[axis] = s;
                    d.points.push_back(v);
                }
            break;
        case Polytope::icosahedron:
            d.dim = 2;
            d.strength = 5;
            d.failure_degree = 6;
            d.name = "icosahedron";
            for (double a : {-1.0, 1.0})
                for (double b : {-phi, phi}) {
                    add({0.0, a, b});
                    add({a, b, 0.0});
                    add({b, 0.0, a});
                }
            break;
        case Polytope::dodecahedron:
            d.dim = 2;
            d.strength = 5;
            d.failure_degree = 6;
            d.name = "dodecahedron";
            for (double x : {-1.0, 1.0})
                for (double y : {-1.0, 1.0})
                    for (double z : {-1.0, 1.0}) add({x, y, z});
            for (double a : {-1.0 / phi, 1.0 / phi})
                for (double b : {-phi, phi}) {
                    add({0.0, a, b});
                    add({a, b, 0.0});
                    add({b, 0.0, a});
                }
            break;
        case Polytope::cell24:
            d.dim = 3;
            d.strength = 5;
            d.failure_degree = 6;
            d.name = "cell24";
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    for (double si : {-1.0, 1.0})
                        for (double sj : {-1.0, 1.0}) {
                            Vec v(4);
                            v[i] = si;
                            v[j] = sj;
                            d.points.push_back(v);
                        }
            break;
    }
    for (Vec& p : d.points) p = normalized(p);
    return d;
}

inline SphericalDesign design_by_name(const std::string& name) {
    if (name == "tetrahedron") return polytope_design(Polytope::tetrahedron);
    if (name == "cube") return polytope_design(Polytope::cube);
    if (name == "octahedron") return polytope_design(Polytope::octahedron);
    if (name == "dodecahedron") return polytope_design(Polytope::dodecahedron);
    if (name == "icosahedron") return polytope_design(Polytope::icosahedron);
    if (name == "cell24") return polytope_design(Polytope::cell24);
    if (name.rfind("roots-", 0) == 0)
        return roots_of_unity_design(std::stoi(name.substr(6)));
    throw std::domain_error("unknown design name: " + name);
}

inline std::vector<std::string> design_catalog_names() {
    return {"tetrahedron", "cube",        "octahedron", "dodecahedron",
            "icosahedron", "cell24",      "roots-2",    "roots-4",
            "roots-6",     "roots-12"};
}

// Exact average of x^e over the unit sphere S^(n-1) in R^n, n taken from
// the exponent count: zero when any exponent is odd, otherwise
//   prod (e_i - 1)!!  /  prod_{j=1..s} (n + 2j - 2),    s = (sum e_i)/2.
inline Rational sphere_average_monomial(const std::vector<int>& exponents) {
    int n = static_cast<int>(exponents.size());
    if (n < 2) throw std::domain_error("need at least two coordinates");
    int total = 0;
    for (int e : exponents) {
        if (e < 0) throw std::domain_error("negative exponent");
        if (e % 2 == 1) return Rational(0);
        total += e;
    }
    BigInt num = 1;
    for (int e : exponents)
        for (int f = e - 1; f >= 2; f -= 2) num *= f;
    BigInt den = 1;
    for (int j = 1; j <= total / 2; ++j) den *= (n + 2 * j - 2);
    return Rational(num, den);
}

namespace detail {

// All exponent vectors over `vars` variables of total degree exactly `deg`.
inline void monomials_of_degree(int vars, int deg,
                                std::vector<std::vector<int>>& out) {
    std::vector<int> e(vars, 0);
    // odometer over compositions of deg into vars parts
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == vars - 1) {
            e[pos] = left;
            out.push_back(e);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            e[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, deg);
}

}  // namespace detail

struct StrengthReport {
    bool ok = false;
    int degree_checked = 0;
    double max_abs_deviation = 0.0;
    std::vector<double> per_degree_max;  // index = degree, 0..M
};

// Check the defining property degree by degree: for every monomial of
// total degree <= M the point average must match the sphere average.
inline StrengthReport design_strength_check(const std::vector<Vec>& points, int M,
                                            double tol = kDefaultTol) {
    if (points.empty()) throw std::domain_error("empty point set");
    std::size_t n_vars = points.front().size();
    for (const Vec& p : points)
        if (std::abs(norm(p) - 1.0) > 1e-9)
            throw std::domain_error("design point is not on the unit sphere");

    StrengthReport rep;
    rep.degree_checked = M;
    rep.per_degree_max.assign(M + 1, 0.0);
    for (int deg = 0; deg <= M; ++deg) {
        std::vector<std::vector<int>> monos;
        detail::monomials_of_degree(static_cast<int>(n_vars), deg, monos);
        for (const auto& e : monos) {
            double avg = 0.0;
            for (const Vec& p : points) {
                double term = 1.0;
                for (std::size_t i = 0; i < n_vars; ++i)
                    for (int rep_i = 0; rep_i < e[i]; ++rep_i) term *= p[i];
                avg += term;
            }
            avg /= static_cast<double>(points.size());
            double want = to_double(sphere_average_monomial(e));
            rep.per_degree_max[deg] =
                std::max(rep.per_degree_max[deg], std::abs(avg - want));
        }
        rep.max_abs_deviation = std::max(rep.max_abs_deviation, rep.per_degree_max[deg]);
    }
    rep.ok = rep.max_abs_deviation <= tol;
    return rep;
}

// Congruent spheres of one bend centered at center + scale * v_i.
struct SphereConfiguration {
    std::vector<OrientedSphere> spheres;
    SphericalDesign source;
    double common_bend = 1.0;
    Point center;
    double scale = 1.0;
};

inline SphereConfiguration configuration_from_design(const SphericalDesign& design,
                                                     double bend, const Point& center,
                                                     double scale) {
    if (!(bend > 0.0)) throw std::domain_error("configuration bend must be positive");
    if (!(scale > 0.0)) throw std::domain_error("configuration scale must be positive");
    SphereConfiguration cfg;
    cfg.source = design;
    cfg.common_bend = bend;
    cfg.center = center;
    cfg.scale = scale;
    for (const Vec& v : design.points)
        cfg.spheres.push_back(
            OrientedSphere::from_center_radius(center + scale * v, 1.0 / bend, true));
    return cfg;
}

// Sparse polynomial over R^(d+1) as exponent-vector -> coefficient.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial monomial(std::vector<int> exponents, double coeff = 1.0) {
        Polynomial p;
        p.terms_[std::move(exponents)] = coeff;
        return p;
    }

    Polynomial& add_term(std::vector<int> exponents, double coeff) {
        terms_[std::move(exponents)] += coeff;
        return *this;
    }

    int degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            if (c == 0.0) continue;
            int t = 0;
            for (int x : e) t += x;
            d = std::max(d, t);
        }
        return d;
    }

    double eval(const Vec& x) const {
        double out = 0.0;
        for (const auto& [e, c] : terms_) {
            double term = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (int r = 0; r < e[i]; ++r) term *= x[i];
            out += term;
        }
        return out;
    }

    const std::map<std::vector<int>, double>& terms() const { return terms_; }

private:
    std::map<std::vector<int>, double> terms_;
};

// Average of F(bend * center) over the images of a configuration under a
// conformal map. The equality guarantee across same-strength designs only
// applies for deg F <= strength; higher degrees are allowed so callers can
// demonstrate the breakdown.
inline double conformal_moment_average(const SphereConfiguration& cfg,
                                       const ConformalMap& map, const Polynomial& F) {
    double sum = 0.0;
    for (std::size_t i = 0; i < cfg.spheres.size(); ++i) {
        OrientedSphere img = map.apply(cfg.spheres[i]);
        if (img.is_line())
            throw std::domain_error("image sphere " + std::to_string(i) +
                                    " is a line; bend-center average undefined");
        sum += F.eval(img.bend_center());
    }
    return sum / static_cast<double>(cfg.spheres.size());
}

// Average of bend^m over the images; bends come straight from the sphere
// transform rather than any polynomial expansion.
inline double curvature_moment_average(const SphereConfiguration& cfg,
                                       const ConformalMap& map, int m) {
    if (m < 0) throw std::invalid_argument("moment order must be >= 0");
    double sum = 0.0;
    for (std::size_t i = 0; i < cfg.spheres.size(); ++i) {
        OrientedSphere img = map.apply(cfg.spheres[i]);
        if (img.is_line())
            throw std::domain_error("image sphere " + std::to_string(i) +
                                    " is a line; curvature moment undefined");
        sum += std::pow(img.bend(), m);
    }
    return sum / static_cast<double>(cfg.spheres.size());
}

}  // namespace porism
