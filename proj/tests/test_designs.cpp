#include "porism/designs.hpp"
#include "porism/rng.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <numbers>

using namespace porism;

namespace {

// Quadrature oracle for monomial averages over S^2: Gauss-Legendre in
// cos(theta) x uniform in phi, exact for polynomial integrands once the
// node count exceeds the degree.
double sphere2_average_quadrature(int ex, int ey, int ez) {
    int n_theta = 24, n_phi = 64;
    // Gauss-Legendre nodes on [-1, 1] by Newton iteration on P_n
    std::vector<double> nodes(n_theta), weights(n_theta);
    for (int i = 0; i < n_theta; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n_theta + 0.5));
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n_theta; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n_theta * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= n_theta; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = n_theta * (x * p1 - p0) / (x * x - 1.0);
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    double total = 0.0;
    for (int i = 0; i < n_theta; ++i) {
        double u = nodes[i];  // cos(theta)
        double s = std::sqrt(1.0 - u * u);
        double ring = 0.0;
        for (int j = 0; j < n_phi; ++j) {
            double phi = 2.0 * std::numbers::pi * j / n_phi;
            double x = s * std::cos(phi), y = s * std::sin(phi), z = u;
            double term = 1.0;
            for (int k = 0; k < ex; ++k) term *= x;
            for (int k = 0; k < ey; ++k) term *= y;
            for (int k = 0; k < ez; ++k) term *= z;
            ring += term;
        }
        total += weights[i] * ring / n_phi;
    }
    return total / 2.0;  // weights sum to 2 = the measure of cos(theta)
}

}  // namespace

TEST_CASE("monomial sphere averages match the quadrature oracle", "[designs]") {
    CHECK(to_double(sphere_average_monomial({2, 0, 0})) == Catch::Approx(1.0 / 3.0));
    CHECK(to_double(sphere_average_monomial({1, 0, 0})) == 0.0);
    CHECK(to_double(sphere_average_monomial({2, 2, 0})) == Catch::Approx(1.0 / 15.0));
    CHECK(to_double(sphere_average_monomial({1, 0})) == 0.0);
    CHECK(to_double(sphere_average_monomial({2, 0})) == Catch::Approx(0.5));
    CHECK(to_double(sphere_average_monomial({4, 0})) == Catch::Approx(3.0 / 8.0));

    for (int ex = 0; ex <= 6; ++ex)
        for (int ey = 0; ey + ex <= 6; ++ey)
            for (int ez = 0; ez + ey + ex <= 6; ++ez) {
                INFO("monomial (" << ex << "," << ey << "," << ez << ")");
                CHECK(to_double(sphere_average_monomial({ex, ey, ez})) ==
                      Catch::Approx(sphere2_average_quadrature(ex, ey, ez))
                          .margin(1e-12));
            }
}

TEST_CASE("roots of unity designs", "[designs]") {
    SphericalDesign d4 = roots_of_unity_design(4);
    CHECK(d4.points.size() == 4);
    CHECK(d4.strength == 3);
    CHECK(norm(d4.points[1] - Vec{0.0, 1.0}) < 1e-12);
    CHECK(design_strength_check(d4.points, 3).ok);
    CHECK_FALSE(design_strength_check(d4.points, 4).ok);

    SphericalDesign d2 = roots_of_unity_design(2);
    CHECK(design_strength_check(d2.points, 1).ok);
    CHECK_FALSE(design_strength_check(d2.points, 2).ok);

    SphericalDesign d12 = roots_of_unity_design(12);
    CHECK(design_strength_check(d12.points, 11).ok);
    CHECK_FALSE(design_strength_check(d12.points, 12).ok);

    CHECK_THROWS_AS(roots_of_unity_design(1), std::domain_error);
}

TEST_CASE("catalog designs certify at the documented strength", "[designs]") {
    for (const std::string& name : design_catalog_names()) {
        SphericalDesign d = design_by_name(name);
        INFO("design " << name);
        CHECK(static_cast<int>(d.points.size()) ==
              (d.dim == 1 ? d.strength + 1
                          : (name == "tetrahedron"   ? 4
                             : name == "cube"        ? 8
                             : name == "octahedron"  ? 6
                             : name == "dodecahedron" ? 20
                             : name == "icosahedron" ? 12
                                                      : 24)));
        StrengthReport pass = design_strength_check(d.points, d.strength);
        CHECK(pass.ok);
        CHECK(pass.max_abs_deviation < 1e-9);
        StrengthReport fail = design_strength_check(d.points, d.failure_degree);
        CHECK_FALSE(fail.ok);
        CHECK(fail.per_degree_max[d.failure_degree] > 1e-6);
        // every degree between strength and failure passes (antipodal sets
        // get the odd degrees for free)
        for (int deg = d.strength + 1; deg < d.failure_degree; ++deg)
            CHECK(fail.per_degree_max[deg] < 1e-9);
    }
}

TEST_CASE("rotating a design does not change the verdict", "[designs]") {
    Rng rng(71);
    SphericalDesign icosa = polytope_design(Polytope::icosahedron);
    Mat q = rng.orthogonal(3);
    std::vector<Vec> rotated;
    for (const Vec& p : icosa.points) rotated.push_back(q * p);
    CHECK(design_strength_check(rotated, 5).ok);
    CHECK_FALSE(design_strength_check(rotated, 6).ok);
}

TEST_CASE("single point fails immediately; non-unit points rejected", "[designs]") {
    CHECK_FALSE(design_strength_check({Vec{1.0, 0.0}}, 1).ok);
    CHECK_THROWS_AS(design_strength_check({Vec{0.5, 0.0}}, 1), std::domain_error);
}

TEST_CASE("configuration from design and the touching bend", "[designs]") {
    SphericalDesign d6 = roots_of_unity_design(6);
    double r = 1.7;
    // adjacent centers sit 2 r sin(pi/6) apart; equality of that gap with
    // twice the circle radius is the touching condition
    double touch_bend = 1.0 / (r * std::sin(std::numbers::pi / 6.0));
    SphereConfiguration cfg =
        configuration_from_design(d6, touch_bend, Vec{0.3, -0.1}, r);
    for (int j = 0; j < 6; ++j)
        CHECK(tangent(cfg.spheres[j], cfg.spheres[(j + 1) % 6], 1e-9));
    // slightly stiffer bend leaves gaps
    SphereConfiguration gaps =
        configuration_from_design(d6, touch_bend * 1.05, Vec{0.3, -0.1}, r);
    for (int j = 0; j < 6; ++j)
        CHECK_FALSE(tangent(gaps.spheres[j], gaps.spheres[(j + 1) % 6], 1e-6));

    CHECK_THROWS_AS(configuration_from_design(d6, -1.0, Vec{0.0, 0.0}, 1.0),
                    std::domain_error);
    CHECK_THROWS_AS(configuration_from_design(d6, 1.0, Vec{0.0, 0.0}, 0.0),
                    std::domain_error);

    // recentering the sphere centers recovers a unit design
    std::vector<Vec> recovered;
    for (const auto& s : cfg.spheres)
        recovered.push_back((s.center() - cfg.center) / cfg.scale);
    CHECK(design_strength_check(recovered, 5).ok);
}

TEST_CASE("affine dependence of the inversion kernel on the design point",
          "[designs]") {
    // |x - C|^2 - 1/b^2 - 1 restricted to x = A + r v is affine in v; an
    // exact affine fit over the design points must have tiny residual.
    Rng rng(73);
    SphericalDesign icosa = polytope_design(Polytope::icosahedron);
    Vec a{0.4, -0.2, 0.9};
    double r = 1.4, b = 2.2;
    Vec c = rng.point_in_ball(3, 2.0);
    std::vector<double> f;
    for (const Vec& v : icosa.points) {
        Vec x = a + r * v;
        f.push_back(norm2(x - c) - 1.0 / (b * b) - 1.0);
    }
    // solve least squares for alpha + beta.v via normal equations
    std::size_t n = icosa.points.size();
    Mat ata(4);
    Vec atb(4);
    for (std::size_t i = 0; i < n; ++i) {
        Vec row{1.0, icosa.points[i][0], icosa.points[i][1], icosa.points[i][2]};
        for (int p = 0; p < 4; ++p) {
            atb[p] += row[p] * f[i];
            for (int q = 0; q < 4; ++q) ata(p, q) += row[p] * row[q];
        }
    }
    // tiny Gaussian solve
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int rr = col + 1; rr < 4; ++rr)
            if (std::abs(ata(rr, col)) > std::abs(ata(piv, col))) piv = rr;
        for (int cc = 0; cc < 4; ++cc) std::swap(ata(piv, cc), ata(col, cc));
        std::swap(atb[piv], atb[col]);
        for (int rr = 0; rr < 4; ++rr) {
            if (rr == col) continue;
            double fmul = ata(rr, col) / ata(col, col);
            for (int cc = 0; cc < 4; ++cc) ata(rr, cc) -= fmul * ata(col, cc);
            atb[rr] -= fmul * atb[col];
        }
    }
    Vec beta(4);
    for (int p = 0; p < 4; ++p) beta[p] = atb[p] / ata(p, p);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double fit = beta[0] + beta[1] * icosa.points[i][0] +
                     beta[2] * icosa.points[i][1] + beta[3] * icosa.points[i][2];
        worst = std::max(worst, std::abs(fit - f[i]));
    }
    CHECK(worst < 1e-10);
}

namespace {

// random inversion keeping every configuration sphere away from its center
ConformalMap safe_inversion(Rng& rng, const std::vector<SphereConfiguration*>& cfgs) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Vec c = rng.point_in_ball(cfgs.front()->spheres.front().dim(), 3.0);
        bool ok = norm(c) > 1.2;
        for (auto* cfg : cfgs)
            for (const auto& s : cfg->spheres)
                if (std::abs(dist(s.center(), c) - s.radius()) < 0.08) ok = false;
        if (ok) return ConformalMap::unit_inversion(c);
    }
    throw std::logic_error("no safe inversion center found");
}

}  // namespace

TEST_CASE("bend-center averages agree across same-strength designs", "[designs]") {
    Rng rng(79);
    SphericalDesign icosa = polytope_design(Polytope::icosahedron);
    SphericalDesign dodeca = polytope_design(Polytope::dodecahedron);
    Mat q = rng.orthogonal(3);
    SphericalDesign icosa_rot = icosa;
    for (Vec& p : icosa_rot.points) p = q * p;

    double bend = 2.0;
    Vec center{0.2, 0.1, -0.3};
    SphereConfiguration cfg_i = configuration_from_design(icosa, bend, center, 1.0);
    SphereConfiguration cfg_r = configuration_from_design(icosa_rot, bend, center, 1.0);
    SphereConfiguration cfg_d = configuration_from_design(dodeca, bend, center, 1.0);

    for (int rep = 0; rep < 6; ++rep) {
        ConformalMap map = safe_inversion(rng, {&cfg_i, &cfg_r, &cfg_d});
        std::vector<std::vector<int>> monos;
        for (int deg = 0; deg <= 5; ++deg) detail::monomials_of_degree(3, deg, monos);
        for (const auto& e : monos) {
            Polynomial f = Polynomial::monomial(e);
            double vi = conformal_moment_average(cfg_i, map, f);
            double vr = conformal_moment_average(cfg_r, map, f);
            double vd = conformal_moment_average(cfg_d, map, f);
            INFO("monomial e=(" << e[0] << "," << e[1] << "," << e[2] << ")");
            CHECK(nearly_equal(vi, vr, 1e-9));
            CHECK(nearly_equal(vi, vd, 1e-9));
        }
        // identity map, odd monomial, symmetric design about its center at
        // the origin: average vanishes
        SphereConfiguration centered =
            configuration_from_design(icosa, bend, Vec{0.0, 0.0, 0.0}, 1.0);
        Polynomial first = Polynomial::monomial({1, 0, 0});
        CHECK(std::abs(conformal_moment_average(centered, ConformalMap::identity(3),
                                                first)) < 1e-12);

        // degree 6 breaks the equality between different designs
        Polynomial overflow = Polynomial::monomial({6, 0, 0});
        double oi = conformal_moment_average(cfg_i, map, overflow);
        double od = conformal_moment_average(cfg_d, map, overflow);
        CHECK(std::abs(oi - od) > 1e-6);
    }
}

TEST_CASE("curvature moment averages across designs", "[designs]") {
    Rng rng(83);
    SphericalDesign icosa = polytope_design(Polytope::icosahedron);
    SphericalDesign dodeca = polytope_design(Polytope::dodecahedron);
    double bend = 1.6;
    Vec center{0.1, -0.2, 0.25};
    SphereConfiguration cfg_i = configuration_from_design(icosa, bend, center, 1.0);
    SphereConfiguration cfg_d = configuration_from_design(dodeca, bend, center, 1.0);
    for (int rep = 0; rep < 10; ++rep) {
        ConformalMap map = safe_inversion(rng, {&cfg_i, &cfg_d});
        CHECK(curvature_moment_average(cfg_i, map, 0) == Catch::Approx(1.0));
        for (int m = 1; m <= 5; ++m) {
            INFO("m=" << m);
            CHECK(nearly_equal(curvature_moment_average(cfg_i, map, m),
                               curvature_moment_average(cfg_d, map, m), 1e-9));
        }
        CHECK(std::abs(curvature_moment_average(cfg_i, map, 6) -
                       curvature_moment_average(cfg_d, map, 6)) > 1e-6);
    }
}

TEST_CASE("curvature moments equal the leading coefficient of translated "
          "bend-center averages",
          "[designs]") {
    // Evaluate g(t) = average of (first bend-center coordinate + bend*t)^m
    // over the mapped configuration; g is a degree-m polynomial in t whose
    // leading coefficient is the m-th curvature moment.
    Rng rng(89);
    SphericalDesign icosa = polytope_design(Polytope::icosahedron);
    SphereConfiguration cfg =
        configuration_from_design(icosa, 1.8, Vec{0.15, 0.0, -0.2}, 1.0);
    ConformalMap map = safe_inversion(rng, {&cfg});
    for (int m = 1; m <= 4; ++m) {
        int pts = m + 1;
        std::vector<double> ts, gs;
        for (int i = 0; i < pts; ++i) {
            double t = 0.5 + i;
            // average of F(bc + b t e1) where F = x1^m
            double sum = 0.0;
            for (const auto& s : cfg.spheres) {
                OrientedSphere img = map.apply(s);
                sum += std::pow(img.bend_center()[0] + img.bend() * t,
                                static_cast<double>(m));
            }
            ts.push_back(t);
            gs.push_back(sum / cfg.spheres.size());
        }
        // leading coefficient via divided differences
        std::vector<double> dd = gs;
        for (int level = 1; level < pts; ++level)
            for (int i = pts - 1; i >= level; --i)
                dd[i] = (dd[i] - dd[i - 1]) / (ts[i] - ts[i - level]);
        double lead = dd[pts - 1];
        CHECK(nearly_equal(lead, curvature_moment_average(cfg, map, m), 1e-7));
    }
}

TEST_CASE("design JSON and lookup errors", "[designs]") {
    CHECK_THROWS_AS(design_by_name("hypercube"), std::domain_error);
    CHECK(design_by_name("roots-8").points.size() == 8);
}
