#pragma once

// Steiner chains: the one-parameter family of length-k chains inscribed in
// the annulus between two nested circles, built through the concentric
// normal form, plus the conserved bend/center moments of such chains.
//
// The reduction to concentric parents inverts about a limiting point of
// the coaxial pencil spanned by the parents. In Lorentz coordinates the
// pencil members are v1 + t*v2 and the limiting points are the parameter
// values where the quadratic form vanishes:
//
//     Q(v1 + t v2) = 1 + 2t<v1,v2> + t^2 = 0,
//
// real exactly when |<v1,v2>| >= 1, i.e. when the circles are disjoint.

#include "porism/conformal.hpp"
#include "porism/linalg.hpp"
#include "porism/sphere.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace porism {

struct Annulus {
    OrientedSphere outer;  // encloses: negative bend, or a line
    OrientedSphere inner;  // positive bend
};

// Validated constructor: checks coorientations, disjointness and nesting.
inline Annulus make_annulus(const OrientedSphere& outer, const OrientedSphere& inner) {
    if (inner.is_line() || !(inner.bend() > 0.0))
        throw std::domain_error("annulus inner parent must be an inward circle");
    if (!outer.is_line() && !(outer.bend() < 0.0))
        throw std::domain_error("annulus outer parent must be outward or a line");
    double p = inversive_product(outer, inner);
    if (p >= -1.0)
        throw std::domain_error(
            "annulus parents must be disjoint with opposing coorientations "
            "(inversive product " + std::to_string(p) + " >= -1)");
    if (!outer.is_line()) {
        double gap = outer.radius() - (dist(outer.center(), inner.center()) + inner.radius());
        if (gap <= 0.0) throw std::domain_error("inner parent is not inside the outer disk");
    }
    return Annulus{outer, inner};
}

struct LimitingPoints {
    std::vector<Point> finite;  // 0, 1 or 2 points
    bool one_at_infinity = false;
};

inline LimitingPoints limiting_points(const OrientedSphere& s1,
                                      const OrientedSphere& s2) {
    double delta = inversive_product(s1, s2);
    if (delta * delta < 1.0)
        throw std::domain_error("limiting points need disjoint circles");
    double root = std::sqrt(std::max(0.0, delta * delta - 1.0));
    LimitingPoints out;
    for (double t : {-delta + root, -delta - root}) {
        double b = s1.bend() + t * s2.bend();
        double cob = s1.cobend() + t * s2.cobend();
        Vec bc = s1.bend_center() + t * s2.bend_center();
        double scale = std::abs(s1.bend()) + std::abs(t * s2.bend()) + std::abs(cob);
        if (std::abs(b) <= 1e-13 * scale)
            out.one_at_infinity = true;
        else
            out.finite.push_back(bc / b);
    }
    return out;
}

struct ConcentricReduction {
    ConformalMap map;  // sends both parents to circles centered at the origin
    double R_out = 0.0;
    double r_in = 0.0;
};

inline ConcentricReduction concentric_reduction(const Annulus& a,
                                                double tol = kDefaultTol) {
    // Already concentric: just recenter.
    if (!a.outer.is_line() &&
        dist(a.outer.center(), a.inner.center()) <=
            tol * std::max(1.0, a.outer.radius())) {
        ConformalMap m = ConformalMap::similarity(Similarity::translate(-a.outer.center()));
        return {m, a.outer.radius(), a.inner.radius()};
    }

    LimitingPoints lp = limiting_points(a.outer, a.inner);
    if (lp.finite.empty()) throw std::domain_error("no finite limiting point found");
    // Prefer the limiting point inside the inner disk so both images stay bounded.
    Point pivot = lp.finite.front();
    for (const Point& c : lp.finite)
        if (dist(c, a.inner.center()) < a.inner.radius()) pivot = c;

    ConformalMap inv = ConformalMap::unit_inversion(pivot);
    OrientedSphere o_img = inv.apply(a.outer);
    OrientedSphere i_img = inv.apply(a.inner);
    if (o_img.is_line() || i_img.is_line())
        throw std::domain_error("parent passes through the limiting point");
    Point center = 0.5 * (o_img.center() + i_img.center());
    double offset = dist(o_img.center(), i_img.center());
    double big = std::max(o_img.radius(), i_img.radius());
    if (offset > 1e-7 * big)
        throw std::logic_error("limiting-point inversion did not produce concentric circles");

    ConformalMap m = compose(ConformalMap::similarity(Similarity::translate(-center)), inv);
    return {m, big, std::min(o_img.radius(), i_img.radius())};
}

struct SteinerFamily {
    Annulus parents;
    int k = 0;
    int turns = 1;
    ConformalMap to_concentric;
    ConformalMap from_concentric;
    double R_out = 0.0;
    double r_in = 0.0;
    double chain_radius = 0.0;           // (R_out - r_in) / 2
    double chain_center_distance = 0.0;  // (R_out + r_in) / 2

    double period() const { return 2.0 * std::numbers::pi / k; }
};

// Closure condition for a length-k chain making `turns` turns:
//     (R_out - r_in) / (R_out + r_in) = sin(pi * turns / k).
inline double closure_ratio(int k, int turns) {
    return std::sin(std::numbers::pi * turns / k);
}

inline SteinerFamily family(const Annulus& a, int k, int turns,
                            double tol = kDefaultTol) {
    if (k < 3) throw std::invalid_argument("chain length k must be at least 3");
    if (turns < 1 || 2 * turns >= k)
        throw std::invalid_argument("turns must satisfy 1 <= turns < k/2");
    if (std::gcd(turns, k) != 1)
        throw std::invalid_argument("turns must be coprime to k");

    ConcentricReduction red = concentric_reduction(a, tol);
    double actual = (red.R_out - red.r_in) / (red.R_out + red.r_in);
    double target = closure_ratio(k, turns);
    if (std::abs(actual - target) > std::max(tol, 1e-12))
        throw std::domain_error(
            "porism does not close for this (k, turns): ratio " +
            std::to_string(actual) + " vs required " + std::to_string(target));

    SteinerFamily f;
    f.parents = a;
    f.k = k;
    f.turns = turns;
    f.to_concentric = red.map;
    f.from_concentric = red.map.inverse();
    f.R_out = red.R_out;
    f.r_in = red.r_in;
    f.chain_radius = (red.R_out - red.r_in) / 2.0;
    f.chain_center_distance = (red.R_out + red.r_in) / 2.0;
    return f;
}

// Annulus that closes exactly for (k, turns): outer is the given outward
// circle, the inner circle sits `inner_offset` of the outer radius off
// center (0 gives the concentric annulus). Offsets must leave room for the
// inner circle.
inline Annulus annulus_for(int k, int turns, const OrientedSphere& outer,
                           double inner_offset = 0.0) {
    if (outer.is_line() || !(outer.bend() < 0.0))
        throw std::domain_error("annulus_for needs an outward (enclosing) outer circle");
    double s = closure_ratio(k, turns);
    double q = (1.0 - s) / (1.0 + s);
    double delta = 0.5 * (q + 1.0 / q);  // inversive distance fixing the closure
    double d = std::abs(inner_offset);
    double disc = delta * delta - 1.0 + d * d;
    if (disc < 0.0) throw std::domain_error("inner_offset too large for this closure");
    double r = delta - std::sqrt(disc);
    if (!(r > 0.0) || d + r >= 1.0)
        throw std::domain_error("inner_offset leaves no room for the inner circle");

    double r_out = outer.radius();
    Point c_out = outer.center();
    Point c_in = c_out + Vec{r_out * inner_offset, 0.0};
    return make_annulus(outer,
                        OrientedSphere::from_center_radius(c_in, r_out * r, true));
}

struct Chain {
    std::vector<OrientedSphere> circles;
    double parameter = 0.0;
};

inline Chain chain_at(const SteinerFamily& f, double t) {
    double period = f.period();
    t -= period * std::floor(t / period);
    for (int attempt = 0; attempt < 8; ++attempt) {
        Chain chain;
        chain.parameter = t;
        chain.circles.reserve(f.k);
        bool hit_line = false;
        for (int j = 0; j < f.k; ++j) {
            double theta = t + 2.0 * std::numbers::pi * f.turns * j / f.k;
            Point c{f.chain_center_distance * std::cos(theta),
                    f.chain_center_distance * std::sin(theta)};
            OrientedSphere normal_form =
                OrientedSphere::from_center_radius(c, f.chain_radius, true);
            OrientedSphere img = f.from_concentric.apply(normal_form);
            if (img.is_line(1e-9)) {
                hit_line = true;
                break;
            }
            chain.circles.push_back(img);
        }
        if (!hit_line) return chain;
        t += 1e-6;  // nudge off the measure-zero line case
    }
    throw std::logic_error("could not avoid a line member in the chain");
}

inline double moments_I(const Chain& c, int m) {
    if (m < 1) throw std::invalid_argument("moment order must be >= 1");
    double sum = 0.0;
    for (const auto& s : c.circles) sum += std::pow(s.bend(), m);
    return sum;
}

inline Cx moments_J(const Chain& c, int m, int n) {
    if (n < 0 || n > m) throw std::invalid_argument("need 0 <= n <= m");
    Cx sum{0.0, 0.0};
    for (const auto& s : c.circles) {
        if (s.is_line()) throw std::domain_error("chain contains a line; moments undefined");
        Cx z = cx_from(s.center());
        double bm = std::pow(s.bend(), m);
        sum = sum + bm * cx_pow(z, n);
    }
    return sum;
}

// Monic coefficients of P(x) = prod (x - b_j), highest power first,
// recovered from the power sums via the Newton identities.
inline std::vector<double> chain_polynomial(const Chain& c) {
    int k = static_cast<int>(c.circles.size());
    std::vector<double> p(k + 1, 0.0);  // power sums, p[m] = I_m
    for (int m = 1; m <= k; ++m) p[m] = moments_I(c, m);
    std::vector<double> e(k + 1, 0.0);  // elementary symmetric functions
    e[0] = 1.0;
    for (int m = 1; m <= k; ++m) {
        double acc = 0.0;
        for (int i = 1; i <= m; ++i)
            acc += (i % 2 == 1 ? 1.0 : -1.0) * e[m - i] * p[i];
        e[m] = acc / m;
    }
    std::vector<double> coeffs(k + 1, 0.0);
    for (int m = 0; m <= k; ++m)
        coeffs[m] = (m % 2 == 0 ? 1.0 : -1.0) * e[m];
    return coeffs;
}

// --- certification ---------------------------------------------------------

struct FamilyCertification {
    int k = 0;
    int turns = 1;
    int samples = 0;
    double tol = kDefaultTol;
    std::vector<double> moment_values;       // I_m at t = 0, m = 1..k
    std::vector<double> moment_variation;    // relative spread of I_m over the grid
    std::vector<std::vector<double>> center_moment_variation;  // |J(m,n)| spread
    std::vector<double> polynomial_variation;  // per coefficient, descending powers
    double max_conserved_variation = 0.0;    // over I_1..I_{k-1} and J below diag
    double control_I_variation = 0.0;        // I_k (must vary for generic parents)
    double control_J_variation = 0.0;        // J_{k,k}

    bool conserved_ok() const { return max_conserved_variation <= tol; }
};

inline double rel_spread(double value, double reference) {
    return std::abs(value - reference) / std::max(1.0, std::abs(reference));
}

inline FamilyCertification certify_family(const SteinerFamily& f, int samples,
                                          double tol = kDefaultTol) {
    FamilyCertification cert;
    cert.k = f.k;
    cert.turns = f.turns;
    cert.samples = samples;
    cert.tol = tol;

    Chain base = chain_at(f, 0.0);
    for (int m = 1; m <= f.k; ++m) cert.moment_values.push_back(moments_I(base, m));
    cert.moment_variation.assign(f.k, 0.0);
    cert.center_moment_variation.assign(f.k + 1, {});
    for (int m = 0; m <= f.k; ++m)
        cert.center_moment_variation[m].assign(m + 1, 0.0);
    std::vector<double> base_poly = chain_polynomial(base);
    cert.polynomial_variation.assign(f.k + 1, 0.0);

    std::vector<std::vector<Cx>> base_J(f.k + 1);
    for (int m = 0; m <= f.k; ++m)
        for (int n = 0; n <= m; ++n) base_J[m].push_back(moments_J(base, m, n));

    for (int i = 1; i < samples; ++i) {
        double t = f.period() * i / samples;
        Chain c = chain_at(f, t);
        for (int m = 1; m <= f.k; ++m) {
            double v = rel_spread(moments_I(c, m), cert.moment_values[m - 1]);
            cert.moment_variation[m - 1] = std::max(cert.moment_variation[m - 1], v);
        }
        for (int m = 0; m <= f.k; ++m)
            for (int n = 0; n <= m; ++n) {
                Cx j = moments_J(c, m, n);
                double v = cx_abs(j - base_J[m][n]) /
                           std::max(1.0, cx_abs(base_J[m][n]));
                cert.center_moment_variation[m][n] =
                    std::max(cert.center_moment_variation[m][n], v);
            }
        std::vector<double> poly = chain_polynomial(c);
        for (int m = 0; m <= f.k; ++m)
            cert.polynomial_variation[m] = std::max(
                cert.polynomial_variation[m], rel_spread(poly[m], base_poly[m]));
    }

    for (int m = 1; m < f.k; ++m)
        cert.max_conserved_variation =
            std::max(cert.max_conserved_variation, cert.moment_variation[m - 1]);
    for (int m = 0; m < f.k; ++m)
        for (int n = 0; n <= m; ++n)
            cert.max_conserved_variation =
                std::max(cert.max_conserved_variation, cert.center_moment_variation[m][n]);
    cert.control_I_variation = cert.moment_variation[f.k - 1];
    cert.control_J_variation = cert.center_moment_variation[f.k][f.k];
    return cert;
}

}  // namespace porism
