#pragma once

// Spherical and hyperbolic analogs via stereographic projection.
//
// Caps on S^d are cut out by p.y = cos(alpha) with |p| = 1 and alpha in
// (0, pi); the curvature is cot(alpha). Projecting from the South Pole
// (-1, 0, ..., 0) onto the hyperplane y_0 = 0 turns the cap equation into
// the circle equation b|x|^2 - 2 bc.x + cobend = 0 with
//
//     (bend, cobend, bend_center) = ((p_0 + cos a)/sin a,
//                                    (cos a - p_0)/sin a,
//                                    p_perp / sin a),
//
// which lands exactly on the Lorentz-normalized sphere coordinates. Two
// consequences used throughout:
//
//     cot(alpha)  = (bend + cobend) / 2        (spherical curvature)
//     coth(alpha) = (bend - cobend) / 2        (hyperbolic curvature,
//                                               Poincare disk circles)
//
// The first is the classical curvature transfer formula
// cot a = (b^2 - 1)/(2b) + (b/2)|x|^2 in disguise; the second is the same
// computation run through the hyperboloid model.
//
// The four-cap curvature relations (Mauldon) are implemented in the form
// that the planar lift actually certifies:
//
//     sum cot^2(a_i)  = (1/2)(sum cot(a_i))^2  - 2    (spherical)
//     sum coth^2(a_i) = (1/2)(sum coth(a_i))^2 + 2    (hyperbolic)
//
// i.e. with squared curvatures on the left, matching the planar relation
// in the small-circle limit.

#include "porism/conformal.hpp"
#include "porism/linalg.hpp"
#include "porism/sphere.hpp"
#include "porism/steiner.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace porism {

struct SphericalCap {
    Vec pole;       // unit vector in R^(d+1), the cap's center/coorientation
    double alpha;   // radius in the spherical metric, in (0, pi)

    double curvature() const { return std::cos(alpha) / std::sin(alpha); }
};

inline SphericalCap make_cap(const Vec& pole, double alpha) {
    if (!(alpha > 0.0 && alpha < std::numbers::pi))
        throw std::domain_error("cap radius must lie in (0, pi)");
    return SphericalCap{normalized(pole), alpha};
}

// Stereographic image of a cap: an oriented circle/line in R^d. Caps
// through the South Pole come out as lines with no special casing.
inline OrientedSphere cap_to_plane(const SphericalCap& c) {
    double sa = std::sin(c.alpha);
    double ca = std::cos(c.alpha);
    double b = (c.pole[0] + ca) / sa;
    double cob = (ca - c.pole[0]) / sa;
    Vec bc(c.pole.size() - 1);
    for (std::size_t i = 1; i < c.pole.size(); ++i) bc[i - 1] = c.pole[i] / sa;
    return OrientedSphere(b, cob, bc);
}

inline SphericalCap plane_to_cap(const OrientedSphere& s) {
    double cot = (s.bend() + s.cobend()) / 2.0;
    double alpha = std::atan2(1.0, cot);  // in (0, pi)
    double sa = std::sin(alpha);
    Vec pole(s.dim() + 1);
    pole[0] = sa * (s.bend() - s.cobend()) / 2.0;
    for (std::size_t i = 0; i < s.dim(); ++i) pole[i + 1] = sa * s.bend_center()[i];
    return SphericalCap{pole, alpha};
}

// Spherical curvature of the stereographic preimage of a planar circle:
//     cot(alpha) = (b^2 - 1)/(2b) + (b/2)|x|^2.
inline double plane_curvature_to_spherical(const Point& center, double bend) {
    if (bend == 0.0)
        throw std::domain_error("line preimages pass through the South Pole");
    return (bend * bend - 1.0) / (2.0 * bend) + (bend / 2.0) * norm2(center);
}

// Same quantity straight from the Lorentz coordinates; also valid for lines.
inline double lifted_spherical_curvature(const OrientedSphere& s) {
    return (s.bend() + s.cobend()) / 2.0;
}

// Hyperbolic curvature coth(alpha) of a circle drawn in the Poincare unit
// disk (disk-model relation; > 1 exactly when the circle is inside the disk).
inline double hyperbolic_curvature(const OrientedSphere& s) {
    return (s.bend() - s.cobend()) / 2.0;
}

struct HyperbolicSphere {
    OrientedSphere euclidean;  // representative inside the unit disk
    double radius;             // hyperbolic radius alpha

    static HyperbolicSphere from_euclidean(const OrientedSphere& s) {
        double k = hyperbolic_curvature(s);
        if (!(k > 1.0))
            throw std::domain_error("circle is not strictly inside the unit disk");
        // alpha = acoth(k)
        return HyperbolicSphere{s, 0.5 * std::log((k + 1.0) / (k - 1.0))};
    }
};

inline double spherical_descartes_residual(const std::array<double, 4>& alphas) {
    double sum = 0.0, sum_sq = 0.0;
    for (double a : alphas) {
        double c = std::cos(a) / std::sin(a);
        sum += c;
        sum_sq += c * c;
    }
    return sum_sq - (0.5 * sum * sum - 2.0);
}

inline double hyperbolic_descartes_residual(const std::array<double, 4>& alphas) {
    double sum = 0.0, sum_sq = 0.0;
    for (double a : alphas) {
        double c = std::cosh(a) / std::sinh(a);
        sum += c;
        sum_sq += c * c;
    }
    return sum_sq - (0.5 * sum * sum + 2.0);
}

namespace detail {

// Point-caps of the pencil spanned by two disjoint caps: planes
// mu*(pA, cos aA) + nu*(pC, cos aC) tangent to the sphere. Returns the two
// tangency points (unit vectors).
inline std::array<Vec, 2> cap_pencil_points(const SphericalCap& a,
                                            const SphericalCap& c) {
    double ca = std::cos(a.alpha), cc = std::cos(c.alpha);
    double sa2 = 1.0 - ca * ca, sc2 = 1.0 - cc * cc;
    double g = dot(a.pole, c.pole) - ca * cc;
    double disc = g * g - sa2 * sc2;
    if (disc <= 0.0) throw std::domain_error("caps intersect; no limiting points");
    std::array<Vec, 2> out = {Vec(a.pole.size()), Vec(a.pole.size())};
    int idx = 0;
    for (double sign : {1.0, -1.0}) {
        // mu = 1, nu from the tangency quadratic
        double nu = (-g + sign * std::sqrt(disc)) / sc2;
        Vec q = a.pole + nu * c.pole;
        double e = ca + nu * cc;
        out[idx++] = q * (e / norm2(q));
    }
    return out;
}

}  // namespace detail

// Rotation of R^(d+1) after which the stereographic projections of both
// caps are concentric circles: one limiting point-cap of the pair goes to
// the South Pole, so the projected pencil is concentric about the image of
// the other.
inline Mat rotate_to_concentric(const SphericalCap& a, const SphericalCap& c) {
    std::size_t n = a.pole.size();
    Vec south(n);
    south[0] = -1.0;

    std::array<Vec, 2> pts = detail::cap_pencil_points(a, c);
    // deterministic pick: send the point farther from the South Pole south,
    // which keeps the projected circles small
    Vec chosen = pts[0];
    if (dot(pts[1], south) < dot(pts[0], south)) chosen = pts[1];
    Mat r = rotation_from_to(normalized(chosen), south);

    // post-check concentricity of the projections
    SphericalCap ra{r * a.pole, a.alpha};
    SphericalCap rc{r * c.pole, c.alpha};
    OrientedSphere ia = cap_to_plane(ra);
    OrientedSphere ic = cap_to_plane(rc);
    if (ia.is_line(1e-9) || ic.is_line(1e-9))
        throw std::logic_error("rotated cap passes through the South Pole");
    double off = dist(ia.center(), ic.center());
    double big = std::max(ia.radius(), ic.radius());
    if (off > 1e-9 * std::max(1.0, big))
        throw std::logic_error("projections are not concentric after rotation");
    return r;
}

struct SphericalChainReport {
    int k = 0;
    int turns = 1;
    int samples = 0;
    std::vector<double> moment_values;     // sum of cot^m at t=0, m = 1..k
    std::vector<double> moment_variation;  // relative spread over the grid
    double max_conserved_variation = 0.0;  // over m = 1..k-1
    double control_variation = 0.0;        // m = k
};

// Certify the conserved spherical curvature moments of a length-k chain
// family between two disjoint caps on S^2.
inline SphericalChainReport spherical_chain_moments(const SphericalCap& a,
                                                    const SphericalCap& c, int k,
                                                    int turns, int samples,
                                                    double tol = kDefaultTol) {
    Mat r = rotate_to_concentric(a, c);
    OrientedSphere ia = cap_to_plane(SphericalCap{r * a.pole, a.alpha});
    OrientedSphere ic = cap_to_plane(SphericalCap{r * c.pole, c.alpha});

    // order and coorient the projected parents as an annulus
    OrientedSphere outer = ia.radius() >= ic.radius() ? ia : ic;
    OrientedSphere inner = ia.radius() >= ic.radius() ? ic : ia;
    if (outer.bend() > 0.0) outer = outer.reversed();
    if (inner.bend() < 0.0) inner = inner.reversed();
    SteinerFamily fam = family(make_annulus(outer, inner), k, turns, tol);

    SphericalChainReport rep;
    rep.k = k;
    rep.turns = turns;
    rep.samples = samples;
    auto chain_moments = [&](double t) {
        Chain ch = chain_at(fam, t);
        std::vector<double> m(k, 0.0);
        for (const auto& s : ch.circles) {
            double cot = lifted_spherical_curvature(s);
            double pw = 1.0;
            for (int i = 0; i < k; ++i) {
                pw *= cot;
                m[i] += pw;
            }
        }
        return m;
    };

    rep.moment_values = chain_moments(0.0);
    rep.moment_variation.assign(k, 0.0);
    for (int i = 1; i < samples; ++i) {
        double t = fam.period() * i / samples;
        std::vector<double> m = chain_moments(t);
        for (int j = 0; j < k; ++j)
            rep.moment_variation[j] = std::max(
                rep.moment_variation[j], rel_spread(m[j], rep.moment_values[j]));
    }
    for (int j = 0; j + 1 < k; ++j)
        rep.max_conserved_variation =
            std::max(rep.max_conserved_variation, rep.moment_variation[j]);
    rep.control_variation = rep.moment_variation[k - 1];
    return rep;
}

// Average of cot^m over the stereographic lifts of a planar configuration
// (spheres in R^d -> caps on S^d).
inline double lifted_curvature_moment_average(
    const std::vector<OrientedSphere>& planar_spheres, int m) {
    if (planar_spheres.empty()) throw std::domain_error("empty configuration");
    double sum = 0.0;
    for (const auto& s : planar_spheres)
        sum += std::pow(lifted_spherical_curvature(s), m);
    return sum / static_cast<double>(planar_spheres.size());
}

}  // namespace porism
