#pragma once

// Descartes quadruple algebra: the four-bend relation
//
//     (a + b1 + b2 + b3)^2 = 2 (a^2 + b1^2 + b2^2 + b3^2),
//
// its Soddy root pair, the centered (complex) variant, and explicit
// construction of tangent configurations in the plane.

#include "porism/linalg.hpp"
#include "porism/sphere.hpp"

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>

namespace porism {

// Bends ordered (a, b1, b2, b3); centers, when present, pair up with the
// bends as planar points (w, z1, z2, z3).
struct Quadruple {
    std::array<double, 4> bends{};
    std::optional<std::array<Cx, 4>> centers;
};

inline double descartes_residual(double a, double b1, double b2, double b3) {
    double s = a + b1 + b2 + b3;
    return s * s - 2.0 * (a * a + b1 * b1 + b2 * b2 + b3 * b3);
}

inline double descartes_residual(const Quadruple& q) {
    return descartes_residual(q.bends[0], q.bends[1], q.bends[2], q.bends[3]);
}

// The two bends tangent to three mutually tangent circles:
//   a = (b1+b2+b3) +- 2*sqrt(b1 b2 + b2 b3 + b3 b1).
// Returned in descending order.
inline std::pair<double, double> soddy_solutions(double b1, double b2, double b3) {
    double d = b1 * b2 + b2 * b3 + b3 * b1;
    if (d < 0.0) throw std::domain_error("no real tangent fourth circle (negative discriminant)");
    double s = b1 + b2 + b3;
    double r = 2.0 * std::sqrt(d);
    return {s + r, s - r};
}

// Swap a quadruple member for the other Soddy root: a2 = 2(b1+b2+b3) - a1.
inline double soddy_replace(double a1, double b1, double b2, double b3,
                            double tol = kDefaultTol) {
    double res = descartes_residual(a1, b1, b2, b3);
    double scale = 1.0 + 2.0 * (a1 * a1 + b1 * b1 + b2 * b2 + b3 * b3);
    if (std::abs(res) > tol * scale)
        throw std::invalid_argument("soddy_replace input is not a Descartes quadruple");
    return 2.0 * (b1 + b2 + b3) - a1;
}

// Residual of the centered relation
//   (sum b_i z_i)^2 - 2 sum (b_i z_i)^2
// over all four members, with centers read as complex numbers.
inline Cx complex_residual(const Quadruple& q) {
    if (!q.centers) throw std::domain_error("complex residual needs circle centers");
    Cx sum{0.0, 0.0};
    Cx sum_sq{0.0, 0.0};
    for (int i = 0; i < 4; ++i) {
        Cx bz = q.bends[i] * (*q.centers)[i];
        sum = sum + bz;
        sum_sq = sum_sq + bz * bz;
    }
    return sum * sum - 2.0 * sum_sq;
}

// Conserved combination over the three "middle" circles: sum b_i^2 z_i.
inline Cx extra_conserved(const Quadruple& q) {
    if (!q.centers) throw std::domain_error("extra_conserved needs circle centers");
    Cx out{0.0, 0.0};
    for (int i = 1; i < 4; ++i)
        out = out + (q.bends[i] * q.bends[i]) * (*q.centers)[i];
    return out;
}

namespace detail {

// Center of a fourth circle with bend a tangent to the three placed circles.
// The centered relation makes w*a a root of W^2 - 2BW + (2K - B^2) with
// B = sum b_i z_i, K = sum (b_i z_i)^2; the geometric root is selected by
// the tangency distances.
inline Cx fourth_center(const std::array<Cx, 3>& z, const std::array<double, 3>& b,
                        double a) {
    Cx big_b{0.0, 0.0}, big_k{0.0, 0.0};
    for (int i = 0; i < 3; ++i) {
        Cx bz = b[i] * z[i];
        big_b = big_b + bz;
        big_k = big_k + bz * bz;
    }
    if (std::abs(a) < 1e-14)
        throw std::domain_error("fourth circle is a line; no center exists");
    Cx disc = cx_sqrt(2.0 * (big_b * big_b - big_k));
    Cx w_plus = (big_b + disc) * Cx{1.0 / a, 0.0};
    Cx w_minus = (big_b - disc) * Cx{1.0 / a, 0.0};

    auto fit = [&](Cx w) {
        double err = 0.0;
        double r4 = 1.0 / std::abs(a);
        for (int i = 0; i < 3; ++i) {
            double want = (a > 0.0) ? r4 + 1.0 / b[i] : std::abs(r4 - 1.0 / b[i]);
            double got = cx_abs(w - z[i]);
            err += std::abs(got - want);
        }
        return err;
    };
    return fit(w_plus) <= fit(w_minus) ? w_plus : w_minus;
}

}  // namespace detail

// Realize three mutually tangent circles with the given positive bends
// (circle 1 at the origin, circle 2 on the positive x-axis, circle 3 in the
// upper half-plane), close them with the smaller Soddy root -- the circle
// that encloses the triple whenever that root is negative -- and return the
// full quadruple (a, b1, b2, b3) with centers.
inline Quadruple construct_quadruple(double b1, double b2, double b3) {
    if (!(b1 > 0.0 && b2 > 0.0 && b3 > 0.0))
        throw std::domain_error("construct_quadruple needs three positive bends");
    double r1 = 1.0 / b1, r2 = 1.0 / b2, r3 = 1.0 / b3;
    double d12 = r1 + r2, d13 = r1 + r3, d23 = r2 + r3;
    Cx z1{0.0, 0.0};
    Cx z2{d12, 0.0};
    double x3 = (d13 * d13 - d23 * d23 + d12 * d12) / (2.0 * d12);
    double y3sq = d13 * d13 - x3 * x3;
    if (y3sq <= 0.0) throw std::domain_error("radii do not admit a tangent triple");
    Cx z3{x3, std::sqrt(y3sq)};

    auto [a1, a2] = soddy_solutions(b1, b2, b3);
    Cx w = detail::fourth_center({z1, z2, z3}, {b1, b2, b3}, a2);
    Quadruple q;
    q.bends = {a2, b1, b2, b3};
    q.centers = {{w, z1, z2, z3}};
    return q;
}

// The four circles of a quadruple as cooriented spheres (middle circles
// inward; the closing circle outward when its bend is negative).
inline std::array<OrientedSphere, 4> quadruple_spheres(const Quadruple& q) {
    if (!q.centers) throw std::domain_error("quadruple has no centers");
    std::array<OrientedSphere, 4> out = {
        OrientedSphere(0, 0, Vec{1.0, 0.0}), OrientedSphere(0, 0, Vec{1.0, 0.0}),
        OrientedSphere(0, 0, Vec{1.0, 0.0}), OrientedSphere(0, 0, Vec{1.0, 0.0})};
    for (int i = 0; i < 4; ++i) {
        double b = q.bends[i];
        if (std::abs(b) < 1e-14)
            throw std::domain_error("quadruple member is a line; build it directly");
        out[i] = OrientedSphere::from_center_radius(vec_from((*q.centers)[i]),
                                                    1.0 / std::abs(b), b > 0.0);
    }
    return out;
}

}  // namespace porism
