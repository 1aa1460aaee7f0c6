#pragma once

// Cooriented circles/spheres in R^d in inversive (Lorentz) coordinates.
//
// A cooriented sphere is stored as the triple
//
//     (bend, cobend, bend_center)
//
// where bend = +-1/radius (positive when the orientation normal points
// inward), cobend is the bend of the image under inversion in the unit
// sphere at the origin, and bend_center = bend * center. The triple always
// satisfies the normalization
//
//     |bend_center|^2 - bend * cobend = 1.
//
// Straight lines / hyperplanes are the bend = 0 case: bend_center is the
// unit normal pointing toward the cooriented side and cobend = 2h, where
// the line is { x : n.x = h }. With this encoding every conformal map acts
// on spheres by a Lorentz-orthogonal linear map, so inversion needs no
// case split between circles and lines.
//
// The point set is recovered from { x : bend*|x|^2 - 2 bend_center.x + cobend = 0 }.

#include "porism/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace porism {

inline constexpr double kDefaultTol = 1e-9;

class OrientedSphere {
public:
    // default: inward unit circle at the planar origin
    OrientedSphere() : bend_(1.0), cobend_(-1.0), bc_(Vec(2)) {}

    OrientedSphere(double bend, double cobend, Vec bend_center)
        : bend_(bend), cobend_(cobend), bc_(std::move(bend_center)) {}

    static OrientedSphere from_center_radius(const Point& center, double radius,
                                             bool inward = true) {
        if (!(radius > 0.0)) throw std::domain_error("sphere radius must be positive");
        double b = (inward ? 1.0 : -1.0) / radius;
        Vec bc = b * center;
        double cobend = b * norm2(center) - 1.0 / b;
        return OrientedSphere(b, cobend, bc);
    }

    // Line { x : n.x = offset }, cooriented toward the side n points at.
    static OrientedSphere line(const Vec& unit_normal, double offset) {
        return OrientedSphere(0.0, 2.0 * offset, normalized(unit_normal));
    }

    std::size_t dim() const { return bc_.size(); }
    double bend() const { return bend_; }
    double cobend() const { return cobend_; }
    const Vec& bend_center() const { return bc_; }

    bool is_line(double tol = 1e-12) const { return std::abs(bend_) <= tol; }

    Point center() const {
        if (is_line()) throw std::domain_error("line has no center");
        return bc_ / bend_;
    }
    double radius() const {
        if (is_line()) throw std::domain_error("line has no radius");
        return 1.0 / std::abs(bend_);
    }

    // For lines: unit normal and signed offset.
    Vec line_normal() const { return bc_; }
    double line_offset() const { return cobend_ / 2.0; }

    // |bend_center|^2 - bend*cobend - 1; zero for a valid sphere.
    double lorentz_residual() const { return norm2(bc_) - bend_ * cobend_ - 1.0; }

    OrientedSphere reversed() const { return OrientedSphere(-bend_, -cobend_, -bc_); }

    // Rescale the coordinate triple onto the Lorentz unit shell. Useful to
    // stop drift from accumulating across long transform chains.
    OrientedSphere renormalized() const {
        double q = norm2(bc_) - bend_ * cobend_;
        if (!(q > 0.0)) throw std::domain_error("degenerate sphere coordinates");
        double s = 1.0 / std::sqrt(q);
        return OrientedSphere(s * bend_, s * cobend_, s * bc_);
    }

private:
    double bend_;
    double cobend_;
    Vec bc_;
};

// Lorentz inner product of two spheres:
//   <s1,s2> = bc1.bc2 - (b1*cobend2 + cobend1*b2)/2.
// Diagonal value is 1; the value is -1 exactly when the spheres are tangent
// with opposite coorientations (parallel lines count as tangent at infinity).
inline double inversive_product(const OrientedSphere& a, const OrientedSphere& b) {
    return dot(a.bend_center(), b.bend_center()) -
           (a.bend() * b.cobend() + a.cobend() * b.bend()) / 2.0;
}

inline bool same_sphere(const OrientedSphere& a, const OrientedSphere& b, double tol) {
    return nearly_equal(a.bend(), b.bend(), tol) &&
           nearly_equal(a.cobend(), b.cobend(), tol) &&
           norm(a.bend_center() - b.bend_center()) <=
               tol * std::max(1.0, norm(a.bend_center()));
}

// Tangency with opposite coorientations. A sphere paired with its own
// reversal also has product -1 but is coincident, not tangent, so that
// case is excluded.
inline bool tangent(const OrientedSphere& s1, const OrientedSphere& s2,
                    double tol = kDefaultTol) {
    double p = inversive_product(s1, s2);
    if (std::abs(p + 1.0) > tol * std::max(1.0, std::abs(p))) return false;
    return !same_sphere(s1, s2.reversed(), 1e-7);
}

// Inversion in the unit sphere centered at c. In Lorentz coordinates this
// is translate(-c), swap bend/cobend, translate(+c); each step is linear
// and the normalization is preserved, so spheres through c come out as
// lines instead of blowing up.
inline OrientedSphere invert_sphere(const OrientedSphere& s, const Point& c) {
    double c2 = norm2(c);
    // translate by -c
    double b1 = s.bend();
    Vec bc1 = s.bend_center() - s.bend() * c;
    double cob1 = s.cobend() - 2.0 * dot(s.bend_center(), c) + s.bend() * c2;
    // unit inversion at origin swaps bend and cobend
    std::swap(b1, cob1);
    // translate by +c
    Vec bc2 = bc1 + b1 * c;
    double cob2 = cob1 + 2.0 * dot(bc1, c) + b1 * c2;
    OrientedSphere out(b1, cob2, bc2);

    // Cross-check against the closed-form image of a circle: for a
    // non-line input with non-line image,
    //   b = b0*|x0-c|^2 - 1/b0   and   bx = b0*x0 + b0*c*(|x0-c|^2 - 1/b0^2 - 1).
    if (!s.is_line(1e-12) && !out.is_line(1e-12)) {
        Vec x0 = s.center();
        double d2 = norm2(x0 - c);
        double b_direct = s.bend() * d2 - 1.0 / s.bend();
        Vec bc_direct = s.bend() * x0 +
                        (s.bend() * (d2 - 1.0 / (s.bend() * s.bend()) - 1.0)) * c;
        double scale = std::max({1.0, std::abs(out.bend()), norm(out.bend_center())});
        if (std::abs(b_direct - out.bend()) > 1e-6 * scale ||
            norm(bc_direct - out.bend_center()) > 1e-6 * scale)
            throw std::logic_error("inversion image failed closed-form cross-check");
    }
    return out;
}

}  // namespace porism
