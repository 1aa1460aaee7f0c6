#pragma once

// Conformal transformations of R^d in normal form: every map is either a
// similarity or unit-inversion-after-similarity,
//
//     psi = S          or     psi = I_C . S
//
// with S(x) = scale * Q x + t (Q orthogonal, det +-1) and I_C the inversion
// in the unit sphere at C. Compositions and inverses stay inside these two
// kinds; the inversion.inversion case reduces through the identity
//
//     I_0 . T_e . I_0 = I_{e/|e|^2} . M_e,
//
// where M_e is the similarity with scale |e|^2, linear part the reflection
// in the hyperplane perpendicular to e, and translation e/|e|^2 - e.

#include "porism/linalg.hpp"
#include "porism/sphere.hpp"

#include <optional>
#include <stdexcept>
#include <utility>

namespace porism {

struct Similarity {
    double scale = 1.0;  // > 0
    Mat rotation;        // orthogonal, det +1 or -1
    Vec translation;

    static Similarity identity(std::size_t dim) {
        return {1.0, Mat::identity(dim), Vec(dim)};
    }
    static Similarity translate(const Vec& t) {
        return {1.0, Mat::identity(t.size()), t};
    }
    static Similarity scaling(std::size_t dim, double k) {
        if (!(k > 0.0)) throw std::domain_error("similarity scale must be positive");
        return {k, Mat::identity(dim), Vec(dim)};
    }

    bool reflects() const { return rotation.det() < 0.0; }

    Point operator()(const Point& x) const {
        return scale * (rotation * x) + translation;
    }

    OrientedSphere apply(const OrientedSphere& s) const {
        // rotate, scale, translate on Lorentz coordinates
        Vec bc_r = rotation * s.bend_center();
        double b = s.bend() / scale;
        double cob = s.cobend() * scale + 2.0 * dot(bc_r, translation) +
                     b * norm2(translation);
        Vec bc = bc_r + b * translation;
        return OrientedSphere(b, cob, bc);
    }

    Similarity inverse() const {
        Mat qt = rotation.transposed();
        return {1.0 / scale, qt, (-1.0 / scale) * (qt * translation)};
    }

    // outer . *this
    Similarity after(const Similarity& outer) const {
        return {outer.scale * scale, outer.rotation * rotation,
                outer.scale * (outer.rotation * translation) + outer.translation};
    }
};

class ConformalMap {
public:
    static ConformalMap similarity(Similarity s) {
        ConformalMap m;
        m.inner_ = std::move(s);
        return m;
    }
    static ConformalMap identity(std::size_t dim) {
        return similarity(Similarity::identity(dim));
    }
    static ConformalMap unit_inversion(Point center) {
        ConformalMap m;
        m.inner_ = Similarity::identity(center.size());
        m.center_ = std::move(center);
        return m;
    }
    static ConformalMap similarity_then_unit_inversion(Point center, Similarity inner) {
        ConformalMap m;
        m.inner_ = std::move(inner);
        m.center_ = std::move(center);
        return m;
    }

    bool is_similarity() const { return !center_.has_value(); }
    const Similarity& inner() const { return inner_; }
    const Point& inversion_center() const {
        if (!center_) throw std::logic_error("map has no inversion part");
        return *center_;
    }
    std::size_t dim() const { return inner_.translation.size(); }

    Point operator()(const Point& x) const {
        Point y = inner_(x);
        if (!center_) return y;
        Vec d = y - *center_;
        double d2 = norm2(d);
        if (d2 == 0.0) throw std::domain_error("point maps to infinity");
        return *center_ + d / d2;
    }

    OrientedSphere apply(const OrientedSphere& s) const {
        OrientedSphere t = inner_.apply(s);
        if (!center_) return t;
        return invert_sphere(t, *center_);
    }

    ConformalMap inverse() const;

private:
    Similarity inner_;            // applied first
    std::optional<Point> center_; // then unit inversion here, if present
};

// outer . inner, renormalized to similarity / inversion-after-similarity form.
inline ConformalMap compose(const ConformalMap& outer, const ConformalMap& inner) {
    // similarity . psi
    if (outer.is_similarity()) {
        const Similarity& so = outer.inner();
        if (inner.is_similarity())
            return ConformalMap::similarity(inner.inner().after(so));
        // S . I_C = I_{S(C)} . S'  with  S'(x) = S(C) + Q(x - C)/scale
        const Point& c = inner.inversion_center();
        Point c_img = so(c);
        Similarity s_prime{1.0 / so.scale, so.rotation,
                           c_img - (1.0 / so.scale) * (so.rotation * c)};
        return ConformalMap::similarity_then_unit_inversion(
            c_img, inner.inner().after(s_prime));
    }
    // (I_C2 . S2) . similarity
    if (inner.is_similarity()) {
        return ConformalMap::similarity_then_unit_inversion(
            outer.inversion_center(), inner.inner().after(outer.inner()));
    }
    // (I_C2 . S2) . (I_C1 . S1): first rewrite S2 . I_C1 = I_D . S2'.
    const Point& c2 = outer.inversion_center();
    const Similarity& s2 = outer.inner();
    const Point& c1 = inner.inversion_center();
    Point d = s2(c1);
    Similarity s2_prime{1.0 / s2.scale, s2.rotation,
                        d - (1.0 / s2.scale) * (s2.rotation * c1)};
    Similarity tail = inner.inner().after(s2_prime);  // S2' . S1

    Vec e = d - c2;
    double e2 = norm2(e);
    if (e2 <= 1e-24 * std::max(1.0, norm2(c2))) {
        // I_C . I_C = id
        return ConformalMap::similarity(tail);
    }
    // I_C2 . I_D = I_P . M  with P = C2 + e/|e|^2 and
    // M(x) = |e|^2 * H(x - D) + P - e,  H the reflection across e-perp.
    Vec eh = e / std::sqrt(e2);
    std::size_t n = e.size();
    Mat h = Mat::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) -= 2.0 * eh[i] * eh[j];
    Point p = c2 + e / e2;
    Similarity m{e2, h, p - e - e2 * (h * d)};
    return ConformalMap::similarity_then_unit_inversion(p, tail.after(m));
}

inline ConformalMap ConformalMap::inverse() const {
    if (!center_) return ConformalMap::similarity(inner_.inverse());
    // (I_C . S)^-1 = S^-1 . I_C
    return compose(ConformalMap::similarity(inner_.inverse()),
                   ConformalMap::unit_inversion(*center_));
}

}  // namespace porism
