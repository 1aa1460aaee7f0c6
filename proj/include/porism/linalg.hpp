#pragma once

// Small dynamic-dimension vector/matrix kit used throughout the library.
// Dimensions are tiny (2..5), so everything is plain loops over
// std::vector storage; no external linear algebra dependency.

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace porism {

inline bool nearly_equal(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

class Vec {
public:
    Vec() = default;
    explicit Vec(std::size_t dim) : c_(dim, 0.0) {}
    Vec(std::initializer_list<double> v) : c_(v) {}
    explicit Vec(std::vector<double> v) : c_(std::move(v)) {}

    std::size_t size() const { return c_.size(); }
    double operator[](std::size_t i) const { return c_[i]; }
    double& operator[](std::size_t i) { return c_[i]; }
    const std::vector<double>& data() const { return c_; }

    Vec& operator+=(const Vec& o) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    Vec& operator*=(double k) {
        for (double& x : c_) x *= k;
        return *this;
    }

    friend Vec operator+(Vec a, const Vec& b) { return a += b; }
    friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
    friend Vec operator*(double k, Vec a) { return a *= k; }
    friend Vec operator*(Vec a, double k) { return a *= k; }
    friend Vec operator/(Vec a, double k) { return a *= 1.0 / k; }
    friend Vec operator-(Vec a) { return a *= -1.0; }

private:
    std::vector<double> c_;
};

using Point = Vec;

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Vec& v) { return dot(v, v); }
inline double norm(const Vec& v) { return std::sqrt(norm2(v)); }
inline double dist(const Vec& a, const Vec& b) { return norm(a - b); }

inline Vec normalized(const Vec& v) {
    double n = norm(v);
    if (n == 0.0) throw std::domain_error("cannot normalize zero vector");
    return v / n;
}

inline Vec unit_axis(std::size_t dim, std::size_t axis) {
    Vec e(dim);
    e[axis] = 1.0;
    return e;
}

// Dense square matrix, row major.
class Mat {
public:
    Mat() = default;
    explicit Mat(std::size_t n) : n_(n), a_(n * n, 0.0) {}

    static Mat identity(std::size_t n) {
        Mat m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t dim() const { return n_; }
    double operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
    double& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }

    Mat transposed() const {
        Mat t(n_);
        for (std::size_t r = 0; r < n_; ++r)
            for (std::size_t c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    friend Vec operator*(const Mat& m, const Vec& v) {
        Vec out(m.n_);
        for (std::size_t r = 0; r < m.n_; ++r) {
            double s = 0.0;
            for (std::size_t c = 0; c < m.n_; ++c) s += m(r, c) * v[c];
            out[r] = s;
        }
        return out;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        Mat out(a.n_);
        for (std::size_t r = 0; r < a.n_; ++r)
            for (std::size_t k = 0; k < a.n_; ++k) {
                double arc = a(r, k);
                if (arc == 0.0) continue;
                for (std::size_t c = 0; c < a.n_; ++c) out(r, c) += arc * b(k, c);
            }
        return out;
    }

    // Determinant by Gaussian elimination with partial pivoting.
    double det() const {
        Mat m = *this;
        double d = 1.0;
        for (std::size_t col = 0; col < n_; ++col) {
            std::size_t piv = col;
            for (std::size_t r = col + 1; r < n_; ++r)
                if (std::abs(m(r, col)) > std::abs(m(piv, col))) piv = r;
            if (m(piv, col) == 0.0) return 0.0;
            if (piv != col) {
                for (std::size_t c = 0; c < n_; ++c) std::swap(m(piv, c), m(col, c));
                d = -d;
            }
            d *= m(col, col);
            for (std::size_t r = col + 1; r < n_; ++r) {
                double f = m(r, col) / m(col, col);
                for (std::size_t c = col; c < n_; ++c) m(r, c) -= f * m(col, c);
            }
        }
        return d;
    }

private:
    std::size_t n_ = 0;
    std::vector<double> a_;
};

inline double orthogonality_residual(const Mat& q) {
    Mat qtq = q.transposed() * q;
    double worst = 0.0;
    for (std::size_t r = 0; r < q.dim(); ++r)
        for (std::size_t c = 0; c < q.dim(); ++c)
            worst = std::max(worst, std::abs(qtq(r, c) - (r == c ? 1.0 : 0.0)));
    return worst;
}

inline Mat rotation2d(double theta) {
    Mat m(2);
    m(0, 0) = std::cos(theta);
    m(0, 1) = -std::sin(theta);
    m(1, 0) = std::sin(theta);
    m(1, 1) = std::cos(theta);
    return m;
}

// Rotation (det +1) carrying unit vector u onto unit vector v; identity when
// u == v. The antipodal case routes through an intermediate axis.
inline Mat rotation_from_to(const Vec& u, const Vec& v) {
    std::size_t n = u.size();
    double c = dot(u, v);
    if (c < -1.0 + 1e-12) {
        // u == -v: compose two half-turns through a perpendicular axis.
        std::size_t k = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (std::abs(u[i]) < std::abs(u[k])) k = i;
        Vec w = unit_axis(n, k) - dot(unit_axis(n, k), u) * u;
        w = normalized(w);
        return rotation_from_to(w, v) * rotation_from_to(u, w);
    }
    Mat r = Mat::identity(n);
    Vec s = u + v;
    double f = 1.0 / (1.0 + c);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            r(i, j) += -f * s[i] * s[j] + 2.0 * v[i] * u[j];
    return r;
}

// Planar complex value kept as an explicit pair so the API never leans on a
// host complex type.
struct Cx {
    double re = 0.0;
    double im = 0.0;

    friend Cx operator+(Cx a, Cx b) { return {a.re + b.re, a.im + b.im}; }
    friend Cx operator-(Cx a, Cx b) { return {a.re - b.re, a.im - b.im}; }
    friend Cx operator*(Cx a, Cx b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cx operator*(double k, Cx a) { return {k * a.re, k * a.im}; }
    friend Cx operator-(Cx a) { return {-a.re, -a.im}; }
};

inline double cx_abs(Cx z) { return std::hypot(z.re, z.im); }

inline Cx cx_sqrt(Cx z) {
    double r = cx_abs(z);
    if (r == 0.0) return {0.0, 0.0};
    double re = std::sqrt((r + z.re) / 2.0);
    double im = std::sqrt((r - z.re) / 2.0);
    return {re, z.im >= 0.0 ? im : -im};
}

inline Cx cx_from(const Vec& v) { return {v[0], v[1]}; }
inline Vec vec_from(Cx z) { return Vec{z.re, z.im}; }

inline Cx cx_pow(Cx z, int n) {
    Cx out{1.0, 0.0};
    for (int i = 0; i < n; ++i) out = out * z;
    return out;
}

}  // namespace porism
