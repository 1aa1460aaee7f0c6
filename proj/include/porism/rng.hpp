#pragma once

// Seeded random generators for certification runs and property tests.
// Everything funnels through one mt19937_64 so a --seed flag reproduces a
// whole run.

#include "porism/conformal.hpp"
#include "porism/linalg.hpp"

#include <random>

namespace porism {

class Rng {
public:
    explicit Rng(std::uint64_t seed = 0x5eed) : gen_(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(gen_);
    }
    int uniform_int(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(gen_);
    }
    double gaussian() { return std::normal_distribution<double>(0.0, 1.0)(gen_); }

    Vec gaussian_vec(std::size_t n) {
        Vec v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = gaussian();
        return v;
    }

    Vec unit_vec(std::size_t n) {
        for (;;) {
            Vec v = gaussian_vec(n);
            double m = norm(v);
            if (m > 1e-6) return v / m;
        }
    }

    Vec point_in_ball(std::size_t n, double radius) {
        for (;;) {
            Vec v(n);
            for (std::size_t i = 0; i < n; ++i) v[i] = uniform(-radius, radius);
            if (norm(v) <= radius) return v;
        }
    }

    // Gram-Schmidt on a Gaussian matrix; det is +-1 at random.
    Mat orthogonal(std::size_t n) {
        std::vector<Vec> cols;
        while (cols.size() < n) {
            Vec v = gaussian_vec(n);
            for (const Vec& u : cols) v -= dot(v, u) * u;
            double m = norm(v);
            if (m < 1e-8) continue;
            cols.push_back(v / m);
        }
        Mat q(n);
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t r = 0; r < n; ++r) q(r, c) = cols[c][r];
        return q;
    }

    OrientedSphere sphere(std::size_t dim) {
        return OrientedSphere::from_center_radius(point_in_ball(dim, 3.0),
                                                  uniform(0.2, 2.5),
                                                  uniform(0.0, 1.0) < 0.5);
    }

    Similarity similarity(std::size_t dim) {
        return {uniform(0.3, 3.0), orthogonal(dim), point_in_ball(dim, 2.0)};
    }

    ConformalMap conformal(std::size_t dim) {
        Similarity s = similarity(dim);
        if (uniform(0.0, 1.0) < 0.4) return ConformalMap::similarity(s);
        return ConformalMap::similarity_then_unit_inversion(point_in_ball(dim, 2.0), s);
    }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

}  // namespace porism
