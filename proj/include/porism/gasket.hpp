#pragma once

// Apollonian gasket enumeration. Bends follow the exact reflection
//
//     a  ->  2 (b1 + b2 + b3) - a
//
// in rational arithmetic, so an integral seed provably stays integral.
// The same linear reflection acts on the full Lorentz coordinate vector
// (bend, cobend, bend_center), which is how the float geometry is carried
// along for rendering and tangency spot checks: no square roots appear
// after the seed is placed.

#include "porism/descartes.hpp"
#include "porism/exact.hpp"
#include "porism/linalg.hpp"
#include "porism/sphere.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace porism {

struct GasketNode {
    std::array<Rational, 4> bends;
    std::array<OrientedSphere, 4> geometry;
    int depth = 0;
    int parent_swap = -1;  // slot replaced to create this node; -1 for the root
};

inline Rational exact_descartes_residual(const std::array<Rational, 4>& b) {
    Rational s = b[0] + b[1] + b[2] + b[3];
    return s * s - 2 * (b[0] * b[0] + b[1] * b[1] + b[2] * b[2] + b[3] * b[3]);
}

namespace detail {

inline OrientedSphere reflect_sphere(const std::array<OrientedSphere, 4>& g, int slot) {
    double b = 0.0, cob = 0.0;
    Vec bc(g[0].dim());
    for (int i = 0; i < 4; ++i) {
        double w = (i == slot) ? -1.0 : 2.0;
        b += w * g[i].bend();
        cob += w * g[i].cobend();
        bc += w * g[i].bend_center();
    }
    return OrientedSphere(b, cob, bc);
}

inline std::string grid_key(double x) {
    long long g = llround(x * 1e7);
    if (g == 0) g = 0;  // collapse -0
    return std::to_string(g);
}

}  // namespace detail

// Canonical identity of a circle in the packing: exact bend plus the float
// bend-center snapped to a 1e-7 grid (cobend joins in for lines, whose
// bend-center alone does not pin the offset).
inline std::string dedupe_key(const OrientedSphere& s, const Rational& bend) {
    std::string key = to_string(bend);
    for (std::size_t i = 0; i < s.bend_center().size(); ++i)
        key += "|" + detail::grid_key(s.bend_center()[i]);
    if (bend == 0) key += "|h" + detail::grid_key(s.cobend());
    return key;
}

// Seed node from four exact bends. Realizes the geometry from the three
// largest bends (which must be positive circles) and the matching closing
// root, or as the two-lines strip when exactly two bends vanish.
inline GasketNode root_from_bends(const std::array<Rational, 4>& bends) {
    if (exact_descartes_residual(bends) != 0)
        throw std::domain_error("root bends do not satisfy the Descartes relation");

    GasketNode node;
    node.bends = bends;
    node.depth = 0;

    int zeros = 0;
    for (const auto& b : bends)
        if (b == 0) ++zeros;

    if (zeros == 2) {
        // strip configuration: two parallel lines and two equal circles
        Rational circle_bend = 0;
        for (const auto& b : bends)
            if (b != 0) {
                if (circle_bend == 0)
                    circle_bend = b;
                else if (b != circle_bend)
                    throw std::domain_error("two-line roots need equal circle bends");
            }
        if (circle_bend <= 0)
            throw std::domain_error("two-line roots need positive circle bends");
        double r = 1.0 / to_double(circle_bend);
        // lines cooriented away from the strip, like annulus parents
        std::array<OrientedSphere, 4> geo = {
            OrientedSphere::line(Vec{0.0, -1.0}, 0.0),
            OrientedSphere::line(Vec{0.0, 1.0}, 2.0 * r),
            OrientedSphere::from_center_radius(Vec{0.0, r}, r, true),
            OrientedSphere::from_center_radius(Vec{2.0 * r, r}, r, true)};
        int line_at = 0, circle_at = 2;
        for (int i = 0; i < 4; ++i)
            node.geometry[i] = (bends[i] == 0) ? geo[line_at++] : geo[circle_at++];
        if (line_at != 2 || circle_at != 4)
            throw std::logic_error("strip slot assignment failed");
        return node;
    }
    if (zeros != 0)
        throw std::domain_error("roots with a single zero bend are not supported");

    // identify the three largest bends; they must be realizable circles
    std::array<int, 4> order = {0, 1, 2, 3};
    std::sort(order.begin(), order.end(),
              [&](int i, int j) { return bends[i] > bends[j]; });
    int closing = order[3];
    std::array<double, 3> triple{};
    std::array<int, 3> slots{};
    for (int i = 0; i < 3; ++i) {
        slots[i] = order[i];
        triple[i] = to_double(bends[order[i]]);
        if (!(triple[i] > 0.0))
            throw std::domain_error("cannot realize a root with two non-positive bends");
    }

    Quadruple q = construct_quadruple(triple[0], triple[1], triple[2]);
    double a_given = to_double(bends[closing]);
    Cx w;
    if (std::abs(a_given - q.bends[0]) <= 1e-9 * (1.0 + std::abs(a_given))) {
        w = q.centers->at(0);
    } else {
        // the seed closes with the other root
        auto [a1, a2] = soddy_solutions(triple[0], triple[1], triple[2]);
        (void)a2;
        if (std::abs(a_given - a1) > 1e-9 * (1.0 + std::abs(a_given)))
            throw std::domain_error("fourth bend is not a closing root of the triple");
        w = detail::fourth_center(
            {q.centers->at(1), q.centers->at(2), q.centers->at(3)}, triple, a1);
    }

    auto sphere_of = [](double b, Cx z) {
        return OrientedSphere::from_center_radius(vec_from(z), 1.0 / std::abs(b),
                                                  b > 0.0);
    };
    node.geometry[closing] = sphere_of(a_given, w);
    for (int i = 0; i < 3; ++i)
        node.geometry[slots[i]] = sphere_of(triple[i], q.centers->at(i + 1));
    return node;
}

struct GasketCircle {
    Rational bend;
    OrientedSphere geometry;
};

struct GasketResult {
    std::vector<GasketCircle> circles;
    std::size_t nodes_expanded = 0;
    int max_depth_reached = 0;
};

// Breadth-first expansion with parent-slot exclusion. Circles are emitted
// once (deduped across reflection paths) while |bend| <= max_bend; children
// whose new bend exceeds the cap are pruned, max_depth is the safety stop.
inline GasketResult generate(const GasketNode& root, int max_depth,
                             const Rational& max_bend) {
    if (exact_descartes_residual(root.bends) != 0)
        throw std::domain_error("gasket root has nonzero Descartes residual");

    GasketResult out;
    std::unordered_set<std::string> seen;
    auto emit = [&](const Rational& bend, const OrientedSphere& geo) {
        if (abs(bend) > max_bend) return;
        std::string key = dedupe_key(geo, bend);
        if (seen.insert(key).second) out.circles.push_back({bend, geo});
    };

    std::deque<GasketNode> frontier;
    frontier.push_back(root);
    for (int i = 0; i < 4; ++i) emit(root.bends[i], root.geometry[i]);

    while (!frontier.empty()) {
        GasketNode node = std::move(frontier.front());
        frontier.pop_front();
        ++out.nodes_expanded;
        out.max_depth_reached = std::max(out.max_depth_reached, node.depth);
        if (node.depth >= max_depth) continue;

        for (int slot = 0; slot < 4; ++slot) {
            if (slot == node.parent_swap) continue;
            Rational nb = -node.bends[slot];
            for (int i = 0; i < 4; ++i)
                if (i != slot) nb += 2 * node.bends[i];
            if (nb > max_bend) continue;  // descendants only grow

            GasketNode child = node;
            child.bends[slot] = nb;
            child.geometry[slot] = detail::reflect_sphere(node.geometry, slot);
            child.depth = node.depth + 1;
            child.parent_swap = slot;
            emit(nb, child.geometry[slot]);
            frontier.push_back(std::move(child));
        }
    }

    std::sort(out.circles.begin(), out.circles.end(),
              [](const GasketCircle& a, const GasketCircle& b) {
                  if (a.bend != b.bend) return a.bend < b.bend;
                  return dedupe_key(a.geometry, a.bend) <
                         dedupe_key(b.geometry, b.bend);
              });
    return out;
}

}  // namespace porism
