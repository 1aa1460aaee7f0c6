#pragma once

// Minimal stroke-only SVG output for circle configurations. The viewport
// fits the drawn circles with a small margin; lines are clipped to the
// viewport rectangle.

#include "porism/sphere.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace porism {

class SvgCanvas {
public:
    void add_circle(double cx, double cy, double r, const std::string& stroke = "#222") {
        circles_.push_back({cx, cy, r, stroke});
        touch(cx - r, cy - r);
        touch(cx + r, cy + r);
    }

    void add_sphere(const OrientedSphere& s, const std::string& stroke = "#222") {
        if (s.is_line()) {
            lines_.push_back({s.line_normal()[0], s.line_normal()[1],
                              s.line_offset(), stroke});
            return;
        }
        add_circle(s.center()[0], s.center()[1], s.radius(), stroke);
    }

    std::size_t circle_count() const { return circles_.size(); }

    std::string str() const {
        double pad = 0.05 * std::max(xmax_ - xmin_, ymax_ - ymin_);
        if (!(pad > 0.0)) pad = 1.0;
        double x0 = xmin_ - pad, y0 = ymin_ - pad;
        double w = (xmax_ - xmin_) + 2.0 * pad, h = (ymax_ - ymin_) + 2.0 * pad;
        double stroke_w = 0.0015 * std::max(w, h);

        std::ostringstream os;
        os.precision(8);
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
           << "viewBox=\"" << x0 << " " << y0 << " " << w << " " << h << "\">\n";
        for (const auto& c : circles_)
            os << "  <circle cx=\"" << c.x << "\" cy=\"" << c.y << "\" r=\"" << c.r
               << "\" fill=\"none\" stroke=\"" << c.stroke << "\" stroke-width=\""
               << stroke_w << "\"/>\n";
        for (const auto& l : lines_) {
            // line {p : nx*x + ny*y = h} clipped by extending far beyond the box
            double px = l.nx * l.h, py = l.ny * l.h;
            double tx = -l.ny, ty = l.nx;
            double ext = 2.0 * std::max(w, h);
            os << "  <line x1=\"" << px - ext * tx << "\" y1=\"" << py - ext * ty
               << "\" x2=\"" << px + ext * tx << "\" y2=\"" << py + ext * ty
               << "\" stroke=\"" << l.stroke << "\" stroke-width=\"" << stroke_w
               << "\"/>\n";
        }
        os << "</svg>\n";
        return os.str();
    }

    void write(const std::string& path) const {
        std::ofstream f(path);
        if (!f) throw std::runtime_error("cannot open " + path);
        f << str();
    }

private:
    struct Circle {
        double x, y, r;
        std::string stroke;
    };
    struct Line {
        double nx, ny, h;
        std::string stroke;
    };

    void touch(double x, double y) {
        xmin_ = std::min(xmin_, x);
        xmax_ = std::max(xmax_, x);
        ymin_ = std::min(ymin_, y);
        ymax_ = std::max(ymax_, y);
    }

    std::vector<Circle> circles_;
    std::vector<Line> lines_;
    double xmin_ = 1e300, xmax_ = -1e300, ymin_ = 1e300, ymax_ = -1e300;
};

}  // namespace porism
