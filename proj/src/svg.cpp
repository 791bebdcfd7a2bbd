#include "strata/io.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

namespace strata::io {

namespace {

constexpr std::array<const char*, 10> kPalette{"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                               "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

const char* color(int depth) { return kPalette[static_cast<std::size_t>(depth - 1) % kPalette.size()]; }

class Canvas {
public:
    Canvas(const PointSet& s, double width) {
        double x0 = s[0].x, x1 = s[0].x, y0 = s[0].y, y1 = s[0].y;
        for (const Point& p : s) {
            x0 = std::min(x0, p.x);
            x1 = std::max(x1, p.x);
            y0 = std::min(y0, p.y);
            y1 = std::max(y1, p.y);
        }
        double extent = std::max(x1 - x0, y1 - y0);
        if (extent == 0.0) extent = 1.0;
        margin_ = 0.05 * width;
        scale_ = (width - 2 * margin_) / extent;
        x0_ = x0;
        y1_ = y1;
        width_ = width;
        height_ = (y1 - y0) * scale_ + 2 * margin_;
    }

    double x(double v) const { return margin_ + (v - x0_) * scale_; }
    double y(double v) const { return margin_ + (y1_ - v) * scale_; }
    double length(double v) const { return v * scale_; }
    double width() const { return width_; }
    double height() const { return height_; }

private:
    double margin_ = 0, scale_ = 1, x0_ = 0, y1_ = 0, width_ = 0, height_ = 0;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    if (s == "-0.000") s = "0.000";
    return s;
}

std::string arc_path(const Canvas& cv, const ArcCurve& curve) {
    std::string d;
    for (std::size_t i = 0; i < curve.size(); ++i) {
        const Arc& a = curve[i];
        const double r = cv.length(a.circle.radius);
        // The y axis is flipped, so counterclockwise arcs use sweep flag 0.
        const char* sweep = a.counterclockwise ? "0" : "1";
        const Point s = a.start();
        if (i == 0) d += "M" + fmt(cv.x(s.x)) + " " + fmt(cv.y(s.y));
        if (a.sweep() >= 2 * std::numbers::pi) {
            const Point m = a.interpolate(0.5);
            for (const Point& to : {m, s}) {
                d += " A" + fmt(r) + " " + fmt(r) + " 0 0 " + sweep + " " + fmt(cv.x(to.x)) + " " + fmt(cv.y(to.y));
            }
            continue;
        }
        const Point e = a.end();
        const char* large = a.sweep() > std::numbers::pi ? "1" : "0";
        d += " A" + fmt(r) + " " + fmt(r) + " 0 " + large + " " + sweep + " " + fmt(cv.x(e.x)) + " " + fmt(cv.y(e.y));
    }
    return d + " Z";
}

} // namespace

std::string render_svg(const PointSet& s, const DepthLabels& d, const std::vector<Layer>& layers, const LevelSet& ls,
                       const RenderOptions& options) {
    const Canvas cv(s, options.width);
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fmt(cv.width()) + "\" height=\"" +
           fmt(cv.height()) + "\" viewBox=\"0 0 " + fmt(cv.width()) + " " + fmt(cv.height()) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (options.levels && !ls.contours.empty()) {
        out += "<g id=\"contours\" fill=\"none\" stroke-width=\"1\">\n";
        const auto& hull = ls.contours.front().polygon;
        if (hull.size() >= 2) {
            out += "<polygon stroke=\"" + std::string(color(1)) + "\" points=\"";
            for (std::size_t i = 0; i < hull.size(); ++i)
                out += (i ? " " : "") + fmt(cv.x(hull[i].x)) + "," + fmt(cv.y(hull[i].y));
            out += "\"/>\n";
        }
        for (std::size_t k = 1; k < ls.contours.size(); ++k) {
            const DepthContour& c = ls.contours[k];
            for (const ArcCurve& curve : c.curves) {
                out += "<path class=\"level-" + std::to_string(c.level) + "\" stroke=\"" + color(c.level) + "\" d=\"" +
                       arc_path(cv, curve) + "\"/>\n";
            }
        }
        out += "</g>\n";
    }

    if (options.layers) {
        out += "<g id=\"layers\" stroke-width=\"0.75\" stroke-opacity=\"0.6\">\n";
        for (const Layer& l : layers) {
            for (const Edge& e : l.edges) {
                const Point a = s[e.a], b = s[e.b];
                out += "<line stroke=\"" + std::string(color(l.index)) + "\" x1=\"" + fmt(cv.x(a.x)) + "\" y1=\"" +
                       fmt(cv.y(a.y)) + "\" x2=\"" + fmt(cv.x(b.x)) + "\" y2=\"" + fmt(cv.y(b.y)) + "\"/>\n";
            }
        }
        out += "</g>\n";
    }

    out += "<g id=\"points\">\n";
    for (VertexId i = 0; i < s.size(); ++i) {
        out += "<circle cx=\"" + fmt(cv.x(s[i].x)) + "\" cy=\"" + fmt(cv.y(s[i].y)) + "\" r=\"2.5\" fill=\"" +
               color(d.depth[i]) + "\"><title>" + std::to_string(i) + ": depth " + std::to_string(d.depth[i]) +
               "</title></circle>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

} // namespace strata::io
