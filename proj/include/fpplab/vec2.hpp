#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

#include "fpplab/errors.hpp"

namespace fpplab {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(Vec2 a, Vec2 b) { return !(a == b); }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double dist2(Vec2 a, Vec2 b) { return norm2(a - b); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }

inline bool lex_less(Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

// Integer lattice point (renormalization grid).
struct IVec2 {
    int x = 0;
    int y = 0;
    friend bool operator==(IVec2 a, IVec2 b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(IVec2 a, IVec2 b) { return !(a == b); }
};

inline int linf(IVec2 a) { return std::max(std::abs(a.x), std::abs(a.y)); }
inline int linf_dist(IVec2 a, IVec2 b) { return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y)); }

// Axis-aligned rectangle. Used both as the simulation window and as a
// renormalization box; invariants are only enforced where a window is built.
struct Window {
    double xmin = 0.0;
    double xmax = 0.0;
    double ymin = 0.0;
    double ymax = 0.0;

    static Window make(double x0, double x1, double y0, double y1) {
        if (!(std::isfinite(x0) && std::isfinite(x1) && std::isfinite(y0) && std::isfinite(y1)))
            throw invalid_parameter_error("window coordinates must be finite");
        if (!(x0 < x1 && y0 < y1))
            throw invalid_parameter_error("window must satisfy xmin < xmax and ymin < ymax");
        return Window{x0, x1, y0, y1};
    }
    static Window centered(double cx, double cy, double half) {
        return make(cx - half, cx + half, cy - half, cy + half);
    }

    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
    double area() const { return width() * height(); }

    bool contains(Vec2 p) const {
        return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
    }
    bool contains_strict(Vec2 p) const {
        return p.x > xmin && p.x < xmax && p.y > ymin && p.y < ymax;
    }
    bool contains_box(const Window& b) const {
        return b.xmin >= xmin && b.xmax <= xmax && b.ymin >= ymin && b.ymax <= ymax;
    }
    Window inset(double m) const { return Window{xmin + m, xmax - m, ymin + m, ymax - m}; }
    Window inflated(double m) const { return Window{xmin - m, xmax + m, ymin - m, ymax + m}; }
};

using Box = Window; // same representation, no area invariant implied

// Clips segment [a,b] against a closed box (Liang-Barsky). Returns false when
// the segment misses the box entirely; otherwise [t0,t1] select the part inside.
bool clip_segment(Vec2 a, Vec2 b, const Box& box, double& t0, double& t1);

// Segment meets the closed box.
inline bool segment_meets_box(Vec2 a, Vec2 b, const Box& box) {
    double t0, t1;
    return clip_segment(a, b, box, t0, t1);
}

// Segment meets the box boundary (it touches the box but is not contained in
// the open interior).
bool segment_meets_box_boundary(Vec2 a, Vec2 b, const Box& box);

// Proper/touching intersection of segments [a,b] and [c,d].
bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d);

} // namespace fpplab
