#include "fpplab/vec2.hpp"

#include <algorithm>

namespace fpplab {

bool clip_segment(Vec2 a, Vec2 b, const Box& box, double& t0, double& t1) {
    t0 = 0.0;
    t1 = 1.0;
    const double d[2] = {b.x - a.x, b.y - a.y};
    const double p0[2] = {a.x, a.y};
    const double lo[2] = {box.xmin, box.ymin};
    const double hi[2] = {box.xmax, box.ymax};
    for (int axis = 0; axis < 2; ++axis) {
        if (d[axis] == 0.0) {
            if (p0[axis] < lo[axis] || p0[axis] > hi[axis]) return false;
            continue;
        }
        double ta = (lo[axis] - p0[axis]) / d[axis];
        double tb = (hi[axis] - p0[axis]) / d[axis];
        if (ta > tb) std::swap(ta, tb);
        t0 = std::max(t0, ta);
        t1 = std::min(t1, tb);
        if (t0 > t1) return false;
    }
    return true;
}

bool segment_meets_box_boundary(Vec2 a, Vec2 b, const Box& box) {
    double t0, t1;
    if (!clip_segment(a, b, box, t0, t1)) return false;
    const bool a_inside = box.contains_strict(a);
    const bool b_inside = box.contains_strict(b);
    return !(a_inside && b_inside);
}

static int sgn(double v) { return (v > 0.0) - (v < 0.0); }

bool segments_intersect(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    const double d1 = cross(b - a, c - a);
    const double d2 = cross(b - a, d - a);
    const double d3 = cross(d - c, a - c);
    const double d4 = cross(d - c, b - c);
    if (sgn(d1) * sgn(d2) < 0 && sgn(d3) * sgn(d4) < 0) return true;
    auto on_segment = [](Vec2 p, Vec2 q, Vec2 r) {
        return cross(q - p, r - p) == 0.0 && std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) &&
               std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y);
    };
    return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) || on_segment(c, d, b);
}

} // namespace fpplab
