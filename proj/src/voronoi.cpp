#include "fpplab/voronoi.hpp"

#include <algorithm>
#include <cmath>

#include "fpplab/errors.hpp"

namespace fpplab {

namespace {

Vec2 perp(Vec2 a) { return {-a.y, a.x}; }

// Outward bisector direction for the hull Delaunay edge (a, b) whose single
// adjacent triangle has third vertex w.
Vec2 outward_bisector(Vec2 a, Vec2 b, Vec2 w) {
    Vec2 d = perp(b - a);
    const Vec2 mid = 0.5 * (a + b);
    if (dot(d, w - mid) > 0.0) d = {-d.x, -d.y};
    const double n = norm(d);
    if (n == 0.0) throw degenerate_input_error("degenerate hull edge");
    return {d.x / n, d.y / n};
}

} // namespace

VoronoiDiagram voronoi_dual(const Triangulation& tri) {
    VoronoiDiagram out;
    const auto& tris = tri.triangles();
    const auto& edges = tri.edges();
    const auto& pts = tri.points();

    out.vertices_.reserve(tris.size());
    for (const auto& t : tris) out.vertices_.push_back(t.center);

    out.edge_tris_.reserve(edges.size());
    out.edge_sites_.reserve(edges.size());
    out.edge_ray_dir_.assign(edges.size(), Vec2{});
    for (std::size_t e = 0; e < edges.size(); ++e) {
        out.edge_tris_.push_back(edges[e].tri);
        out.edge_sites_.push_back({edges[e].a, edges[e].b});
        if (edges[e].tri[1] < 0) {
            const auto& tv = tris[edges[e].tri[0]].v;
            int32_t w = -1;
            for (int s = 0; s < 3; ++s)
                if (tv[s] != edges[e].a && tv[s] != edges[e].b) w = tv[s];
            out.edge_ray_dir_[e] = outward_bisector(pts[edges[e].a], pts[edges[e].b], pts[w]);
        }
    }

    const Window& win = tri.window();
    out.cells_.resize(pts.size());
    for (int32_t v = 0; v < static_cast<int32_t>(pts.size()); ++v) {
        auto& cell = out.cells_[v];
        cell.tri_fan = tri.incident_triangles_ccw(v);
        cell.unbounded = tri.is_hull_vertex(v);
        if (cell.unbounded && !cell.tri_fan.empty()) {
            // First fan triangle borders the clockwise-most hull edge at v,
            // the last one the counterclockwise-most.
            auto hull_ray = [&](int32_t t, bool cw_side) {
                const auto& tv = tris[t].v;
                int s = 0;
                while (tv[s] != v) ++s;
                const int32_t other = cw_side ? tv[(s + 1) % 3] : tv[(s + 2) % 3];
                int32_t w = -1;
                for (int k = 0; k < 3; ++k)
                    if (tv[k] != v && tv[k] != other) w = tv[k];
                return outward_bisector(pts[v], pts[other], pts[w]);
            };
            cell.ray_start_dir = hull_ray(cell.tri_fan.front(), true);
            cell.ray_end_dir = hull_ray(cell.tri_fan.back(), false);
        }
        cell.window_flagged = cell.unbounded;
        for (const int32_t t : cell.tri_fan)
            if (!win.contains_strict(out.vertices_[t])) cell.window_flagged = true;
    }
    return out;
}

bool cell_meets_box(const PointSet& pts, const VoronoiDiagram& vor, int32_t site, const Box& box) {
    const auto& cell = vor.cells()[site];
    if (box.contains(pts[site])) return true;

    std::vector<Vec2> chain;
    chain.reserve(cell.tri_fan.size() + 2);
    const double reach = 4.0 * (pts.window().width() + pts.window().height()) + 1.0;
    if (cell.unbounded && !cell.tri_fan.empty()) {
        const Vec2 c0 = vor.vertices()[cell.tri_fan.front()];
        chain.push_back(c0 + reach * cell.ray_start_dir);
    }
    for (const int32_t t : cell.tri_fan) chain.push_back(vor.vertices()[t]);
    if (cell.unbounded && !cell.tri_fan.empty()) {
        const Vec2 c1 = vor.vertices()[cell.tri_fan.back()];
        chain.push_back(c1 + reach * cell.ray_end_dir);
    }

    for (const Vec2& p : chain)
        if (box.contains(p)) return true;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (segment_meets_box(chain[i], chain[i + 1], box)) return true;
    if (!cell.unbounded && chain.size() >= 3)
        if (segment_meets_box(chain.back(), chain.front(), box)) return true;

    // Box possibly strictly inside the cell: nearest site of a corner decides.
    const Vec2 corners[4] = {{box.xmin, box.ymin}, {box.xmax, box.ymin},
                             {box.xmax, box.ymax}, {box.xmin, box.ymax}};
    for (const Vec2& c : corners)
        if (pts.nearest_site(c) == site) return true;
    return false;
}

bool cell_is_convex(const VoronoiDiagram& vor, int32_t site) {
    const auto& cell = vor.cells()[site];
    std::vector<Vec2> ring;
    for (const int32_t t : cell.tri_fan) {
        const Vec2 c = vor.vertices()[t];
        if (ring.empty() || !(ring.back() == c)) ring.push_back(c);
    }
    if (ring.size() >= 2 && ring.front() == ring.back()) ring.pop_back();
    if (ring.size() < 3) return true;
    const std::size_t n = ring.size();
    const std::size_t limit = cell.unbounded ? n - 2 : n;
    for (std::size_t i = 0; i < limit; ++i) {
        const Vec2 a = ring[i];
        const Vec2 b = ring[(i + 1) % n];
        const Vec2 c = ring[(i + 2) % n];
        if (cross(b - a, c - b) < 0.0) return false;
    }
    return true;
}

} // namespace fpplab
