#include "fpplab/geometry_scene.hpp"

#include <algorithm>
#include <cmath>

namespace fpplab {

EdgeGrid::EdgeGrid(const Triangulation& tri, double cell_size) {
    const Window& w = tri.window();
    cell_ = std::max(cell_size, 1e-9);
    x0_ = w.xmin;
    y0_ = w.ymin;
    nx_ = std::max<int32_t>(1, static_cast<int32_t>(std::ceil(w.width() / cell_)));
    ny_ = std::max<int32_t>(1, static_cast<int32_t>(std::ceil(w.height() / cell_)));
    cells_.assign(static_cast<std::size_t>(nx_) * ny_, {});
    const auto& pts = tri.points();
    for (std::size_t e = 0; e < tri.edges().size(); ++e) {
        const Vec2 a = pts[tri.edges()[e].a];
        const Vec2 b = pts[tri.edges()[e].b];
        const int32_t gx0 = std::clamp(static_cast<int32_t>(std::floor((std::min(a.x, b.x) - x0_) / cell_)), 0, nx_ - 1);
        const int32_t gx1 = std::clamp(static_cast<int32_t>(std::floor((std::max(a.x, b.x) - x0_) / cell_)), 0, nx_ - 1);
        const int32_t gy0 = std::clamp(static_cast<int32_t>(std::floor((std::min(a.y, b.y) - y0_) / cell_)), 0, ny_ - 1);
        const int32_t gy1 = std::clamp(static_cast<int32_t>(std::floor((std::max(a.y, b.y) - y0_) / cell_)), 0, ny_ - 1);
        for (int32_t gy = gy0; gy <= gy1; ++gy)
            for (int32_t gx = gx0; gx <= gx1; ++gx)
                cells_[static_cast<std::size_t>(gy) * nx_ + gx].push_back(static_cast<int32_t>(e));
    }
}

std::vector<int32_t> EdgeGrid::query(const Box& box) const {
    std::vector<int32_t> out;
    if (cells_.empty()) return out;
    const int32_t gx0 = std::clamp(static_cast<int32_t>(std::floor((box.xmin - x0_) / cell_)), 0, nx_ - 1);
    const int32_t gx1 = std::clamp(static_cast<int32_t>(std::floor((box.xmax - x0_) / cell_)), 0, nx_ - 1);
    const int32_t gy0 = std::clamp(static_cast<int32_t>(std::floor((box.ymin - y0_) / cell_)), 0, ny_ - 1);
    const int32_t gy1 = std::clamp(static_cast<int32_t>(std::floor((box.ymax - y0_) / cell_)), 0, ny_ - 1);
    for (int32_t gy = gy0; gy <= gy1; ++gy)
        for (int32_t gx = gx0; gx <= gx1; ++gx)
            for (const int32_t e : cells_[static_cast<std::size_t>(gy) * nx_ + gx]) out.push_back(e);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ScenePtr build_scene(PointSet pts, double margin) {
    GeometryScene s{std::move(pts), Triangulation{}, VoronoiDiagram{}, margin, EdgeGrid{}};
    s.tri = delaunay(s.pts);
    s.vor = voronoi_dual(s.tri);
    const double spacing = 1.0 / std::sqrt(std::max(s.pts.intensity(), 1e-6));
    s.edge_grid = EdgeGrid(s.tri, 2.0 * spacing);
    return std::make_shared<const GeometryScene>(std::move(s));
}

ScenePtr sample_scene(double intensity, const Window& window, uint64_t seed, double margin) {
    return build_scene(PointSet::sample_poisson(intensity, window, seed), margin);
}

} // namespace fpplab
