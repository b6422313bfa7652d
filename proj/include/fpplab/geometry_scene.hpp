#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "fpplab/delaunay.hpp"
#include "fpplab/pointset.hpp"
#include "fpplab/voronoi.hpp"

namespace fpplab {

// Uniform bucket grid over Delaunay edges (bounding-box overlap), for fast
// "edges near this box" queries in crossing and annulus computations.
class EdgeGrid {
  public:
    EdgeGrid() = default;
    EdgeGrid(const Triangulation& tri, double cell_size);
    // Candidate edge ids whose bounding box overlaps the box (superset).
    std::vector<int32_t> query(const Box& box) const;

  private:
    double cell_ = 1.0;
    double x0_ = 0.0, y0_ = 0.0;
    int32_t nx_ = 0, ny_ = 0;
    std::vector<std::vector<int32_t>> cells_;
};

// One immutable geometric scene: points, triangulation, Voronoi dual and a
// margin defining the safe region for operations near the boundary. All
// members are read-only after construction and safe to share across threads.
struct GeometryScene {
    PointSet pts;
    Triangulation tri;
    VoronoiDiagram vor;
    double margin = 0.0;
    EdgeGrid edge_grid;

    Window safe_region() const { return pts.window().inset(margin); }
    int32_t locate(Vec2 x) const { return pts.nearest_site(x); }
    bool cell_meets_box(int32_t site, const Box& box) const {
        return fpplab::cell_meets_box(pts, vor, site, box);
    }
    bool cell_flagged(int32_t site) const { return vor.cells()[site].window_flagged; }
};

using ScenePtr = std::shared_ptr<const GeometryScene>;

// Triangulates and dualizes a point set.
ScenePtr build_scene(PointSet pts, double margin = 0.0);

// Poisson scene in one call.
ScenePtr sample_scene(double intensity, const Window& window, uint64_t seed, double margin = 0.0);

} // namespace fpplab
