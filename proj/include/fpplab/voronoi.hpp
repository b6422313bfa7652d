#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "fpplab/delaunay.hpp"
#include "fpplab/pointset.hpp"
#include "fpplab/vec2.hpp"

namespace fpplab {

// Planar dual of the Delaunay triangulation. Voronoi vertex i is the
// circumcenter of triangle i; Voronoi edge e is dual to Delaunay edge e (the
// bijection is the identity on ids). Edges dual to hull Delaunay edges are
// rays; cells of hull sites are unbounded, carry explicit ray directions and
// are flagged so downstream statistics can exclude them.
class VoronoiDiagram {
  public:
    struct Cell {
        std::vector<int32_t> tri_fan; // incident triangles ccw; circumcenters = boundary chain
        bool unbounded = false;
        Vec2 ray_start_dir{};         // outward ray leaving the first chain vertex
        Vec2 ray_end_dir{};           // outward ray leaving the last chain vertex
        bool window_flagged = false;  // unbounded, or chain exits the open window
    };

    const std::vector<Vec2>& vertices() const { return vertices_; }
    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t edge_count() const { return edge_sites_.size(); }

    bool edge_bounded(int32_t e) const { return edge_tris_[e][1] >= 0; }
    // Endpoints of a bounded Voronoi edge (circumcenters of the two adjacent
    // triangles of the dual Delaunay edge).
    std::array<Vec2, 2> edge_segment(int32_t e) const {
        return {vertices_[edge_tris_[e][0]], vertices_[edge_tris_[e][1]]};
    }
    // Unbounded edges: origin vertex and outward direction.
    Vec2 edge_ray_origin(int32_t e) const { return vertices_[edge_tris_[e][0]]; }
    Vec2 edge_ray_dir(int32_t e) const { return edge_ray_dir_[e]; }
    // Sites on either side of the dual Delaunay edge.
    std::array<int32_t, 2> edge_sites(int32_t e) const { return edge_sites_[e]; }
    // Dual bijection (identity on ids, both directions).
    int32_t dual_of(int32_t e) const { return e; }

  private:
    friend VoronoiDiagram voronoi_dual(const Triangulation& tri);
    std::vector<Vec2> vertices_;
    std::vector<Cell> cells_;
    std::vector<std::array<int32_t, 2>> edge_tris_;
    std::vector<std::array<int32_t, 2>> edge_sites_;
    std::vector<Vec2> edge_ray_dir_;
};

VoronoiDiagram voronoi_dual(const Triangulation& tri);

// Closed-intersection test between the cell of a site and an axis box.
// Unbounded cells have their rays extended far past the window.
bool cell_meets_box(const PointSet& pts, const VoronoiDiagram& vor, int32_t site, const Box& box);

// Cross-product sign sequence check on the cell boundary chain.
bool cell_is_convex(const VoronoiDiagram& vor, int32_t site);

} // namespace fpplab
