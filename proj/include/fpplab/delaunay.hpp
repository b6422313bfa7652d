#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "fpplab/pointset.hpp"
#include "fpplab/predicates.hpp"
#include "fpplab/vec2.hpp"

namespace fpplab {

// Delaunay triangulation of a point set. Every triangle satisfies the empty
// open-circumdisc property under the symbolic perturbation of the predicates,
// so the triangulation is a pure function of the input points. Triangles and
// edges are stored in canonical order.
class Triangulation {
  public:
    struct Triangle {
        std::array<int32_t, 3> v; // ccw, rotated so v[0] is the smallest index
        Vec2 center;              // circumcenter
        double radius;            // circumradius
    };
    struct Edge {
        int32_t a, b;             // a < b
        std::array<int32_t, 2> tri; // adjacent triangles; tri[1] == -1 on the hull
    };

    const std::vector<Vec2>& points() const { return points_; }
    const std::vector<Triangle>& triangles() const { return triangles_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::vector<int32_t>>& vertex_edges() const { return vertex_edges_; }
    const Window& window() const { return window_; }

    std::size_t vertex_count() const { return points_.size(); }
    bool is_hull_vertex(int32_t v) const { return hull_vertex_[v]; }
    int32_t lex_rank(int32_t v) const { return lex_rank_[v]; }

    // Edge id joining u and v, or -1.
    int32_t edge_between(int32_t u, int32_t v) const;

    // Other endpoint of edge e as seen from u.
    int32_t edge_other(int32_t e, int32_t u) const {
        return edges_[e].a == u ? edges_[e].b : edges_[e].a;
    }

    // Incident triangles of v in counterclockwise rotation order. For hull
    // vertices the fan is open and starts/ends at hull edges.
    std::vector<int32_t> incident_triangles_ccw(int32_t v) const;

  private:
    friend Triangulation delaunay(const PointSet& pts);

    std::vector<Vec2> points_;
    std::vector<int32_t> lex_rank_;
    Window window_;
    std::vector<Triangle> triangles_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int32_t>> vertex_edges_;
    std::vector<bool> hull_vertex_;
    std::unordered_map<uint64_t, int32_t> edge_map_;
};

// Builds the triangulation. Requires at least 3 points, not all collinear.
Triangulation delaunay(const PointSet& pts);

} // namespace fpplab
