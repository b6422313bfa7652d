#pragma once

#include <cstdint>
#include <vector>

#include "fpplab/rng.hpp"
#include "fpplab/vec2.hpp"

namespace fpplab {

// A finite realization of a Poisson point process in a rectangular window.
// Immutable after construction; derived lookup structures are built eagerly
// so concurrent reads are safe.
class PointSet {
  public:
    // Poisson(intensity * area) many i.i.d. uniform points, a pure function of
    // (intensity, window, seed).
    static PointSet sample_poisson(double intensity, const Window& window, uint64_t seed);

    // Wraps an explicit list (hand-built scenes, resampling experiments).
    // Validates containment and distinctness.
    static PointSet from_points(std::vector<Vec2> points, const Window& window, double intensity,
                                uint64_t seed);

    const std::vector<Vec2>& points() const { return points_; }
    const Window& window() const { return window_; }
    double intensity() const { return intensity_; }
    uint64_t seed() const { return seed_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    Vec2 operator[](std::size_t i) const { return points_[i]; }

    // Lexicographic rank of site i among all sites; the symbolic perturbation
    // order of the predicates.
    int32_t lex_rank(std::size_t i) const { return lex_rank_[i]; }

    // Index of the site nearest to x (ties by lowest site index).
    int32_t nearest_site(Vec2 x) const;

    // Site indices inside the closed box.
    std::vector<int32_t> sites_in_box(const Box& box) const;

    // Number of sites in the closed box.
    std::size_t count_in_box(const Box& box) const;

  private:
    PointSet(std::vector<Vec2> points, Window window, double intensity, uint64_t seed);
    void build_index();

    std::vector<Vec2> points_;
    Window window_;
    double intensity_ = 0.0;
    uint64_t seed_ = 0;

    std::vector<int32_t> lex_rank_;

    // Uniform bucket grid over the window.
    double cell_ = 1.0;
    int32_t nx_ = 0, ny_ = 0;
    std::vector<std::vector<int32_t>> grid_;

    int32_t cell_of(Vec2 p) const;
};

// The almost-surely unique site whose Voronoi cell contains x (nearest site,
// ties broken by lowest index). Throws empty_domain_error on an empty set.
int32_t locate(const PointSet& pts, Vec2 x);

} // namespace fpplab
