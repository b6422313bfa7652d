#include "fpplab/pointset.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fpplab/errors.hpp"

namespace fpplab {

PointSet PointSet::sample_poisson(double intensity, const Window& window, uint64_t seed) {
    if (!(intensity >= 0.0) || !std::isfinite(intensity))
        throw invalid_parameter_error("intensity must be finite and nonnegative");
    if (!(window.area() > 0.0) || !std::isfinite(window.area()))
        throw invalid_parameter_error("window must have positive finite area");
    Rng rng(seed);
    const uint64_t n = poisson_count(rng, intensity * window.area());
    std::vector<Vec2> pts;
    pts.reserve(n);
    for (uint64_t i = 0; i < n; ++i) {
        const double x = rng.uniform(window.xmin, window.xmax);
        const double y = rng.uniform(window.ymin, window.ymax);
        pts.push_back({x, y});
    }
    return PointSet(std::move(pts), window, intensity, seed);
}

PointSet PointSet::from_points(std::vector<Vec2> points, const Window& window, double intensity,
                               uint64_t seed) {
    for (const Vec2& p : points)
        if (!window.contains(p)) throw invalid_parameter_error("point outside window");
    return PointSet(std::move(points), window, intensity, seed);
}

PointSet::PointSet(std::vector<Vec2> points, Window window, double intensity, uint64_t seed)
    : points_(std::move(points)), window_(window), intensity_(intensity), seed_(seed) {
    build_index();
}

void PointSet::build_index() {
    const std::size_t n = points_.size();

    // Lexicographic ranks; also the distinctness check.
    std::vector<int32_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int32_t i, int32_t j) {
        if (points_[i] == points_[j]) return i < j;
        return lex_less(points_[i], points_[j]);
    });
    lex_rank_.resize(n);
    for (std::size_t r = 0; r < n; ++r) lex_rank_[order[r]] = static_cast<int32_t>(r);
    for (std::size_t r = 1; r < n; ++r)
        if (points_[order[r - 1]] == points_[order[r]])
            throw degenerate_input_error("coincident points in point set");

    // Bucket grid sized for ~1 point per cell.
    const double target = std::sqrt(window_.area() / std::max<std::size_t>(n, 1));
    cell_ = std::clamp(target, 1e-9, std::max(window_.width(), window_.height()));
    nx_ = std::max<int32_t>(1, static_cast<int32_t>(std::ceil(window_.width() / cell_)));
    ny_ = std::max<int32_t>(1, static_cast<int32_t>(std::ceil(window_.height() / cell_)));
    grid_.assign(static_cast<std::size_t>(nx_) * ny_, {});
    for (std::size_t i = 0; i < n; ++i) grid_[cell_of(points_[i])].push_back(static_cast<int32_t>(i));
}

int32_t PointSet::cell_of(Vec2 p) const {
    int32_t cx = static_cast<int32_t>(std::floor((p.x - window_.xmin) / cell_));
    int32_t cy = static_cast<int32_t>(std::floor((p.y - window_.ymin) / cell_));
    cx = std::clamp(cx, 0, nx_ - 1);
    cy = std::clamp(cy, 0, ny_ - 1);
    return cy * nx_ + cx;
}

int32_t PointSet::nearest_site(Vec2 x) const {
    if (points_.empty()) throw empty_domain_error("nearest_site on empty point set");
    const int32_t cx = std::clamp(static_cast<int32_t>(std::floor((x.x - window_.xmin) / cell_)), 0, nx_ - 1);
    const int32_t cy = std::clamp(static_cast<int32_t>(std::floor((x.y - window_.ymin) / cell_)), 0, ny_ - 1);

    int32_t best = -1;
    double best_d2 = std::numeric_limits<double>::infinity();
    auto consider = [&](int32_t idx) {
        const double d2 = dist2(points_[idx], x);
        if (d2 < best_d2 || (d2 == best_d2 && idx < best)) {
            best_d2 = d2;
            best = idx;
        }
    };

    const int32_t rmax = std::max(nx_, ny_);
    for (int32_t r = 0;; ++r) {
        bool any_cell = false;
        for (int32_t gy = cy - r; gy <= cy + r; ++gy) {
            if (gy < 0 || gy >= ny_) continue;
            for (int32_t gx = cx - r; gx <= cx + r; ++gx) {
                if (gx < 0 || gx >= nx_) continue;
                if (std::max(std::abs(gx - cx), std::abs(gy - cy)) != r) continue; // ring only
                any_cell = true;
                for (int32_t idx : grid_[static_cast<std::size_t>(gy) * nx_ + gx]) consider(idx);
            }
        }
        // Cells at ring distance r+1 are at least r*cell away from x.
        if (best >= 0 && best_d2 <= static_cast<double>(r) * cell_ * static_cast<double>(r) * cell_)
            break;
        if (r > rmax && !any_cell) break;
    }
    return best;
}

std::vector<int32_t> PointSet::sites_in_box(const Box& box) const {
    std::vector<int32_t> out;
    if (points_.empty()) return out;
    const int32_t x0 = std::clamp(static_cast<int32_t>(std::floor((box.xmin - window_.xmin) / cell_)), 0, nx_ - 1);
    const int32_t x1 = std::clamp(static_cast<int32_t>(std::floor((box.xmax - window_.xmin) / cell_)), 0, nx_ - 1);
    const int32_t y0 = std::clamp(static_cast<int32_t>(std::floor((box.ymin - window_.ymin) / cell_)), 0, ny_ - 1);
    const int32_t y1 = std::clamp(static_cast<int32_t>(std::floor((box.ymax - window_.ymin) / cell_)), 0, ny_ - 1);
    for (int32_t gy = y0; gy <= y1; ++gy)
        for (int32_t gx = x0; gx <= x1; ++gx)
            for (int32_t idx : grid_[static_cast<std::size_t>(gy) * nx_ + gx])
                if (box.contains(points_[idx])) out.push_back(idx);
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t PointSet::count_in_box(const Box& box) const {
    return sites_in_box(box).size();
}

int32_t locate(const PointSet& pts, Vec2 x) {
    if (pts.empty()) throw empty_domain_error("locate on empty point set");
    return pts.nearest_site(x);
}

} // namespace fpplab
