#include "fpplab/delaunay.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fpplab/errors.hpp"

namespace fpplab {

namespace {

constexpr int32_t GHOST = -1;

inline uint64_t edge_key(int32_t u, int32_t v) {
    if (u > v) std::swap(u, v);
    return (static_cast<uint64_t>(static_cast<uint32_t>(u)) << 32) | static_cast<uint32_t>(v);
}

// Hilbert curve index on a 2^16 grid; gives the cache-friendly insertion
// order that keeps the walk-based point location O(1) amortized.
uint64_t hilbert_key(uint32_t x, uint32_t y) {
    uint64_t d = 0;
    for (uint32_t s = 1u << 15; s > 0; s >>= 1) {
        const uint32_t rx = (x & s) ? 1 : 0;
        const uint32_t ry = (y & s) ? 1 : 0;
        d += static_cast<uint64_t>(s) * s * ((3 * rx) ^ ry);
        // rotate quadrant
        if (ry == 0) {
            if (rx == 1) {
                x = s - 1 - x;
                y = s - 1 - y;
            }
            std::swap(x, y);
        }
    }
    return d;
}

class Builder {
  public:
    Builder(const PointSet& pts)
        : p_(pts.points()), n_(static_cast<int32_t>(pts.size())) {
        rank_.resize(n_);
        for (int32_t i = 0; i < n_; ++i) rank_[i] = pts.lex_rank(i);
        window_ = pts.window();
    }

    void run() {
        if (n_ < 3) throw degenerate_input_error("delaunay requires at least 3 points");
        make_order();
        const int32_t third = first_noncollinear();
        if (third < 0) throw degenerate_input_error("delaunay requires non-collinear points");
        init_triangle(third);
        for (int32_t k = 0; k < n_; ++k) {
            const int32_t pi = order_[k];
            if (used_[pi]) continue;
            insert(pi);
        }
    }

    struct Raw {
        std::vector<std::array<int32_t, 3>> tris;
    };
    Raw take() {
        Raw out;
        for (std::size_t t = 0; t < tri_.size(); ++t) {
            if (dead_[t] || is_ghost(static_cast<int32_t>(t))) continue;
            out.tris.push_back({tri_[t].v[0], tri_[t].v[1], tri_[t].v[2]});
        }
        return out;
    }

  private:
    struct BTri {
        std::array<int32_t, 3> v;
        std::array<int32_t, 3> n; // n[i] is across the edge opposite v[i]
    };

    const std::vector<Vec2>& p_;
    int32_t n_;
    std::vector<int32_t> rank_;
    Window window_;
    std::vector<int32_t> order_;
    std::vector<bool> used_;
    std::vector<BTri> tri_;
    std::vector<uint8_t> dead_;
    std::vector<int32_t> free_;
    int32_t hint_ = 0;
    // reused per-insertion scratch (stamped visit marks keep inserts O(cavity))
    std::vector<uint32_t> stamp_;
    uint32_t cur_stamp_ = 0;
    std::vector<int32_t> cavity_, stack_;

    bool is_ghost(int32_t t) const {
        return tri_[t].v[0] == GHOST || tri_[t].v[1] == GHOST || tri_[t].v[2] == GHOST;
    }

    int orient_p(int32_t a, int32_t b, Vec2 x, int32_t xr) const {
        return orient2d_perturbed(p_[a], rank_[a], p_[b], rank_[b], x, xr);
    }

    void make_order() {
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        const double w = std::max(window_.width(), 1e-300);
        const double h = std::max(window_.height(), 1e-300);
        std::vector<uint64_t> key(n_);
        for (int32_t i = 0; i < n_; ++i) {
            const double fx = std::clamp((p_[i].x - window_.xmin) / w, 0.0, 1.0);
            const double fy = std::clamp((p_[i].y - window_.ymin) / h, 0.0, 1.0);
            key[i] = hilbert_key(static_cast<uint32_t>(fx * 65535.0), static_cast<uint32_t>(fy * 65535.0));
        }
        std::sort(order_.begin(), order_.end(), [&](int32_t i, int32_t j) {
            return key[i] != key[j] ? key[i] < key[j] : i < j;
        });
        used_.assign(n_, false);
    }

    int32_t first_noncollinear() const {
        const int32_t a = order_[0];
        const int32_t b = order_[1];
        for (int32_t k = 2; k < n_; ++k) {
            if (orient2d_sign(p_[a], p_[b], p_[order_[k]]) != 0) return k;
        }
        return -1;
    }

    int32_t new_tri(int32_t a, int32_t b, int32_t c) {
        int32_t id;
        if (!free_.empty()) {
            id = free_.back();
            free_.pop_back();
            tri_[id] = BTri{{a, b, c}, {-1, -1, -1}};
            dead_[id] = 0;
        } else {
            id = static_cast<int32_t>(tri_.size());
            tri_.push_back(BTri{{a, b, c}, {-1, -1, -1}});
            dead_.push_back(0);
            stamp_.push_back(0);
        }
        return id;
    }

    int slot_of(int32_t t, int32_t v) const {
        for (int s = 0; s < 3; ++s)
            if (tri_[t].v[s] == v) return s;
        return -1;
    }

    // Slot whose opposite edge is {u, v}.
    int slot_opposite(int32_t t, int32_t u, int32_t v) const {
        for (int s = 0; s < 3; ++s) {
            const int32_t w = tri_[t].v[s];
            if (w != u && w != v) {
                if ((tri_[t].v[(s + 1) % 3] == u && tri_[t].v[(s + 2) % 3] == v) ||
                    (tri_[t].v[(s + 1) % 3] == v && tri_[t].v[(s + 2) % 3] == u))
                    return s;
            }
        }
        return -1;
    }

    void init_triangle(int32_t third_pos) {
        int32_t a = order_[0];
        int32_t b = order_[1];
        int32_t c = order_[third_pos];
        if (orient2d_sign(p_[a], p_[b], p_[c]) < 0) std::swap(b, c);
        const int32_t t = new_tri(a, b, c);
        const int32_t gab = new_tri(b, a, GHOST);
        const int32_t gbc = new_tri(c, b, GHOST);
        const int32_t gca = new_tri(a, c, GHOST);
        tri_[t].n = {gbc, gca, gab};
        tri_[gab].n = {gca, gbc, t};
        tri_[gbc].n = {gab, gca, t};
        tri_[gca].n = {gbc, gab, t};
        used_[a] = used_[b] = used_[c] = true;
        hint_ = t;
    }

    // Walks toward x; returns a triangle whose (perturbed) interior holds x,
    // or a ghost when x is outside the current hull.
    int32_t locate(Vec2 x, int32_t xr) const {
        int32_t t = hint_;
        if (dead_[t]) t = 0;
        std::size_t steps = 0;
        const std::size_t cap = 4 * tri_.size() + 64;
        while (true) {
            if (is_ghost(t)) return t;
            const auto& v = tri_[t].v;
            int32_t next = -1;
            for (int s = 0; s < 3; ++s) {
                const int32_t u = v[(s + 1) % 3];
                const int32_t w = v[(s + 2) % 3];
                if (orient_p(u, w, x, xr) < 0) {
                    next = tri_[t].n[s];
                    break;
                }
            }
            if (next < 0) return t;
            t = next;
            if (++steps > cap) return exhaustive_locate(x, xr);
        }
    }

    int32_t exhaustive_locate(Vec2 x, int32_t xr) const {
        for (std::size_t t = 0; t < tri_.size(); ++t) {
            if (dead_[t] || is_ghost(static_cast<int32_t>(t))) continue;
            const auto& v = tri_[t].v;
            bool inside = true;
            for (int s = 0; s < 3 && inside; ++s)
                inside = orient_p(v[(s + 1) % 3], v[(s + 2) % 3], x, xr) > 0;
            if (inside) return static_cast<int32_t>(t);
        }
        for (std::size_t t = 0; t < tri_.size(); ++t)
            if (!dead_[t] && is_ghost(static_cast<int32_t>(t)) &&
                in_cavity(static_cast<int32_t>(t), x, xr))
                return static_cast<int32_t>(t);
        throw degenerate_input_error("point location failed");
    }

    bool in_cavity(int32_t t, Vec2 x, int32_t xr) const {
        const auto& v = tri_[t].v;
        if (!is_ghost(t)) {
            return incircle_perturbed(p_[v[0]], rank_[v[0]], p_[v[1]], rank_[v[1]], p_[v[2]],
                                      rank_[v[2]], x, xr) > 0;
        }
        // Ghost (b, a, GHOST) covers the open halfplane strictly beyond the
        // hull edge a->b, plus the open segment itself (hull edge split).
        int ga = 0;
        while (tri_[t].v[ga] == GHOST) ++ga;
        int gb = (ga + 1) % 3;
        if (tri_[t].v[gb] == GHOST) gb = (gb + 1) % 3;
        // stored order is (v, u, GHOST) up to rotation with v at ga, u at gb
        const Vec2 pv = p_[tri_[t].v[ga]];
        const Vec2 pu = p_[tri_[t].v[gb]];
        const int s = orient2d_sign(pv, pu, x);
        if (s != 0) return s > 0;
        return dot(x - pu, x - pv) < 0.0;
    }

    void insert(int32_t pi) {
        const Vec2 x = p_[pi];
        const int32_t xr = rank_[pi];
        int32_t seed = locate(x, xr);
        if (!in_cavity(seed, x, xr)) {
            // Degenerate landing (e.g. collinear-beyond ghost): scan outward.
            seed = -1;
            for (std::size_t t = 0; t < tri_.size() && seed < 0; ++t)
                if (!dead_[t] && in_cavity(static_cast<int32_t>(t), x, xr))
                    seed = static_cast<int32_t>(t);
            if (seed < 0) throw degenerate_input_error("insertion cavity is empty");
        }

        // Grow the cavity.
        ++cur_stamp_;
        cavity_.clear();
        stack_.assign(1, seed);
        stamp_[seed] = cur_stamp_;
        while (!stack_.empty()) {
            const int32_t t = stack_.back();
            stack_.pop_back();
            cavity_.push_back(t);
            for (int s = 0; s < 3; ++s) {
                const int32_t nb = tri_[t].n[s];
                if (nb < 0 || stamp_[nb] == cur_stamp_) continue;
                if (in_cavity(nb, x, xr)) {
                    stamp_[nb] = cur_stamp_;
                    stack_.push_back(nb);
                }
            }
        }

        // Boundary fan: directed edges (u, v) seen ccw from inside the cavity.
        struct Bnd {
            int32_t u, v, outside;
        };
        std::vector<Bnd> bnd;
        bnd.reserve(cavity_.size() + 2);
        for (const int32_t t : cavity_) {
            for (int s = 0; s < 3; ++s) {
                const int32_t nb = tri_[t].n[s];
                if (nb >= 0 && stamp_[nb] == cur_stamp_) continue;
                bnd.push_back({tri_[t].v[(s + 1) % 3], tri_[t].v[(s + 2) % 3], nb});
            }
        }

        for (const int32_t t : cavity_) {
            dead_[t] = 1;
            free_.push_back(t);
        }

        std::vector<int32_t> created(bnd.size());
        for (std::size_t i = 0; i < bnd.size(); ++i) {
            int32_t a = bnd[i].u, b = bnd[i].v, c = pi;
            // keep any ghost in slot 2
            if (a == GHOST) {
                a = b;
                b = c;
                c = GHOST;
            } else if (b == GHOST) {
                b = a;
                a = c;
                c = GHOST;
            }
            created[i] = new_tri(a, b, c);
        }
        // Wire each new triangle: across (u, v) to the old outside triangle,
        // and to its fan neighbors along (v, pi) and (pi, u).
        for (std::size_t i = 0; i < bnd.size(); ++i) {
            const int32_t t = created[i];
            const int32_t u = bnd[i].u;
            const int32_t v = bnd[i].v;
            const int32_t outside = bnd[i].outside;
            const int so = slot_opposite(t, u, v);
            tri_[t].n[so] = outside;
            if (outside >= 0) {
                const int bs = slot_opposite(outside, u, v);
                tri_[outside].n[bs] = t;
            }
            for (std::size_t j = 0; j < bnd.size(); ++j) {
                if (j == i) continue;
                if (bnd[j].u == v) tri_[t].n[slot_opposite(t, v, pi)] = created[j];
                if (bnd[j].v == u) tri_[t].n[slot_opposite(t, pi, u)] = created[j];
            }
        }
        used_[pi] = true;
        for (std::size_t i = 0; i < bnd.size(); ++i) {
            if (!is_ghost(created[i])) {
                hint_ = created[i];
                return;
            }
        }
        hint_ = created.empty() ? 0 : created[0];
    }
};

} // namespace

int32_t Triangulation::edge_between(int32_t u, int32_t v) const {
    const auto it = edge_map_.find(edge_key(u, v));
    return it == edge_map_.end() ? -1 : it->second;
}

std::vector<int32_t> Triangulation::incident_triangles_ccw(int32_t v) const {
    // Start from any incident triangle, rotate clockwise to the fan start
    // (hull or full loop), then collect counterclockwise.
    int32_t start_tri = -1;
    for (const int32_t e : vertex_edges_[v]) {
        if (edges_[e].tri[0] >= 0) {
            start_tri = edges_[e].tri[0];
            break;
        }
    }
    std::vector<int32_t> fan;
    if (start_tri < 0) return fan;

    auto next_ccw = [&](int32_t t) -> int32_t {
        const auto& tv = triangles_[t].v;
        int s = 0;
        while (tv[s] != v) ++s;
        const int32_t q = tv[(s + 2) % 3];
        const int32_t e = edge_between(v, q);
        const auto& er = edges_[e];
        return er.tri[0] == t ? er.tri[1] : er.tri[0];
    };
    auto next_cw = [&](int32_t t) -> int32_t {
        const auto& tv = triangles_[t].v;
        int s = 0;
        while (tv[s] != v) ++s;
        const int32_t pvx = tv[(s + 1) % 3];
        const int32_t e = edge_between(v, pvx);
        const auto& er = edges_[e];
        return er.tri[0] == t ? er.tri[1] : er.tri[0];
    };

    int32_t t = start_tri;
    // rewind clockwise
    for (std::size_t guard = 0; guard <= triangles_.size(); ++guard) {
        const int32_t prev = next_cw(t);
        if (prev < 0 || prev == start_tri) {
            if (prev == start_tri) t = start_tri; // interior vertex, closed fan
            break;
        }
        t = prev;
    }
    const int32_t first = t;
    for (std::size_t guard = 0; guard <= triangles_.size(); ++guard) {
        fan.push_back(t);
        const int32_t nxt = next_ccw(t);
        if (nxt < 0 || nxt == first) break;
        t = nxt;
    }
    return fan;
}

Triangulation delaunay(const PointSet& pts) {
    Builder b(pts);
    b.run();
    auto raw = b.take();

    Triangulation out;
    out.points_ = pts.points();
    out.window_ = pts.window();
    out.lex_rank_.resize(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) out.lex_rank_[i] = pts.lex_rank(i);

    // Canonical triangle order: rotate each ccw triple so the smallest vertex
    // leads, then sort.
    for (auto& t : raw.tris) {
        int s = 0;
        if (t[1] < t[s]) s = 1;
        if (t[2] < t[s]) s = 2;
        t = {t[s], t[(s + 1) % 3], t[(s + 2) % 3]};
    }
    std::sort(raw.tris.begin(), raw.tris.end());

    out.triangles_.reserve(raw.tris.size());
    for (const auto& t : raw.tris) {
        Triangulation::Triangle tr;
        tr.v = t;
        tr.center = circumcenter(out.points_[t[0]], out.points_[t[1]], out.points_[t[2]]);
        tr.radius = dist(tr.center, out.points_[t[0]]);
        out.triangles_.push_back(tr);
    }

    // Edge records with adjacency.
    std::unordered_map<uint64_t, int32_t> emap;
    emap.reserve(raw.tris.size() * 2);
    std::vector<Triangulation::Edge> edges;
    for (std::size_t ti = 0; ti < out.triangles_.size(); ++ti) {
        const auto& t = out.triangles_[ti].v;
        for (int s = 0; s < 3; ++s) {
            int32_t u = t[s], v = t[(s + 1) % 3];
            if (u > v) std::swap(u, v);
            const uint64_t k = edge_key(u, v);
            auto it = emap.find(k);
            if (it == emap.end()) {
                emap.emplace(k, static_cast<int32_t>(edges.size()));
                edges.push_back({u, v, {static_cast<int32_t>(ti), -1}});
            } else {
                edges[it->second].tri[1] = static_cast<int32_t>(ti);
            }
        }
    }
    std::vector<int32_t> perm(edges.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int32_t i, int32_t j) {
        return std::pair(edges[i].a, edges[i].b) < std::pair(edges[j].a, edges[j].b);
    });
    out.edges_.reserve(edges.size());
    for (const int32_t i : perm) out.edges_.push_back(edges[i]);
    out.edge_map_.reserve(out.edges_.size());
    for (std::size_t e = 0; e < out.edges_.size(); ++e)
        out.edge_map_.emplace(edge_key(out.edges_[e].a, out.edges_[e].b), static_cast<int32_t>(e));

    out.vertex_edges_.assign(pts.size(), {});
    out.hull_vertex_.assign(pts.size(), false);
    for (std::size_t e = 0; e < out.edges_.size(); ++e) {
        out.vertex_edges_[out.edges_[e].a].push_back(static_cast<int32_t>(e));
        out.vertex_edges_[out.edges_[e].b].push_back(static_cast<int32_t>(e));
        if (out.edges_[e].tri[1] < 0) {
            out.hull_vertex_[out.edges_[e].a] = true;
            out.hull_vertex_[out.edges_[e].b] = true;
        }
    }
    return out;
}

} // namespace fpplab
