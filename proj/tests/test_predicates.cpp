#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "fpplab/predicates.hpp"
#include "fpplab/rng.hpp"

using namespace fpplab;
using rational = boost::multiprecision::cpp_rational;

namespace {

int rsign(const rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

rational pow_small(const rational& base, int e) {
    rational r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

// Oracle: evaluate orient2d on explicitly perturbed rational points
// p_i + (delta^(2 rank_i + 1), delta^(2 rank_i + 2)) with a concrete tiny
// delta, fully in exact arithmetic. Independent of the cascade in the
// implementation. delta = 2^-64 separates the perturbation orders for the
// small integer coordinates and ranks used below.
int orient_oracle(Vec2 a, int ra, Vec2 b, int rb, Vec2 c, int rc) {
    const rational delta = rational(1) / pow_small(rational(2), 64);
    auto px = [&](Vec2 p, int r) { return rational(p.x) + pow_small(delta, 2 * r + 1); };
    auto py = [&](Vec2 p, int r) { return rational(p.y) + pow_small(delta, 2 * r + 2); };
    const rational det = (px(b, rb) - px(a, ra)) * (py(c, rc) - py(a, ra)) -
                         (py(b, rb) - py(a, ra)) * (px(c, rc) - px(a, ra));
    return rsign(det);
}

// Oracle: in-circle determinant of points lifted to the paraboloid with the
// lift lowered by w_i = delta^(rank_i + 1), evaluated directly.
int incircle_oracle(Vec2 a, int ra, Vec2 b, int rb, Vec2 c, int rc, Vec2 d, int rd) {
    const rational delta = rational(1) / pow_small(rational(2), 64);
    auto w = [&](int r) { return pow_small(delta, r + 1); };
    auto lift = [&](Vec2 p, int r, Vec2 q, int rq) {
        const rational dx = rational(p.x) - rational(q.x);
        const rational dy = rational(p.y) - rational(q.y);
        return dx * dx + dy * dy - w(r) + w(rq);
    };
    const rational adx = rational(a.x) - rational(d.x), ady = rational(a.y) - rational(d.y);
    const rational bdx = rational(b.x) - rational(d.x), bdy = rational(b.y) - rational(d.y);
    const rational cdx = rational(c.x) - rational(d.x), cdy = rational(c.y) - rational(d.y);
    const rational det = lift(a, ra, d, rd) * (bdx * cdy - cdx * bdy) +
                         lift(b, rb, d, rd) * (cdx * ady - adx * cdy) +
                         lift(c, rc, d, rd) * (adx * bdy - bdx * ady);
    return rsign(det);
}

} // namespace

TEST_CASE("orient2d basic signs") {
    CHECK(orient2d_sign({0, 0}, {1, 0}, {0, 1}) == 1);
    CHECK(orient2d_sign({0, 0}, {0, 1}, {1, 0}) == -1);
    CHECK(orient2d_sign({0, 0}, {1, 1}, {2, 2}) == 0);
    CHECK(orient2d_sign({0, 0}, {1e-200, 0}, {0, 1e-200}) == 1);
}

TEST_CASE("incircle basic signs") {
    const Vec2 a{0, 0}, b{1, 0}, c{0, 1};
    CHECK(incircle_sign(a, b, c, {0.5, 0.5}) == 1); // circumcenter itself
    CHECK(incircle_sign(a, b, c, {0.25, 0.25}) == 1);
    CHECK(incircle_sign(a, b, c, {2, 2}) == -1);
    CHECK(incircle_sign(a, b, c, {1, 1}) == 0); // cocircular with the right triangle
}

TEST_CASE("near-degenerate inputs fall through to exact arithmetic") {
    // Points almost collinear: the double filter cannot decide, the exact
    // path must.
    const Vec2 a{0, 0};
    const Vec2 b{1, 1};
    const Vec2 c{0.5 + 3e-18, 0.5}; // actually rounds: pick representable offsets
    const double x = std::nextafter(0.5, 1.0);
    CHECK(orient2d_sign(a, b, {x, 0.5}) == -1);
    CHECK(orient2d_sign(a, b, {std::nextafter(0.5, 0.0), 0.5}) == 1);
    (void)c;
}

TEST_CASE("perturbed orient matches the rational oracle on degenerate grids") {
    Rng rng(7);
    int ties = 0;
    for (int iter = 0; iter < 4000; ++iter) {
        Vec2 p[3];
        int rk[3];
        // small integer grid: collinear triples are frequent
        for (int i = 0; i < 3; ++i)
            p[i] = {static_cast<double>(rng.below(5)), static_cast<double>(rng.below(5))};
        if (p[0] == p[1] || p[0] == p[2] || p[1] == p[2]) continue;
        rk[0] = static_cast<int>(rng.below(8));
        rk[1] = static_cast<int>(rng.below(8));
        rk[2] = static_cast<int>(rng.below(8));
        if (rk[0] == rk[1] || rk[0] == rk[2] || rk[1] == rk[2]) continue;
        if (orient2d_sign(p[0], p[1], p[2]) == 0) ++ties;
        const int got = orient2d_perturbed(p[0], rk[0], p[1], rk[1], p[2], rk[2]);
        const int want = orient_oracle(p[0], rk[0], p[1], rk[1], p[2], rk[2]);
        REQUIRE(got == want);
        REQUIRE(got != 0);
    }
    CHECK(ties > 50); // the grid actually exercised the tie path
}

TEST_CASE("perturbed incircle matches the rational oracle on degenerate grids") {
    Rng rng(11);
    int ties = 0;
    int checked = 0;
    for (int iter = 0; iter < 6000; ++iter) {
        Vec2 p[4];
        int rk[4] = {-1, -1, -1, -1};
        for (int i = 0; i < 4; ++i)
            p[i] = {static_cast<double>(rng.below(4)), static_cast<double>(rng.below(4))};
        bool dup = false;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (p[i] == p[j]) dup = true;
        if (dup) continue;
        for (int i = 0; i < 4; ++i) {
            bool clash;
            do {
                rk[i] = static_cast<int>(rng.below(8));
                clash = false;
                for (int j = 0; j < i; ++j) clash |= (rk[j] == rk[i]);
            } while (clash);
        }
        // incircle is called on genuine triangles only
        if (orient2d_sign(p[0], p[1], p[2]) <= 0) continue;
        ++checked;
        if (incircle_sign(p[0], p[1], p[2], p[3]) == 0) ++ties;
        const int got = incircle_perturbed(p[0], rk[0], p[1], rk[1], p[2], rk[2], p[3], rk[3]);
        const int want = incircle_oracle(p[0], rk[0], p[1], rk[1], p[2], rk[2], p[3], rk[3]);
        REQUIRE(got == want);
        REQUIRE(got != 0);
    }
    CHECK(checked > 500);
    CHECK(ties > 30);
}

TEST_CASE("circumcenter is a function of the vertex set") {
    Rng rng(3);
    for (int iter = 0; iter < 200; ++iter) {
        const Vec2 a{rng.uniform(0, 10), rng.uniform(0, 10)};
        const Vec2 b{rng.uniform(0, 10), rng.uniform(0, 10)};
        const Vec2 c{rng.uniform(0, 10), rng.uniform(0, 10)};
        if (orient2d_sign(a, b, c) == 0) continue;
        const Vec2 c1 = circumcenter(a, b, c);
        const Vec2 c2 = circumcenter(c, a, b);
        const Vec2 c3 = circumcenter(b, c, a);
        CHECK(c1 == c2);
        CHECK(c1 == c3);
        // equidistance sanity
        const double r1 = dist(c1, a), r2 = dist(c1, b), r3 = dist(c1, c);
        CHECK(std::abs(r1 - r2) <= 1e-9 * (1.0 + r1));
        CHECK(std::abs(r1 - r3) <= 1e-9 * (1.0 + r1));
    }
}
