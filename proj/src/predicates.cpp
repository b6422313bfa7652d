#include "fpplab/predicates.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <boost/multiprecision/cpp_int.hpp>

#include "fpplab/errors.hpp"

namespace fpplab {

namespace {

using rational = boost::multiprecision::cpp_rational;

// Forward error bounds for the floating filters (eps = 2^-53).
constexpr double kEps = 1.1102230246251565e-16;
constexpr double kCcwErrBound = (3.0 + 16.0 * kEps) * kEps;
constexpr double kIccErrBound = (10.0 + 96.0 * kEps) * kEps;

int sign_of(const rational& v) {
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}

rational orient2d_exact(Vec2 a, Vec2 b, Vec2 c) {
    const rational ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
    return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
}

rational incircle_exact(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    const rational adx = rational(a.x) - rational(d.x);
    const rational ady = rational(a.y) - rational(d.y);
    const rational bdx = rational(b.x) - rational(d.x);
    const rational bdy = rational(b.y) - rational(d.y);
    const rational cdx = rational(c.x) - rational(d.x);
    const rational cdy = rational(c.y) - rational(d.y);
    const rational alift = adx * adx + ady * ady;
    const rational blift = bdx * bdx + bdy * bdy;
    const rational clift = cdx * cdx + cdy * cdy;
    return alift * (bdx * cdy - cdx * bdy) + blift * (cdx * ady - adx * cdy) +
           clift * (adx * bdy - bdx * ady);
}

} // namespace

int orient2d_sign(Vec2 a, Vec2 b, Vec2 c) {
    const double detleft = (a.x - c.x) * (b.y - c.y);
    const double detright = (a.y - c.y) * (b.x - c.x);
    const double det = detleft - detright;
    const double detsum = std::abs(detleft) + std::abs(detright);
    if (std::abs(det) > kCcwErrBound * detsum) return det > 0.0 ? 1 : -1;
    return sign_of(orient2d_exact(a, b, c));
}

int orient2d_perturbed(Vec2 a, int32_t rank_a, Vec2 b, int32_t rank_b, Vec2 c, int32_t rank_c) {
    const int s = orient2d_sign(a, b, c);
    if (s != 0) return s;
    // Collinear: perturb sites in rank order, x before y. The first-order
    // cofactors for displacing the point in slot p of orient(p, q, r) are
    // (q.y - r.y) for x and (r.x - q.x) for y.
    struct Slot {
        int32_t rank;
        Vec2 q, r;
    };
    std::array<Slot, 3> slots = {Slot{rank_a, b, c}, Slot{rank_b, c, a}, Slot{rank_c, a, b}};
    std::sort(slots.begin(), slots.end(), [](const Slot& u, const Slot& v) { return u.rank < v.rank; });
    for (const Slot& s3 : slots) {
        const rational tx = rational(s3.q.y) - rational(s3.r.y);
        if (tx != 0) return sign_of(tx);
        const rational ty = rational(s3.r.x) - rational(s3.q.x);
        if (ty != 0) return sign_of(ty);
    }
    throw degenerate_input_error("orient2d tie break requires distinct points");
}

int incircle_sign(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    const double adx = a.x - d.x;
    const double ady = a.y - d.y;
    const double bdx = b.x - d.x;
    const double bdy = b.y - d.y;
    const double cdx = c.x - d.x;
    const double cdy = c.y - d.y;

    const double bdxcdy = bdx * cdy;
    const double cdxbdy = cdx * bdy;
    const double alift = adx * adx + ady * ady;
    const double cdxady = cdx * ady;
    const double adxcdy = adx * cdy;
    const double blift = bdx * bdx + bdy * bdy;
    const double adxbdy = adx * bdy;
    const double bdxady = bdx * ady;
    const double clift = cdx * cdx + cdy * cdy;

    const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) +
                       clift * (adxbdy - bdxady);
    const double permanent = (std::abs(bdxcdy) + std::abs(cdxbdy)) * alift +
                             (std::abs(cdxady) + std::abs(adxcdy)) * blift +
                             (std::abs(adxbdy) + std::abs(bdxady)) * clift;
    if (std::abs(det) > kIccErrBound * permanent) return det > 0.0 ? 1 : -1;
    return sign_of(incircle_exact(a, b, c, d));
}

int incircle_perturbed(Vec2 a, int32_t rank_a, Vec2 b, int32_t rank_b, Vec2 c, int32_t rank_c,
                       Vec2 d, int32_t rank_d) {
    const int s = incircle_sign(a, b, c, d);
    if (s != 0) return s;
    // Cocircular: with site i lowered by w_i = delta^(rank_i + 1) on the lift,
    // the determinant picks up
    //   - w_a * orient(d,b,c) + w_b * orient(d,a,c) - w_c * orient(d,a,b)
    //   + w_d * orient(a,b,c),
    // so the smallest rank with a nonzero cofactor decides.
    struct Term {
        int32_t rank;
        int sign;
        Vec2 p0, p1, p2;
    };
    std::array<Term, 4> terms = {Term{rank_a, -1, d, b, c}, Term{rank_b, +1, d, a, c},
                                 Term{rank_c, -1, d, a, b}, Term{rank_d, +1, a, b, c}};
    std::sort(terms.begin(), terms.end(), [](const Term& u, const Term& v) { return u.rank < v.rank; });
    for (const Term& t : terms) {
        const int o = sign_of(orient2d_exact(t.p0, t.p1, t.p2));
        if (o != 0) return t.sign * o;
    }
    throw degenerate_input_error("incircle tie break on four collinear points");
}

Vec2 circumcenter(Vec2 a, Vec2 b, Vec2 c) {
    std::array<Vec2, 3> p = {a, b, c};
    std::sort(p.begin(), p.end(), [](Vec2 u, Vec2 v) { return lex_less(u, v); });
    const Vec2 u = p[1] - p[0];
    const Vec2 v = p[2] - p[0];
    const double den = 2.0 * cross(u, v);
    if (den == 0.0) throw degenerate_input_error("circumcenter of collinear points");
    const double u2 = norm2(u);
    const double v2 = norm2(v);
    const double ox = (v.y * u2 - u.y * v2) / den;
    const double oy = (u.x * v2 - v.x * u2) / den;
    return {p[0].x + ox, p[0].y + oy};
}

double circumradius(Vec2 a, Vec2 b, Vec2 c) {
    std::array<Vec2, 3> p = {a, b, c};
    std::sort(p.begin(), p.end(), [](Vec2 u, Vec2 v) { return lex_less(u, v); });
    return dist(circumcenter(p[0], p[1], p[2]), p[0]);
}

} // namespace fpplab
