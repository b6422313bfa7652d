#pragma once

#include <cstdint>

#include "fpplab/vec2.hpp"

namespace fpplab {

// Robust geometric predicates: a floating-point filter with a forward error
// bound decides the generic case, and an exact rational evaluation settles
// anything near zero. Exact ties are broken by a symbolic perturbation
// ordered by the lexicographic rank of the sites (rank 0 = lexicographically
// smallest (x, y) in the scene, perturbed the most), so every predicate
// answer is consistent with one fixed infinitesimal displacement of the
// input and the triangulation is unique even for cocircular inputs.

// Sign of the counterclockwise test for (a, b, c): +1 ccw, -1 cw, 0 collinear.
int orient2d_sign(Vec2 a, Vec2 b, Vec2 c);

// Never returns 0 for distinct points: exact ties fall through to the
// perturbation cascade keyed on the ranks.
int orient2d_perturbed(Vec2 a, int32_t rank_a, Vec2 b, int32_t rank_b, Vec2 c, int32_t rank_c);

// Sign of the in-circumcircle test: +1 when d lies strictly inside the circle
// through (a, b, c) taken in counterclockwise order, -1 outside, 0 cocircular.
int incircle_sign(Vec2 a, Vec2 b, Vec2 c, Vec2 d);

// In-circle with the symbolic tie break: cocircular quadruples resolve by
// lowering site i on the paraboloid lift by delta^(rank_i + 1). Never 0 for
// distinct points spanning a nondegenerate triangle.
int incircle_perturbed(Vec2 a, int32_t rank_a, Vec2 b, int32_t rank_b, Vec2 c, int32_t rank_c,
                       Vec2 d, int32_t rank_d);

// Circumcenter/circumradius of a nondegenerate triangle. Inputs are sorted
// lexicographically before evaluation so the result is a function of the
// vertex set only (bit-stable across scenes that share the triangle).
Vec2 circumcenter(Vec2 a, Vec2 b, Vec2 c);
double circumradius(Vec2 a, Vec2 b, Vec2 c);

} // namespace fpplab
