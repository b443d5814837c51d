#pragma once

namespace forman::geom {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

/// Sign of the signed area of (a, b, c): +1 counter-clockwise, -1 clockwise,
/// 0 collinear. Exact: floating-point filter with a rational fallback.
int orient2d(Point2 a, Point2 b, Point2 c);

/// +1 if d lies strictly inside the circle through a, b, c (given
/// counter-clockwise), -1 if strictly outside, 0 if cocircular. Exact.
int incircle(Point2 a, Point2 b, Point2 c, Point2 d);

}  // namespace forman::geom
