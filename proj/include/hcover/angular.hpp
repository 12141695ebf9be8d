#pragma once

#include <vector>

#include "hcover/geometry.hpp"

namespace hcover {

/// A planar direction with integer components. Any positive rescaling of a
/// rational vector keeps every angular predicate intact, and integer
/// arithmetic avoids the gcd work of rationals in the hot loops.
struct Direction {
  Integer x;
  Integer y;

  bool is_zero() const { return sgn(x) == 0 && sgn(y) == 0; }
};

Direction to_direction(const Point& v);
Point to_point(const Direction& d);

int cross_sign(const Direction& a, const Direction& b);
int dot_sign(const Direction& a, const Direction& b);

/// 0 for angles in [0, pi), 1 for [pi, 2pi).
int half_plane(const Direction& d);

/// Strict counterclockwise order of angles in [0, 2pi) starting at +x.
bool angle_less(const Direction& a, const Direction& b);
bool same_direction(const Direction& a, const Direction& b);

/// k rational directions strictly inside the open counterclockwise arc from
/// `from` to `to` (the whole circle minus `from` when the two coincide).
std::vector<Point> directions_in_arc(const Point& from, const Point& to, int k);

}  // namespace hcover
