#include "hcover/angular.hpp"

namespace hcover {

Direction to_direction(const Point& v) {
  if (v.dim() != 2) throw DimensionError("directions are planar");
  const Scalar& x = v[0];
  const Scalar& y = v[1];
  Direction d{x.get_num() * y.get_den(), y.get_num() * x.get_den()};
  Integer g = gcd(d.x, d.y);
  if (g > 1) {
    d.x /= g;
    d.y /= g;
  }
  return d;
}

Point to_point(const Direction& d) { return Point{Scalar(d.x), Scalar(d.y)}; }

int cross_sign(const Direction& a, const Direction& b) {
  return cmp(Integer(a.x * b.y), Integer(a.y * b.x));
}

int dot_sign(const Direction& a, const Direction& b) {
  Integer v = a.x * b.x + a.y * b.y;
  return sgn(v);
}

int half_plane(const Direction& d) {
  const int sy = sgn(d.y);
  return (sy > 0 || (sy == 0 && sgn(d.x) > 0)) ? 0 : 1;
}

bool angle_less(const Direction& a, const Direction& b) {
  const int ha = half_plane(a);
  const int hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return cross_sign(a, b) > 0;
}

bool same_direction(const Direction& a, const Direction& b) {
  return cross_sign(a, b) == 0 && dot_sign(a, b) > 0;
}

std::vector<Point> directions_in_arc(const Point& from, const Point& to, int k) {
  std::vector<Point> out;
  if (k <= 0) return out;
  if (from.is_zero() || to.is_zero()) throw DomainError("zero direction");
  if (cross_sign(to_direction(from), to_direction(to)) > 0) {
    for (int i = 1; i <= k; ++i) {
      Scalar s = make_scalar(i, k + 1);
      out.push_back((1 - s) * from + s * to);
    }
    return out;
  }
  // Arc of at least a half turn: step a quarter turn and recurse.
  Point quarter{-from[1], from[0]};
  out.push_back(quarter);
  auto rest = directions_in_arc(quarter, to, k - 1);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

}  // namespace hcover
