#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hcover/errors.hpp"
#include "hcover/scalar.hpp"

namespace hcover {

/// A point (or vector) in R^d with exact rational coordinates.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Scalar> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<Scalar> coords) : coords_(coords) {}

  std::size_t dim() const { return coords_.size(); }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  Scalar& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Scalar>& coords() const { return coords_; }

  bool is_zero() const;

  friend bool operator==(const Point& a, const Point& b) { return a.coords_ == b.coords_; }
  /// Lexicographic order on coordinates; used for every deterministic tie-break.
  friend std::strong_ordering operator<=>(const Point& a, const Point& b);

  Point& operator+=(const Point& o);
  Point& operator-=(const Point& o);
  Point& operator*=(const Scalar& s);

 private:
  std::vector<Scalar> coords_;
};

Point operator+(Point a, const Point& b);
Point operator-(Point a, const Point& b);
Point operator*(const Scalar& s, Point a);
Scalar dot(const Point& a, const Point& b);
Scalar squared_norm(const Point& a);
std::string to_string(const Point& p);

/// {x : normal . x = offset}, kept in canonical form: the first nonzero
/// normal coordinate is 1.
class Hyperplane {
 public:
  Hyperplane(Point normal, Scalar offset);

  const Point& normal() const { return normal_; }
  const Scalar& offset() const { return offset_; }
  std::size_t dim() const { return normal_.dim(); }

  /// normal . x - offset. Its sign says which side of the hyperplane x is on.
  Scalar evaluate(const Point& x) const;
  int side(const Point& x) const { return sign(evaluate(x)); }

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;

 private:
  Point normal_;
  Scalar offset_;
};

/// The planar line a*x + b*y = c.
Hyperplane make_line(const Scalar& a, const Scalar& b, const Scalar& c);
/// Line through two distinct planar points.
Hyperplane line_through(const Point& p, const Point& q);
/// Planar direction vector along a line.
Point line_direction(const Hyperplane& line);
bool parallel(const Hyperplane& a, const Hyperplane& b);
/// Intersection of two planar lines; empty when parallel or coincident.
std::optional<Point> intersect(const Hyperplane& a, const Hyperplane& b);

enum class Containment { Interior, Boundary, Outside };

inline bool closed_contains(Containment c) { return c != Containment::Outside; }
const char* to_string(Containment c);

/// Sign of det[[p_0, 1], ..., [p_d, 1]] for d+1 points in R^d.
/// Counterclockwise planar triples give +1.
int orientation(std::span<const Point> points);
int orient2d(const Point& a, const Point& b, const Point& c);

/// Closed containment of q in the simplex spanned by d+1 vertices in R^d.
/// Affinely dependent vertex sets never report Interior.
Containment point_in_simplex(const Point& q, std::span<const Point> vertices);

Point project_onto_hyperplane(const Point& q, const Hyperplane& h);

/// Whether the closed segment [a, b] meets the closed ray {q + t dir : t >= 0}.
/// Planar; q must not lie on the segment.
bool segment_crosses_ray(const Point& a, const Point& b, const Point& q, const Point& dir);

struct Violation {
  enum class Kind { Duplicate, AffinelyDependent, Parallel, Coincident, Concurrent };
  Kind kind;
  std::vector<std::size_t> indices;

  friend bool operator==(const Violation&, const Violation&) = default;
};

const char* to_string(Violation::Kind kind);

/// Duplicate pairs and affinely dependent (d+1)-tuples. Empty iff the points
/// are in general position.
std::vector<Violation> general_position_report(std::span<const Point> points);

/// Coincident or parallel pairs and concurrent triples of planar lines.
std::vector<Violation> lines_general_position_report(std::span<const Hyperplane> lines);

std::vector<std::vector<std::size_t>> violation_indices(const std::vector<Violation>& v);

namespace linalg {

using Matrix = std::vector<std::vector<Scalar>>;

Scalar determinant(Matrix m);
std::size_t rank(Matrix m);

/// Solves A x = b for a full-column-rank A (rows >= cols). Returns empty when
/// the system is inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& a, const std::vector<Scalar>& b);

}  // namespace linalg

void require_same_dim(const Point& a, const Point& b);

}  // namespace hcover
