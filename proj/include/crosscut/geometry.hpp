#pragma once

#include <array>
#include <span>
#include <string>

#include "crosscut/rational.hpp"

namespace crosscut {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
  friend Point operator+(const Point& p, const Point& q) { return {p.x + q.x, p.y + q.y}; }
  friend Point operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
  friend Point operator*(const Rational& t, const Point& p) { return {t * p.x, t * p.y}; }

  [[nodiscard]] std::string str() const { return "(" + x.str() + ", " + y.str() + ")"; }
};

/// The locus p*x + q*y + r = 0, stored with integer coefficients of gcd 1 and
/// the first nonzero coefficient positive, so equal lines compare equal.
class Line {
 public:
  /// The line x = 0.
  Line() : p_(1), q_(0), r_(0) {}

  /// Throws Error{DomainError} when p = q = 0.
  static Line from_coefficients(const Rational& p, const Rational& q, const Rational& r);

  [[nodiscard]] const Rational& p() const noexcept { return p_; }
  [[nodiscard]] const Rational& q() const noexcept { return q_; }
  [[nodiscard]] const Rational& r() const noexcept { return r_; }

  /// p*x + q*y + r at the point; zero exactly when the point is on the line.
  [[nodiscard]] Rational evaluate(const Point& pt) const { return p_ * pt.x + q_ * pt.y + r_; }
  [[nodiscard]] bool contains(const Point& pt) const { return evaluate(pt).is_zero(); }
  [[nodiscard]] std::string str() const;

  friend bool operator==(const Line&, const Line&) = default;

 private:
  Line(Rational p, Rational q, Rational r) : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)) {}

  Rational p_;
  Rational q_;
  Rational r_;
};

/// x' = m * x + t.
struct AffineMap {
  std::array<Rational, 4> m{1, 0, 0, 1};  // row-major 2x2
  Point t{0, 0};

  static AffineMap identity() { return {}; }

  [[nodiscard]] Point apply(const Point& p) const {
    return {m[0] * p.x + m[1] * p.y + t.x, m[2] * p.x + m[3] * p.y + t.y};
  }
  [[nodiscard]] Rational determinant() const { return m[0] * m[3] - m[1] * m[2]; }
  /// Throws Error{DomainError} for a singular map.
  [[nodiscard]] AffineMap inverse() const;
  /// (*this) after `inner`: x -> this(inner(x)).
  [[nodiscard]] AffineMap compose(const AffineMap& inner) const;

  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// Position of vertex C after sending A, B, D to (0,0), (0,1), (1,0).
/// Always a point of {a >= 0, b >= 0, a + b >= 1}.
class CanonicalParams {
 public:
  /// The parallelogram point (1, 1).
  CanonicalParams() : a_(1), b_(1) {}
  /// Throws Error{DomainError} outside the domain.
  CanonicalParams(Rational a, Rational b);

  static bool in_domain(const Rational& a, const Rational& b);

  [[nodiscard]] const Rational& a() const noexcept { return a_; }
  [[nodiscard]] const Rational& b() const noexcept { return b_; }
  [[nodiscard]] std::string str() const { return "(" + a_.str() + ", " + b_.str() + ")"; }

  friend bool operator==(const CanonicalParams&, const CanonicalParams&) = default;

 private:
  Rational a_;
  Rational b_;
};

enum VertexIndex : int { kA = 0, kB = 1, kC = 2, kD = 3 };

/// A weakly convex quadrilateral ABCD with positive area. Vertices may
/// coincide (the degenerate extremal cases) and either orientation is allowed.
class Quadrilateral {
 public:
  /// Throws Error{NotConvex} or Error{ZeroArea}.
  explicit Quadrilateral(std::array<Point, 4> vertices);

  /// The quadrilateral A(0,0), B(0,1), C(a,b), D(1,0).
  static Quadrilateral canonical(const CanonicalParams& params);

  [[nodiscard]] const std::array<Point, 4>& vertices() const noexcept { return vertices_; }
  [[nodiscard]] const Point& operator[](int i) const { return vertices_[static_cast<std::size_t>(i)]; }
  /// Unsigned area S.
  [[nodiscard]] Rational area() const;
  /// +1 for counterclockwise, -1 for clockwise.
  [[nodiscard]] int orientation() const;

 private:
  std::array<Point, 4> vertices_;
};

/// Result of affine normalization. `to_original` maps the canonical frame
/// onto the input; `rotation` is the cyclic relabeling that was needed, so
/// canonical vertex i is input vertex (i + rotation) mod 4.
struct CanonicalFrame {
  CanonicalParams params;
  AffineMap to_original;
  int rotation = 0;
};

/// Sign of (q - p) x (r - p); +1 for a counterclockwise turn.
int orientation(const Point& p, const Point& q, const Point& r);

/// Shoelace area, positive for counterclockwise order. Needs >= 3 points.
Rational signed_area(std::span<const Point> polygon);

/// Throws Error{CoincidentPoints} if p == q.
Line line_through(const Point& p, const Point& q);

/// Throws Error{ParallelLines} for parallel or identical lines.
Point intersect_lines(const Line& l1, const Line& l2);

/// No two of the four consecutive-triple orientations have opposite nonzero
/// signs.
bool is_weakly_convex(std::span<const Point, 4> quad);

/// Throws Error{DegenerateFrame} if no cyclic relabeling gives distinct,
/// non-collinear A, B, D.
CanonicalFrame canonicalize(const Quadrilateral& quad);

}  // namespace crosscut
