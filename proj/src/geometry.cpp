#include "crosscut/geometry.hpp"

#include <stdexcept>

#include "crosscut/errors.hpp"

namespace crosscut {

namespace {

Rational cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }

}  // namespace

Line Line::from_coefficients(const Rational& p, const Rational& q, const Rational& r) {
  if (p.is_zero() && q.is_zero()) throw Error(ErrorKind::DomainError, "line with p = q = 0");
  mpz_class lcm = 1;
  for (const Rational* c : {&p, &q, &r}) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c->gmp().get_den_mpz_t());
  std::array<mpz_class, 3> ints;
  const std::array<const Rational*, 3> coeffs{&p, &q, &r};
  mpz_class g = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    ints[i] = coeffs[i]->gmp().get_num() * (lcm / coeffs[i]->gmp().get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  const int lead = sgn(ints[0]) != 0 ? sgn(ints[0]) : sgn(ints[1]);
  if (lead < 0) g = -g;
  for (auto& v : ints) v /= g;
  return Line(Rational(mpq_class(ints[0])), Rational(mpq_class(ints[1])), Rational(mpq_class(ints[2])));
}

std::string Line::str() const {
  return "(" + p_.str() + ")x + (" + q_.str() + ")y + (" + r_.str() + ") = 0";
}

AffineMap AffineMap::inverse() const {
  const Rational det = determinant();
  if (det.is_zero()) throw Error(ErrorKind::DomainError, "singular affine map");
  AffineMap inv;
  inv.m = {m[3] / det, -m[1] / det, -m[2] / det, m[0] / det};
  inv.t = {-(inv.m[0] * t.x + inv.m[1] * t.y), -(inv.m[2] * t.x + inv.m[3] * t.y)};
  return inv;
}

AffineMap AffineMap::compose(const AffineMap& inner) const {
  AffineMap out;
  out.m = {m[0] * inner.m[0] + m[1] * inner.m[2], m[0] * inner.m[1] + m[1] * inner.m[3],
           m[2] * inner.m[0] + m[3] * inner.m[2], m[2] * inner.m[1] + m[3] * inner.m[3]};
  out.t = apply(inner.t);
  return out;
}

bool CanonicalParams::in_domain(const Rational& a, const Rational& b) {
  return a.sign() >= 0 && b.sign() >= 0 && a + b >= Rational(1);
}

CanonicalParams::CanonicalParams(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  if (!in_domain(a_, b_)) {
    throw Error(ErrorKind::DomainError, "(" + a_.str() + ", " + b_.str() + ") is outside a>=0, b>=0, a+b>=1");
  }
}

int orientation(const Point& p, const Point& q, const Point& r) { return cross(q - p, r - p).sign(); }

Rational signed_area(std::span<const Point> polygon) {
  if (polygon.size() < 3) throw std::invalid_argument("signed_area needs at least 3 points");
  Rational twice;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const Point& p = polygon[i];
    const Point& q = polygon[(i + 1) % polygon.size()];
    twice += p.x * q.y - q.x * p.y;
  }
  return twice / Rational(2);
}

Line line_through(const Point& p, const Point& q) {
  if (p == q) throw Error(ErrorKind::CoincidentPoints, "no unique line through " + p.str() + " twice");
  return Line::from_coefficients(p.y - q.y, q.x - p.x, p.x * q.y - q.x * p.y);
}

Point intersect_lines(const Line& l1, const Line& l2) {
  const Rational det = l1.p() * l2.q() - l2.p() * l1.q();
  if (det.is_zero()) throw Error(ErrorKind::ParallelLines, l1.str() + " and " + l2.str());
  return {(l1.q() * l2.r() - l2.q() * l1.r()) / det, (l2.p() * l1.r() - l1.p() * l2.r()) / det};
}

bool is_weakly_convex(std::span<const Point, 4> quad) {
  bool seen_pos = false;
  bool seen_neg = false;
  for (std::size_t i = 0; i < 4; ++i) {
    const int o = orientation(quad[i], quad[(i + 1) % 4], quad[(i + 2) % 4]);
    seen_pos = seen_pos || o > 0;
    seen_neg = seen_neg || o < 0;
  }
  return !(seen_pos && seen_neg);
}

Quadrilateral::Quadrilateral(std::array<Point, 4> vertices) : vertices_(std::move(vertices)) {
  if (!is_weakly_convex(vertices_)) throw Error(ErrorKind::NotConvex, "vertices do not form a convex quadrilateral");
  if (signed_area(vertices_).is_zero()) throw Error(ErrorKind::ZeroArea, "quadrilateral has zero area");
}

Quadrilateral Quadrilateral::canonical(const CanonicalParams& params) {
  return Quadrilateral({Point{0, 0}, Point{0, 1}, Point{params.a(), params.b()}, Point{1, 0}});
}

Rational Quadrilateral::area() const { return signed_area(vertices_).abs(); }

int Quadrilateral::orientation() const { return signed_area(vertices_).sign(); }

CanonicalFrame canonicalize(const Quadrilateral& quad) {
  for (int rot = 0; rot < 4; ++rot) {
    const Point& a = quad[rot];
    const Point& b = quad[(rot + 1) % 4];
    const Point& c = quad[(rot + 2) % 4];
    const Point& d = quad[(rot + 3) % 4];
    if (orientation(a, b, d) == 0) continue;
    AffineMap to_original;
    to_original.m = {d.x - a.x, b.x - a.x, d.y - a.y, b.y - a.y};
    to_original.t = a;
    const Point image = to_original.inverse().apply(c);
    if (!CanonicalParams::in_domain(image.x, image.y)) {
      throw Error(ErrorKind::NotConvex, "vertex C maps to " + image.str() + " outside the canonical domain");
    }
    return CanonicalFrame{CanonicalParams(image.x, image.y), to_original, rot};
  }
  throw Error(ErrorKind::DegenerateFrame, "no relabeling gives distinct, non-collinear A, B, D");
}

}  // namespace crosscut
