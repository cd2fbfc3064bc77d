#include "crosscut/crosscut.hpp"

#include <string>

#include "crosscut/errors.hpp"

namespace crosscut {

namespace {

bool properly_cross(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
  return orientation(p1, p2, q1) * orientation(p1, p2, q2) < 0 &&
         orientation(q1, q2, p1) * orientation(q1, q2, p2) < 0;
}

bool weakly_inside(std::span<const Point, 4> quad, int quad_orientation, const Point& p) {
  for (std::size_t i = 0; i < 4; ++i) {
    const Point& u = quad[i];
    const Point& v = quad[(i + 1) % 4];
    if (u == v) continue;
    if (orientation(u, v, p) * quad_orientation < 0) return false;
  }
  return true;
}

// For k = 0 the lines are the sides and each inner vertex is the shared
// vertex of two adjacent sides, which stays well defined when those sides
// are collinear (boundary of the canonical domain).
std::array<Point, 4> inner_of(const std::array<Point, 4>& vertices, const CevianLines& lines, const KParam& k) {
  if (k.value().is_zero()) return vertices;
  return inner_vertices(lines);
}

CrosscutFigure build_figure(const std::array<Point, 4>& vertices, const KParam& k) {
  CrosscutFigure fig;
  fig.vertices = vertices;
  fig.division_points = division_points(vertices, k);
  fig.lines = cevian_lines(vertices, k);
  fig.inner = inner_of(vertices, fig.lines, k);
  const Rational signed_big = signed_area(vertices);
  if (signed_big.is_zero()) throw Error(ErrorKind::ZeroArea, "quadrilateral has zero area");
  fig.S = signed_big.abs();
  fig.s = signed_area(fig.inner).abs();
  fig.ratio = fig.s / fig.S;
  fig.inner_inside = true;
  for (const Point& p : fig.inner) fig.inner_inside = fig.inner_inside && weakly_inside(vertices, signed_big.sign(), p);
  const auto& in = fig.inner;
  fig.inner_simple = !properly_cross(in[0], in[1], in[2], in[3]) && !properly_cross(in[1], in[2], in[3], in[0]);
  return fig;
}

Point closed_form_point(const Rational& x_num, const Rational& y_num, const Rational& den, std::string_view name) {
  if (den.is_zero()) throw Error(ErrorKind::ZeroDenominator, "denominator of " + std::string(name) + " vanishes");
  return {x_num / den, y_num / den};
}

}  // namespace

KParam KParam::from_segment_ratio(const Rational& k) {
  if (k.sign() <= 0) throw Error(ErrorKind::DomainError, "segment ratio needs k > 0, got " + k.str());
  return KParam(k);
}

KParam KParam::from_any(const Rational& k) {
  if (k <= Rational(-1)) throw Error(ErrorKind::DomainError, "k must exceed -1, got " + k.str());
  return KParam(k);
}

std::array<Point, 4> division_points(std::span<const Point, 4> vertices, const KParam& k) {
  const Rational t = k.fraction();
  std::array<Point, 4> out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = vertices[i] + t * (vertices[(i + 1) % 4] - vertices[i]);
  return out;
}

std::array<Point, 4> division_points(const Quadrilateral& quad, const KParam& k) {
  return division_points(quad.vertices(), k);
}

CevianLines cevian_lines(std::span<const Point, 4> vertices, const KParam& k) {
  const auto div = division_points(vertices, k);
  auto line = [&](std::size_t i) {
    try {
      return line_through(vertices[i], div[(i + 1) % 4]);
    } catch (const Error& e) {
      throw Error(ErrorKind::CoincidentPoints, "line " + std::string(kLineNames[i]) + ": vertex equals division point");
    }
  };
  return {line(0), line(1), line(2), line(3)};
}

CevianLines cevian_lines(const Quadrilateral& quad, const KParam& k) { return cevian_lines(quad.vertices(), k); }

std::array<Point, 4> inner_vertices(const CevianLines& lines) {
  std::array<Point, 4> out;
  for (std::size_t i = 0; i < 4; ++i) {
    const std::size_t prev = (i + 3) % 4;
    try {
      out[i] = intersect_lines(lines[prev], lines[i]);
    } catch (const Error&) {
      throw Error(ErrorKind::ParallelLines, std::string(kInnerNames[i]) + " undefined: " +
                                                std::string(kLineNames[prev]) + " and " +
                                                std::string(kLineNames[i]) + " are parallel");
    }
  }
  return out;
}

std::array<Point, 4> closed_form_inner_vertices(const CanonicalParams& params, const KParam& kp) {
  const Rational& a = params.a();
  const Rational& b = params.b();
  const Rational& k = kp.value();
  const Rational k2 = k * k;
  const Rational one(1);

  const Rational den_k = a * k2 + b * k2 + b * k + k + one;
  const Rational den_l = a * k2 + b * k2 + a * k + k + a;
  const Rational den_m = a * k2 + b * k2 + Rational(2) * a * k + b * k - k + a + b - one;
  const Rational den_n = a * k2 + b * k2 + a * k + Rational(2) * b * k - k + b;

  return {
      closed_form_point(a * k2, k * (b * k + one), den_k, "K"),
      closed_form_point(a * k * (a + k), (b * k + one) * (a + k), den_l, "L"),
      closed_form_point(a * k2 + a * a * k + a * k + b * k - k + a * a + a * b - a,
                        b * (k2 + a * k + a + b - one), den_m, "M"),
      closed_form_point(a * k2 + a * k + b * k - k + b, b * k2, den_n, "N"),
  };
}

CrosscutFigure canonical_figure(const CanonicalParams& params, const KParam& k) {
  return build_figure(Quadrilateral::canonical(params).vertices(), k);
}

Rational canonical_ratio(const CanonicalParams& params, const KParam& k) {
  const std::array<Point, 4> vertices{Point{0, 0}, Point{0, 1}, Point{params.a(), params.b()}, Point{1, 0}};
  const auto inner = inner_of(vertices, cevian_lines(vertices, k), k);
  return signed_area(inner).abs() / signed_area(vertices).abs();
}

Rational closed_form_ratio(const CanonicalParams& params, const KParam& k) {
  const auto inner = closed_form_inner_vertices(params, k);
  return signed_area(inner).abs() * Rational(2) / (params.a() + params.b());
}

CrosscutFigure crosscut_figure(const Quadrilateral& quad, const KParam& k) {
  const CanonicalFrame frame = canonicalize(quad);
  const CrosscutFigure canon = canonical_figure(frame.params, k);
  const AffineMap& to_input = frame.to_original;
  auto pull_back = [&](const std::array<Point, 4>& pts) {
    std::array<Point, 4> out;
    for (int j = 0; j < 4; ++j) out[static_cast<std::size_t>(j)] = to_input.apply(pts[static_cast<std::size_t>((j - frame.rotation + 4) % 4)]);
    return out;
  };

  CrosscutFigure fig;
  fig.vertices = quad.vertices();
  fig.division_points = pull_back(canon.division_points);
  for (std::size_t i = 0; i < 4; ++i) fig.lines[i] = line_through(fig.vertices[i], fig.division_points[(i + 1) % 4]);
  fig.inner = pull_back(canon.inner);
  fig.S = quad.area();
  fig.s = signed_area(fig.inner).abs();
  fig.ratio = canon.ratio;
  fig.inner_inside = canon.inner_inside;
  fig.inner_simple = canon.inner_simple;
  return fig;
}

RatioBounds theorem_bounds(const Rational& k) {
  if (k.sign() <= 0) throw Error(ErrorKind::DomainError, "bounds need k > 0, got " + k.str());
  const Rational one(1);
  return {one / ((k + one) * (k * k + k + one)), one / (Rational(2) * k * k + Rational(2) * k + one)};
}

bool on_upper_locus(const CanonicalParams& params, const Rational& k) {
  const Rational& a = params.a();
  const Rational& b = params.b();
  const Rational one(1);
  const Rational first = b * k + one - a - a * k;
  const Rational second = b + b * k - one + a * k - Rational(2) * k;
  return first.is_zero() || second.is_zero();
}

bool on_lower_locus(const CanonicalParams& params) {
  return (params.a() == Rational(1) && params.b().is_zero()) || (params.a().is_zero() && params.b() == Rational(1));
}

}  // namespace crosscut
