#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "crosscut/geometry.hpp"
#include "crosscut/rational.hpp"

namespace crosscut {

/// Side-division parameter k. Division point X1 on side X -> next(X) is
/// X + t * (next(X) - X) with t = k / (k + 1).
class KParam {
 public:
  /// The segment-ratio setup |XX1| / |X1 next(X)| = k; requires k > 0.
  static KParam from_segment_ratio(const Rational& k);
  /// The vector setup; any k > -1.
  static KParam from_any(const Rational& k);

  [[nodiscard]] const Rational& value() const noexcept { return k_; }
  [[nodiscard]] Rational fraction() const { return k_ / (k_ + Rational(1)); }
  [[nodiscard]] bool positive() const noexcept { return k_.sign() > 0; }

 private:
  explicit KParam(Rational k) : k_(std::move(k)) {}
  Rational k_;
};

/// Lines in construction order: AB1, BC1, CD1, DA1.
using CevianLines = std::array<Line, 4>;

inline constexpr std::array<std::string_view, 4> kLineNames{"AB1", "BC1", "CD1", "DA1"};
inline constexpr std::array<std::string_view, 4> kInnerNames{"K", "L", "M", "N"};

struct CrosscutFigure {
  std::array<Point, 4> vertices;         // A, B, C, D
  std::array<Point, 4> division_points;  // A1, B1, C1, D1
  CevianLines lines;
  std::array<Point, 4> inner;            // K, L, M, N
  Rational S;                            // area of ABCD
  Rational s;                            // unsigned shoelace area of KLMN
  Rational ratio;                        // s / S
  bool inner_inside = false;             // K, L, M, N all weakly inside ABCD
  bool inner_simple = false;             // KLMN has no crossing opposite sides
};

/// X1 = X + t (next(X) - X) for X = A, B, C, D.
std::array<Point, 4> division_points(std::span<const Point, 4> vertices, const KParam& k);
std::array<Point, 4> division_points(const Quadrilateral& quad, const KParam& k);

/// Throws Error{CoincidentPoints} if a vertex equals its target division point.
CevianLines cevian_lines(std::span<const Point, 4> vertices, const KParam& k);
CevianLines cevian_lines(const Quadrilateral& quad, const KParam& k);

/// K = AB1 ∩ DA1, L = AB1 ∩ BC1, M = BC1 ∩ CD1, N = CD1 ∩ DA1.
/// Throws Error{ParallelLines} naming the failing pair.
std::array<Point, 4> inner_vertices(const CevianLines& lines);

/// Closed-form K, L, M, N in the canonical frame.
/// Throws Error{ZeroDenominator} naming the vertex whose denominator vanished.
std::array<Point, 4> closed_form_inner_vertices(const CanonicalParams& params, const KParam& k);

/// Full construction. Computed in the canonical frame and mapped back to
/// the input coordinates; `ratio` is the canonical-frame s/S.
CrosscutFigure crosscut_figure(const Quadrilateral& quad, const KParam& k);

/// The construction directly on A(0,0), B(0,1), C(a,b), D(1,0). For k = 0
/// the inner vertices are A, B, C, D themselves.
CrosscutFigure canonical_figure(const CanonicalParams& params, const KParam& k);

/// Ratio only, on the canonical quadrilateral.
Rational canonical_ratio(const CanonicalParams& params, const KParam& k);

/// Same ratio from the closed-form K, L, M, N.
Rational closed_form_ratio(const CanonicalParams& params, const KParam& k);

struct RatioBounds {
  Rational lower;  // 1 / ((k+1)(k^2+k+1))
  Rational upper;  // 1 / (2k^2+2k+1)
};

/// Sharp bounds on s/S for k > 0; Error{DomainError} otherwise.
RatioBounds theorem_bounds(const Rational& k);

/// The two lines in (a, b) on which s/S reaches the upper bound:
/// b*k + 1 - a - a*k = 0 and b + b*k - 1 + a*k - 2k = 0.
bool on_upper_locus(const CanonicalParams& params, const Rational& k);

/// (a, b) is (1, 0) or (0, 1): the two coinciding-vertex configurations.
bool on_lower_locus(const CanonicalParams& params);

}  // namespace crosscut
