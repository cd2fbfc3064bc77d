#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "crosscut/mpoly.hpp"

namespace crosscut::poly {

/// Numerator of s/S over the canonical frame, transcribed term by term.
MPoly build_P();

/// The five factors of the denominator of s/S, in display order:
/// (a+b), (ak^2+ak+a+bk^2+k), (-k+ak^2+2ak-1+a+b+bk^2+bk),
/// (bk^2+bk+k+1+ak^2), (bk^2+2bk+b-k+ak^2+ak).
std::array<MPoly, 5> q_factors();

/// Expanded product of q_factors().
MPoly build_Q();

/// Factors of (k+1)(k^2+k+1)P - Q beyond k^3 (a+b)(1+2k+2k^2).
MPoly lower_factor_f1();
MPoly lower_factor_f2();

/// bk+1-a-ak and b+bk-1+ak-2k; their zero sets are the upper-bound lines.
std::array<MPoly, 2> upper_linear_forms();

/// Point with rational-function coordinates.
struct SymbolicPoint {
  RationalFn x;
  RationalFn y;
};

/// The construction carried out over Q(a, b, k) on A(0,0), B(0,1), C(a,b),
/// D(1,0).
struct SymbolicConstruction {
  std::array<SymbolicPoint, 4> division_points;  // A1, B1, C1, D1
  std::array<std::array<MPoly, 3>, 4> lines;     // (p, q, r) of AB1, BC1, CD1, DA1
  std::array<SymbolicPoint, 4> inner;            // K, L, M, N
  RationalFn twice_area_AML;                     // signed doubled triangle areas
  RationalFn twice_area_ANM;
  RationalFn twice_area_ANK;
  RationalFn ratio;                              // s / S
};

SymbolicConstruction derive_construction_symbolic();

/// s / S as a rational function of (a, b, k).
RationalFn derive_ratio_symbolic();

/// Outcome of comparing two expanded polynomials.
struct IdentityVerdict {
  std::string name;
  bool passed = false;
  MPoly difference;               // lhs - rhs; zero when passed
  std::string first_difference;   // leading monomial of the difference, empty when passed
  std::size_t lhs_terms = 0;
  std::size_t rhs_terms = 0;
};

/// An identity lhs == rhs, with cheap pointwise evaluators for screening
/// before the full expansion.
struct PolyIdentity {
  std::string name;
  std::function<MPoly()> lhs;
  std::function<MPoly()> rhs;
  std::function<Rational(const Assignment&)> lhs_value;
  std::function<Rational(const Assignment&)> rhs_value;
};

IdentityVerdict compare(const std::string& name, const MPoly& lhs, const MPoly& rhs);
IdentityVerdict check(const PolyIdentity& identity);

/// Evaluates both sides at `count` seeded random rational points. Returns
/// the first point where they differ, if any.
struct ScreenResult {
  std::string name;
  std::size_t points = 0;
  bool passed = true;
  std::string counterexample;
};
ScreenResult screen(const PolyIdentity& identity, std::size_t count, std::uint64_t seed);

/// num(s/S) * Q == P * den(s/S).
PolyIdentity ratio_identity();
/// (k+1)(k^2+k+1)P - Q == k^3 (a+b)(1+2k+2k^2) F1 F2.
PolyIdentity lower_identity();
/// Q - (2k^2+2k+1)P == k^4 (a+b) (bk+1-a-ak)^2 (b+bk-1+ak-2k)^2.
PolyIdentity upper_identity();
/// The two positivity rewrites of Q's factors, the two rewrites of F1 and
/// F2, and a^2+2ab-2a+1 == (a-1)^2+2ab.
std::vector<PolyIdentity> rewrite_identities();

IdentityVerdict check_ratio_identity();
IdentityVerdict check_lower_identity();
IdentityVerdict check_upper_identity();
/// One verdict per rewrite; see rewrite_identities().
std::vector<IdentityVerdict> check_rewrites();

/// Throws Error{IdentityFailed} carrying the first differing monomial.
void require(const IdentityVerdict& verdict);

}  // namespace crosscut::poly
