#include "crosscut/identities.hpp"

#include <memory>

#include "crosscut/errors.hpp"
#include "crosscut/rng.hpp"

namespace crosscut::poly {

namespace {

// Numerator of s/S as displayed, one source line per display line.
constexpr std::string_view kPText =
    "-2a^2k^2b + 6ab^4k^3 - 4ak^2b + 12a^2k^3b^2 + 9ab^4k^5"
    "+ 16a^2k^4b^2 + 19a^2k^4b^3 + 9a^2b^3k^2 + 8a^3k^2b^2 + 17a^3k^3b^2 + 2a^2k^6b"
    "+ 2a^4k^6b + 8a^3k^5b - b^2a - 3b^2k^2 + a^2k + bk^2 + ak^2 - 8ab^3k^5 + 9a^4k^4b"
    "+ 2b^3ak - 4a^2k^5b + 6a^3kb + 3b^4k^3 - 5a^2kb + 3ab^4k^2 + 14a^3k^5b^2"
    "+ 18a^2k^5b^3 - 4a^2k^5b^2 + 6a^3k^6b^2 + 15a^2k^3b^3 + 11ab^4k^4 + ab^2k^2 - 9ak^3b^2"
    "+ 12a^3k^4b + 4ab^3k^4 + 8a^3k^2b + a^4k^3 + 3a^4k^2 - 4a^2k^6b^2 - 3a^3k^2 + 8a^4k^3b"
    "+ a^3k^3 - 2a^2k^3 - 5a^3k^4 + 6a^2k^6b^3 + 2b^2k^3 - a^2b - 2a^3k + 2ab^4k^6"
    "+ 17a^3k^4b^2 + 5a^4k^5b + a^4k^4 + a^5k^5 + 4a^3k^3b + 12ab^3k^3 + 4ab^3k^2"
    "+ 7a^2k^2b^2 - 2b^2ka + 7a^2b^2k + 8ak^4b + 8ak^5b^2 - 5b^3k^3 + b^3k^4 + 4b^3k^5"
    "- 2bk^4 + 2b^2k^4 + 6a^2k^4 - 4b^2k^5 - 2ak^4 + 4a^2k^5 + a^4k + 2a^2b^2 + a^3b"
    "+ 2ak^6b^2 - 11ak^4b^2 - 3a^2k^3b - 17a^2k^4b - b^2k + 2a^4k^6 + 4a^4k^5 - 8a^3k^5"
    "+ 2a^5k^4 + 2b^4k^6 - b^4k^4 - a^2k^2 + a^5k^3 + a^3b^2k - 2a^3k^6 + 2a^2b^3k"
    "- 2b^3k^6 + 2a^4k^2b + b^4ak + b^3a + b^5k^3 + 2b^4k^2 + b^3k + 2b^5k^4 + b^5k^5";

constexpr std::array<std::string_view, 5> kQFactorText{
    "a + b",
    "ak^2 + ak + a + bk^2 + k",
    "-k + ak^2 + 2ak - 1 + a + b + bk^2 + bk",
    "bk^2 + bk + k + 1 + ak^2",
    "bk^2 + 2bk + b - k + ak^2 + ak",
};

constexpr std::string_view kF1Text = "ak^2b + ak^2 + 2ak + a + b - 1 - k + b^2k - bk^2 + b^2k^2";
constexpr std::string_view kF2Text = "a^2k^2 + a^2k + ba - 2ak + k + 2bak - ak^2 + ak^2b + bk^2";

// Homogeneous coordinates keep every intermediate polynomial.
struct HPoint {
  MPoly x, y, w;
};
using HLine = HPoint;

HPoint cross(const HPoint& u, const HPoint& v) {
  return {u.y * v.w - u.w * v.y, u.w * v.x - u.x * v.w, u.x * v.y - u.y * v.x};
}

SymbolicPoint affine(const HPoint& p) { return {RationalFn(p.x, p.w), RationalFn(p.y, p.w)}; }

// Doubled signed area of triangle (origin, p, q), positive when counterclockwise.
RationalFn twice_area_from_origin(const HPoint& p, const HPoint& q) {
  return {p.x * q.y - p.y * q.x, p.w * q.w};
}

MPoly a_var() { return MPoly::variable(MPoly::Var::a); }
MPoly b_var() { return MPoly::variable(MPoly::Var::b); }
MPoly k_var() { return MPoly::variable(MPoly::Var::k); }

// The scalar factor multiplying F1 F2 in the lower identity.
MPoly lower_prefactor() { return MPoly::parse("k^3 (a + b)(1 + 2k + 2k^2)"); }
MPoly lower_multiplier() { return MPoly::parse("(k + 1)(k^2 + k + 1)"); }
MPoly upper_multiplier() { return MPoly::parse("2k^2 + 2k + 1"); }

const MPoly& cached_P() {
  static const MPoly p = MPoly::parse(kPText);
  return p;
}

const std::array<MPoly, 5>& cached_q_factors() {
  static const std::array<MPoly, 5> factors = q_factors();
  return factors;
}

Rational eval_q_factored(const Assignment& at) {
  Rational product(1);
  for (const MPoly& f : cached_q_factors()) product *= f.eval(at);
  return product;
}

PolyIdentity from_texts(std::string name, std::string lhs, std::string rhs) {
  auto lhs_poly = [lhs] { return MPoly::parse(lhs); };
  auto rhs_poly = [rhs] { return MPoly::parse(rhs); };
  return {std::move(name), lhs_poly, rhs_poly,
          [lhs_poly](const Assignment& at) { return lhs_poly().eval(at); },
          [rhs_poly](const Assignment& at) { return rhs_poly().eval(at); }};
}

}  // namespace

MPoly build_P() { return cached_P(); }

std::array<MPoly, 5> q_factors() {
  std::array<MPoly, 5> out;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = MPoly::parse(kQFactorText[i]);
  return out;
}

MPoly build_Q() {
  MPoly q(1);
  for (const MPoly& f : q_factors()) q *= f;
  return q;
}

MPoly lower_factor_f1() { return MPoly::parse(kF1Text); }
MPoly lower_factor_f2() { return MPoly::parse(kF2Text); }

std::array<MPoly, 2> upper_linear_forms() {
  return {MPoly::parse("bk + 1 - a - ak"), MPoly::parse("b + bk - 1 + ak - 2k")};
}

SymbolicConstruction derive_construction_symbolic() {
  const MPoly a = a_var();
  const MPoly b = b_var();
  const MPoly k = k_var();
  const MPoly zero;
  const MPoly one(1);

  const std::array<HPoint, 4> vertices{HPoint{zero, zero, one}, HPoint{zero, one, one}, HPoint{a, b, one},
                                       HPoint{one, zero, one}};
  // X1 = X + k/(k+1) (next - X) = (X + k next) / (k + 1).
  std::array<HPoint, 4> division;
  for (std::size_t i = 0; i < 4; ++i) {
    const HPoint& x = vertices[i];
    const HPoint& next = vertices[(i + 1) % 4];
    division[i] = {x.x + k * next.x, x.y + k * next.y, one + k};
  }
  std::array<HLine, 4> lines;
  for (std::size_t i = 0; i < 4; ++i) lines[i] = cross(vertices[i], division[(i + 1) % 4]);
  std::array<HPoint, 4> inner;
  for (std::size_t i = 0; i < 4; ++i) inner[i] = cross(lines[(i + 3) % 4], lines[i]);

  SymbolicConstruction out;
  for (std::size_t i = 0; i < 4; ++i) {
    out.division_points[i] = affine(division[i]);
    out.lines[i] = {lines[i].x, lines[i].y, lines[i].w};
    out.inner[i] = affine(inner[i]);
  }
  const HPoint& K = inner[0];
  const HPoint& L = inner[1];
  const HPoint& M = inner[2];
  const HPoint& N = inner[3];
  // A is the origin and lies on AB1 with K and L, so the fan of KLMN from A
  // reduces to triangles AML, ANM and ANK.
  out.twice_area_AML = twice_area_from_origin(M, L);
  out.twice_area_ANM = twice_area_from_origin(N, M);
  out.twice_area_ANK = twice_area_from_origin(N, K);
  // Triangles AML, ANM, ANK are counterclockwise for k > 0, so these are
  // the unsigned areas; S = (a + b) / 2.
  const RationalFn twice_s = out.twice_area_ANM + out.twice_area_AML - out.twice_area_ANK;
  out.ratio = RationalFn(twice_s.num, twice_s.den * (a + b));
  return out;
}

RationalFn derive_ratio_symbolic() { return derive_construction_symbolic().ratio; }

IdentityVerdict compare(const std::string& name, const MPoly& lhs, const MPoly& rhs) {
  IdentityVerdict v;
  v.name = name;
  v.lhs_terms = lhs.term_count();
  v.rhs_terms = rhs.term_count();
  v.difference = lhs - rhs;
  v.passed = v.difference.is_zero();
  if (!v.passed) {
    const auto [mono, coeff] = v.difference.leading_term();
    (void)coeff;
    v.first_difference = monomial_str(mono) + ": lhs " + lhs.coefficient(mono).str() + ", rhs " + rhs.coefficient(mono).str();
  }
  return v;
}

IdentityVerdict check(const PolyIdentity& identity) { return compare(identity.name, identity.lhs(), identity.rhs()); }

ScreenResult screen(const PolyIdentity& identity, std::size_t count, std::uint64_t seed) {
  DeterministicRng rng(seed);
  ScreenResult result{identity.name, 0, true, {}};
  for (std::size_t i = 0; i < count; ++i) {
    const Assignment at{rng.rational(-5, 5, 17), rng.rational(-5, 5, 17), rng.rational(-5, 5, 17)};
    ++result.points;
    if (identity.lhs_value(at) != identity.rhs_value(at)) {
      result.passed = false;
      result.counterexample = "(" + at.a.str() + ", " + at.b.str() + ", " + at.k.str() + ")";
      break;
    }
  }
  return result;
}

PolyIdentity ratio_identity() {
  // The symbolic ratio is derived once and shared by all evaluators.
  auto ratio = std::make_shared<RationalFn>(derive_ratio_symbolic());
  return {
      "s/S = P/Q",
      [ratio] { return ratio->num * build_Q(); },
      [ratio] { return build_P() * ratio->den; },
      [ratio](const Assignment& at) { return ratio->num.eval(at) * eval_q_factored(at); },
      [ratio](const Assignment& at) { return cached_P().eval(at) * ratio->den.eval(at); },
  };
}

PolyIdentity lower_identity() {
  return {
      "(k+1)(k^2+k+1)P - Q = k^3(a+b)(1+2k+2k^2)F1F2",
      [] { return lower_multiplier() * build_P() - build_Q(); },
      [] { return lower_prefactor() * lower_factor_f1() * lower_factor_f2(); },
      [](const Assignment& at) { return lower_multiplier().eval(at) * cached_P().eval(at) - eval_q_factored(at); },
      [](const Assignment& at) {
        return lower_prefactor().eval(at) * lower_factor_f1().eval(at) * lower_factor_f2().eval(at);
      },
  };
}

PolyIdentity upper_identity() {
  auto rhs = [] {
    const auto forms = upper_linear_forms();
    return MPoly::parse("k^4 (a + b)") * forms[0].pow(2) * forms[1].pow(2);
  };
  return {
      "Q - (2k^2+2k+1)P = k^4(a+b)(bk+1-a-ak)^2(b+bk-1+ak-2k)^2",
      [] { return build_Q() - upper_multiplier() * build_P(); },
      rhs,
      [](const Assignment& at) { return eval_q_factored(at) - upper_multiplier().eval(at) * cached_P().eval(at); },
      [](const Assignment& at) {
        const auto forms = upper_linear_forms();
        return MPoly::parse("k^4 (a + b)").eval(at) * pow(forms[0].eval(at), 2) * pow(forms[1].eval(at), 2);
      },
  };
}

std::vector<PolyIdentity> rewrite_identities() {
  return {
      from_texts("Q factor 3 rewrite", std::string(kQFactorText[2]), "(a + b - 1) + k(a + b - 1) + ak + k^2(a + b)"),
      from_texts("Q factor 5 rewrite", std::string(kQFactorText[4]), "k(a + b - 1) + bk + b + k^2(a + b)"),
      from_texts("F1 rewrite", std::string(kF1Text), "(a + b - 1)(k^2b + 1) + ak^2 + (2a + b^2 - 1)k"),
      from_texts("F2 rewrite", std::string(kF2Text), "ak^2(a + b - 1) + ab + bk^2 + (a^2 + 2ab - 2a + 1)k"),
      from_texts("square completion", "a^2 + 2ab - 2a + 1", "(a - 1)^2 + 2ab"),
  };
}

IdentityVerdict check_ratio_identity() { return check(ratio_identity()); }
IdentityVerdict check_lower_identity() { return check(lower_identity()); }
IdentityVerdict check_upper_identity() { return check(upper_identity()); }

std::vector<IdentityVerdict> check_rewrites() {
  std::vector<IdentityVerdict> out;
  for (const auto& identity : rewrite_identities()) out.push_back(check(identity));
  return out;
}

void require(const IdentityVerdict& verdict) {
  if (!verdict.passed) throw Error(ErrorKind::IdentityFailed, verdict.name + " differs at " + verdict.first_difference);
}

}  // namespace crosscut::poly
