#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crosscut/rational.hpp"

namespace crosscut {

/// Exponents of a monomial a^ea * b^eb * k^ek.
struct Exponents {
  std::uint16_t a = 0;
  std::uint16_t b = 0;
  std::uint16_t k = 0;

  [[nodiscard]] unsigned total() const noexcept { return unsigned{a} + b + k; }
  friend bool operator==(const Exponents&, const Exponents&) = default;
};

/// Renders a monomial like "a^2*b*k^3"; "1" for the empty monomial.
std::string monomial_str(const Exponents& e);

/// Point at which to evaluate a polynomial in (a, b, k).
struct Assignment {
  Rational a;
  Rational b;
  Rational k;
};

/// Sparse polynomial over Q in the variables a, b, k. Terms are kept in
/// graded lexicographic order (a > b > k) with no zero coefficients, so
/// structural equality is polynomial equality.
class MPoly {
 public:
  enum class Var { a, b, k };

  MPoly() = default;
  MPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  MPoly(int constant) : MPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

  static MPoly variable(Var v);
  static MPoly monomial(const Rational& coefficient, Exponents e);

  /// Parses sums and products of integers, a, b, k, powers "^n" and
  /// parentheses, with implicit multiplication: "(a + b)(ak^2 - 2bk + 1)".
  /// Throws std::invalid_argument with the offending position.
  static MPoly parse(std::string_view text);

  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t term_count() const noexcept { return terms_.size(); }
  [[nodiscard]] Rational coefficient(Exponents e) const;
  [[nodiscard]] unsigned total_degree() const;
  [[nodiscard]] unsigned degree(Var v) const;

  /// Terms from the largest monomial down.
  [[nodiscard]] std::vector<std::pair<Exponents, Rational>> terms() const;
  /// Largest monomial under graded lex; requires a nonzero polynomial.
  [[nodiscard]] std::pair<Exponents, Rational> leading_term() const;

  [[nodiscard]] Rational eval(const Assignment& at) const;
  [[nodiscard]] MPoly pow(unsigned exponent) const;

  [[nodiscard]] std::string str() const;

  MPoly& operator+=(const MPoly& rhs);
  MPoly& operator-=(const MPoly& rhs);
  MPoly& operator*=(const MPoly& rhs);
  MPoly& operator*=(const Rational& scalar);

  friend MPoly operator+(MPoly lhs, const MPoly& rhs) { return lhs += rhs; }
  friend MPoly operator-(MPoly lhs, const MPoly& rhs) { return lhs -= rhs; }
  friend MPoly operator*(const MPoly& lhs, const MPoly& rhs);
  friend MPoly operator*(MPoly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend MPoly operator*(const Rational& lhs, MPoly rhs) { return rhs *= lhs; }
  MPoly operator-() const;

  friend bool operator==(const MPoly&, const MPoly&) = default;

 private:
  // Packed key: total degree in the top 16 bits, then a, b, k. Ordering the
  // keys as integers is exactly graded lex.
  using Key = std::uint64_t;
  static Key pack(Exponents e);
  static Exponents unpack(Key key);

  void add_term(Key key, const Rational& coefficient);

  std::map<Key, Rational> terms_;
};

/// Quotient num / den of polynomials. No gcd reduction is done; equality is
/// decided by cross-multiplication.
struct RationalFn {
  MPoly num;
  MPoly den{1};

  RationalFn() = default;
  /// Throws Error{ZeroDenominator} for a zero denominator.
  RationalFn(MPoly numerator, MPoly denominator);
  RationalFn(MPoly numerator) : num(std::move(numerator)) {}  // NOLINT(google-explicit-constructor)

  /// Throws Error{ZeroDenominator} if den vanishes at the point.
  [[nodiscard]] Rational eval(const Assignment& at) const;
  /// num * other.den == other.num * den.
  [[nodiscard]] bool equivalent(const RationalFn& other) const;

  friend RationalFn operator+(const RationalFn& x, const RationalFn& y);
  friend RationalFn operator-(const RationalFn& x, const RationalFn& y);
  friend RationalFn operator*(const RationalFn& x, const RationalFn& y);
  friend RationalFn operator/(const RationalFn& x, const RationalFn& y);
  RationalFn operator-() const { return {-num, den}; }
};

}  // namespace crosscut
