#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace crosscut {

/// Exact arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  /// Parses "p/q", an integer, or a decimal such as "-0.25" or "1.5e-3".
  /// Decimals are scaled by powers of ten exactly. Throws
  /// std::invalid_argument on malformed text or a zero denominator.
  static Rational parse(std::string_view text);

  /// The exact binary value of a finite double.
  static Rational from_double(double value);

  [[nodiscard]] const mpq_class& gmp() const noexcept { return value_; }
  [[nodiscard]] int sign() const noexcept { return sgn(value_); }
  [[nodiscard]] bool is_zero() const noexcept { return sign() == 0; }
  [[nodiscard]] bool is_integer() const noexcept;
  [[nodiscard]] Rational abs() const;
  [[nodiscard]] Rational reciprocal() const;
  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
  [[nodiscard]] double to_double() const { return value_.get_d(); }

  /// Canonical "p/q" text; integers are written "n/1".
  [[nodiscard]] std::string str() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);  // throws std::domain_error on 0

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) { return cmp(lhs.value_, rhs.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  [[nodiscard]] std::size_t hash() const noexcept;

 private:
  mpq_class value_;
};

/// Integer power, negative exponents allowed for nonzero bases.
Rational pow(const Rational& base, int exponent);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace crosscut

template <>
struct std::hash<crosscut::Rational> {
  std::size_t operator()(const crosscut::Rational& r) const noexcept { return r.hash(); }
};
