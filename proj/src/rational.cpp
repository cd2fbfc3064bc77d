#include "crosscut/rational.hpp"

#include <cctype>
#include <cmath>
#include <functional>
#include <ostream>
#include <stdexcept>

namespace crosscut {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("not a rational number: '" + std::string(whole) + "'");
  mpz_class value(std::string(s), 10);
  return negative ? mpz_class(-value) : value;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a rational number: '" + std::string(whole) + "'");
  };
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) return fail();
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) return fail();
    if (!int_part.empty() && !all_digits(int_part)) return fail();
    if (!frac_part.empty() && !all_digits(frac_part)) return fail();
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) return fail();
    digits = std::string(s);
  }
  mpq_class value{mpz_class(digits, 10)};
  if (exponent > 0) {
    value *= pow10(static_cast<unsigned long>(exponent));
  } else if (exponent < 0) {
    value /= pow10(static_cast<unsigned long>(-exponent));
  }
  value.canonicalize();
  return Rational(negative ? mpq_class(-value) : value);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty rational number");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(trim(s.substr(0, slash)), text);
    mpz_class den = parse_integer(trim(s.substr(slash + 1)), text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
  }
  return parse_decimal(s, text);
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite coordinate");
  return Rational(mpq_class(value));
}

bool Rational::is_integer() const noexcept { return value_.get_den() == 1; }

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::reciprocal() const { return Rational(1) / *this; }

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::size_t Rational::hash() const noexcept {
  // Low limbs are enough to spread values; equal values hash equally.
  const auto limb = [](const mpz_class& z) -> std::size_t {
    const std::size_t low = mpz_size(z.get_mpz_t()) == 0 ? 0 : mpz_getlimbn(z.get_mpz_t(), 0);
    return low ^ static_cast<std::size_t>(sgn(z) + 1);
  };
  const std::size_t h = limb(value_.get_num());
  return h ^ (limb(value_.get_den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) return pow(base.reciprocal(), -exponent);
  mpq_class result(1);
  mpz_pow_ui(mpq_numref(result.get_mpq_t()), base.gmp().get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(mpq_denref(result.get_mpq_t()), base.gmp().get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(result);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace crosscut
