#include "crosscut/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_map>

#include "crosscut/errors.hpp"

namespace crosscut {

std::string monomial_str(const Exponents& e) {
  std::string out;
  auto append = [&](char name, unsigned power) {
    if (power == 0) return;
    if (!out.empty()) out += '*';
    out += name;
    if (power > 1) out += "^" + std::to_string(power);
  };
  append('a', e.a);
  append('b', e.b);
  append('k', e.k);
  return out.empty() ? "1" : out;
}

MPoly::Key MPoly::pack(Exponents e) {
  return (Key{e.total()} << 48) | (Key{e.a} << 32) | (Key{e.b} << 16) | Key{e.k};
}

Exponents MPoly::unpack(Key key) {
  return {static_cast<std::uint16_t>(key >> 32), static_cast<std::uint16_t>(key >> 16),
          static_cast<std::uint16_t>(key)};
}

void MPoly::add_term(Key key, const Rational& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly::MPoly(const Rational& constant) { add_term(pack({}), constant); }

MPoly MPoly::variable(Var v) {
  Exponents e;
  switch (v) {
    case Var::a: e.a = 1; break;
    case Var::b: e.b = 1; break;
    case Var::k: e.k = 1; break;
  }
  return monomial(Rational(1), e);
}

MPoly MPoly::monomial(const Rational& coefficient, Exponents e) {
  MPoly p;
  p.add_term(pack(e), coefficient);
  return p;
}

Rational MPoly::coefficient(Exponents e) const {
  auto it = terms_.find(pack(e));
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned MPoly::total_degree() const { return terms_.empty() ? 0 : unpack(terms_.rbegin()->first).total(); }

unsigned MPoly::degree(Var v) const {
  unsigned best = 0;
  for (const auto& [key, c] : terms_) {
    const Exponents e = unpack(key);
    best = std::max<unsigned>(best, v == Var::a ? e.a : (v == Var::b ? e.b : e.k));
  }
  return best;
}

std::vector<std::pair<Exponents, Rational>> MPoly::terms() const {
  std::vector<std::pair<Exponents, Rational>> out;
  out.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) out.emplace_back(unpack(it->first), it->second);
  return out;
}

std::pair<Exponents, Rational> MPoly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
  return {unpack(terms_.rbegin()->first), terms_.rbegin()->second};
}

Rational MPoly::eval(const Assignment& at) const {
  const auto powers = [](const Rational& x, unsigned n) {
    std::vector<Rational> table{Rational(1)};
    table.reserve(n + 1);
    for (unsigned i = 1; i <= n; ++i) table.push_back(table.back() * x);
    return table;
  };
  const auto pa = powers(at.a, degree(Var::a));
  const auto pb = powers(at.b, degree(Var::b));
  const auto pk = powers(at.k, degree(Var::k));
  Rational sum;
  for (const auto& [key, c] : terms_) {
    const Exponents e = unpack(key);
    sum += c * pa[e.a] * pb[e.b] * pk[e.k];
  }
  return sum;
}

MPoly MPoly::pow(unsigned exponent) const {
  MPoly result(1);
  MPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Exponents e = unpack(it->first);
    const Rational& c = it->second;
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = c.abs();
    std::string coeff = magnitude.is_integer() ? magnitude.numerator().get_str() : "(" + magnitude.str() + ")";
    if (e.total() == 0) {
      out += coeff;
    } else {
      if (magnitude != Rational(1)) out += coeff + "*";
      out += monomial_str(e);
    }
  }
  return out;
}

MPoly& MPoly::operator+=(const MPoly& rhs) {
  for (const auto& [key, c] : rhs.terms_) add_term(key, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& rhs) {
  for (const auto& [key, c] : rhs.terms_) add_term(key, -c);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& rhs) { return *this = *this * rhs; }

MPoly& MPoly::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scalar;
  return *this;
}

MPoly operator*(const MPoly& lhs, const MPoly& rhs) {
  // Exponent vectors add component-wise, and so do their packed keys.
  std::unordered_map<MPoly::Key, mpq_class> acc;
  acc.reserve(lhs.terms_.size() * rhs.terms_.size());
  mpq_class product;
  for (const auto& [kl, cl] : lhs.terms_) {
    for (const auto& [kr, cr] : rhs.terms_) {
      mpq_mul(product.get_mpq_t(), cl.gmp().get_mpq_t(), cr.gmp().get_mpq_t());
      acc[kl + kr] += product;
    }
  }
  MPoly out;
  for (auto& [key, c] : acc) {
    if (sgn(c) != 0) out.terms_.emplace(key, Rational(std::move(c)));
  }
  return out;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [key, c] : out.terms_) c = -c;
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MPoly parse_all() {
    MPoly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  MPoly expr() {
    MPoly sum;
    bool negate = false;
    if (peek() == '-' || peek() == '+') negate = text_[pos_++] == '-';
    sum = term();
    if (negate) sum = -sum;
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      if (c == '+') {
        sum += term();
      } else {
        sum -= term();
      }
    }
    return sum;
  }

  // factor (('*')? factor)*
  MPoly term() {
    MPoly product = factor();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        product *= factor();
      } else if (c == '(' || c == 'a' || c == 'b' || c == 'k' || std::isdigit(static_cast<unsigned char>(c))) {
        product *= factor();
      } else {
        return product;
      }
    }
  }

  MPoly factor() {
    MPoly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  MPoly primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      MPoly inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'a' || c == 'b' || c == 'k') {
      ++pos_;
      return MPoly::variable(c == 'a' ? MPoly::Var::a : (c == 'b' ? MPoly::Var::b : MPoly::Var::k));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return MPoly(Rational::parse(text_.substr(start, pos_ - start)));
    }
    fail(c == '\0' ? "unexpected end of input" : std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly MPoly::parse(std::string_view text) { return Parser(text).parse_all(); }

RationalFn::RationalFn(MPoly numerator, MPoly denominator) : num(std::move(numerator)), den(std::move(denominator)) {
  if (den.is_zero()) throw Error(ErrorKind::ZeroDenominator, "rational function with zero denominator");
}

Rational RationalFn::eval(const Assignment& at) const {
  const Rational d = den.eval(at);
  if (d.is_zero()) {
    throw Error(ErrorKind::ZeroDenominator, "denominator vanishes at (" + at.a.str() + ", " + at.b.str() + ", " + at.k.str() + ")");
  }
  return num.eval(at) / d;
}

bool RationalFn::equivalent(const RationalFn& other) const { return num * other.den == other.num * den; }

RationalFn operator+(const RationalFn& x, const RationalFn& y) {
  if (x.den == y.den) return {x.num + y.num, x.den};
  return {x.num * y.den + y.num * x.den, x.den * y.den};
}

RationalFn operator-(const RationalFn& x, const RationalFn& y) { return x + (-y); }

RationalFn operator*(const RationalFn& x, const RationalFn& y) { return {x.num * y.num, x.den * y.den}; }

RationalFn operator/(const RationalFn& x, const RationalFn& y) {
  if (y.num.is_zero()) throw Error(ErrorKind::ZeroDenominator, "division by the zero rational function");
  return {x.num * y.den, x.den * y.num};
}

}  // namespace crosscut
