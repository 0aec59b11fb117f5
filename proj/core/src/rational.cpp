#include "hallfrac/rational.hpp"

#include <ostream>

#include <boost/integer/common_factor_rt.hpp>

#include "hallfrac/error.hpp"

namespace hallfrac {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Fraction::Fraction(BigInt p, BigInt q) {
  if (q == 0) throw Error(ErrorKind::ZeroDenominator, "denominator is zero");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  if (p == 0) {
    num_ = 0;
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(p, q);
  if (g < 0) g = -g;
  num_ = p / g;
  den_ = q / g;
}

BigInt Fraction::floor() const {
  // cpp_int division truncates toward zero
  BigInt quot = num_ / den_;
  if (num_ < 0 && quot * den_ != num_) quot -= 1;
  return quot;
}

double Fraction::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

Fraction Fraction::operator-() const { return Fraction(-num_, den_, Reduced{}); }

Fraction operator+(const Fraction& a, const Fraction& b) {
  return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Fraction operator-(const Fraction& a, const Fraction& b) {
  return Fraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Fraction operator*(const Fraction& a, const Fraction& b) {
  return Fraction(a.num_ * b.num_, a.den_ * b.den_);
}

Fraction operator/(const Fraction& a, const Fraction& b) {
  if (b.num_ == 0) throw Error(ErrorKind::ZeroDenominator, "division by zero");
  return Fraction(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (rhs < lhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Fraction reduce(const BigInt& p, const BigInt& q) { return Fraction(p, q); }

Fraction mediant(const Fraction& a, const Fraction& b) {
  return Fraction(a.numerator() + b.numerator(), a.denominator() + b.denominator());
}

Fraction parse_fraction(std::string_view text) {
  const std::string original(text);
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw Error(ErrorKind::ParseError, "malformed fraction '" + original + "'");
  }
  BigInt num{std::string(num_text)};
  BigInt den{std::string(den_text)};
  if (den == 0) {
    throw Error(ErrorKind::ParseError, "zero denominator in '" + original + "'");
  }
  if (negative) num = -num;
  return Fraction(std::move(num), std::move(den));
}

std::string format(const Fraction& f, FractionStyle style) {
  std::string out = f.numerator().str();
  if (style == FractionStyle::Table || !f.is_integer()) {
    out += '/';
    out += f.denominator().str();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << format(f); }

}  // namespace hallfrac
