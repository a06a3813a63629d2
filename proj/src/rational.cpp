#include "splitcheck/rational.hpp"

#include <ostream>

#include "splitcheck/errors.hpp"

namespace splitcheck::algebra {

Rational::Rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw InvalidArgument("Rational: zero denominator");
  value_ = denominator < 0 ? Value(-numerator, -denominator) : Value(numerator, denominator);
}

Integer Rational::numerator() const { return boost::multiprecision::numerator(value_); }
Integer Rational::denominator() const { return boost::multiprecision::denominator(value_); }

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw InvalidArgument("Rational: division by zero");
  value_ /= other.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(Value(-value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ > b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const { return numerator().str() + "/" + denominator().str(); }

double Rational::to_double() const { return value_.convert_to<double>(); }

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace splitcheck::algebra
