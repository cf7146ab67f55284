#include "hermin/value.hpp"

#include <cstdlib>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace hermin {

namespace {

using Wide = __int128;

Wide wide_abs(Wide x) { return x < 0 ? -x : x; }

Wide wide_gcd(Wide a, Wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long narrow(Wide x, const char* what) {
  if (x > Wide(std::numeric_limits<long long>::max()) ||
      x < Wide(std::numeric_limits<long long>::min())) {
    throw std::overflow_error(std::string("rational overflow in ") + what);
  }
  return static_cast<long long>(x);
}

Value make_reduced(Wide num, Wide den, const char* what) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Value(narrow(num, what), narrow(den, what));
}

}  // namespace

Value::Value(long long numerator, long long denominator)
    : num_(numerator), den_(denominator) {
  if (den_ == 0) throw std::domain_error("rational with zero denominator");
  if (num_ == std::numeric_limits<long long>::min() ||
      den_ == std::numeric_limits<long long>::min()) {
    throw std::overflow_error("rational overflow in construction");
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  long long a = num_ < 0 ? -num_ : num_;
  long long b = den_;
  while (b != 0) {
    long long t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num_ /= a;
    den_ /= a;
  }
}

Value Value::operator-() const { return Value(-num_, den_); }

Value Value::operator+(const Value& o) const {
  if (den_ == 1 && o.den_ == 1) {
    Wide n = Wide(num_) + Wide(o.num_);
    return Value(narrow(n, "addition"), 1);
  }
  Wide n = Wide(num_) * o.den_ + Wide(o.num_) * den_;
  Wide d = Wide(den_) * o.den_;
  return make_reduced(n, d, "addition");
}

Value Value::operator-(const Value& o) const {
  if (den_ == 1 && o.den_ == 1) {
    Wide n = Wide(num_) - Wide(o.num_);
    return Value(narrow(n, "subtraction"), 1);
  }
  Wide n = Wide(num_) * o.den_ - Wide(o.num_) * den_;
  Wide d = Wide(den_) * o.den_;
  return make_reduced(n, d, "subtraction");
}

Value Value::operator*(const Value& o) const {
  Wide n = Wide(num_) * o.num_;
  Wide d = Wide(den_) * o.den_;
  return make_reduced(n, d, "multiplication");
}

Value Value::operator/(const Value& o) const {
  if (o.num_ == 0) throw std::domain_error("rational division by zero");
  Wide n = Wide(num_) * o.den_;
  Wide d = Wide(den_) * o.num_;
  return make_reduced(n, d, "division");
}

std::strong_ordering Value::operator<=>(const Value& o) const {
  Wide lhs = Wide(num_) * o.den_;
  Wide rhs = Wide(o.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Value Value::parse(std::string_view text) {
  auto fail = [&]() -> Value {
    throw std::invalid_argument("cannot parse rational: '" + std::string(text) + "'");
  };
  if (text.empty()) return fail();
  std::string s(text);
  char* end = nullptr;
  errno = 0;
  long long num = std::strtoll(s.c_str(), &end, 10);
  if (errno != 0 || end == s.c_str()) return fail();
  long long den = 1;
  if (*end == '/') {
    const char* den_start = end + 1;
    errno = 0;
    den = std::strtoll(den_start, &end, 10);
    if (errno != 0 || end == den_start) return fail();
    if (den <= 0) return fail();
  }
  if (*end != '\0') return fail();
  return Value(num, den);
}

std::string Value::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

double Value::approx() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::ostream& operator<<(std::ostream& os, const Value& v) { return os << v.str(); }

}  // namespace hermin
