#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hermin {

/// Exact rational scalar. All set-function values flow through this type so
/// that solver branches on equality (e.g. f'({t,u}) == lambda*) are exact;
/// floating point would corrupt tie handling.
///
/// Stored in lowest terms with a positive denominator. Arithmetic runs
/// through 128-bit intermediates and throws std::overflow_error if a reduced
/// result no longer fits in 64 bits.
class Value {
 public:
  constexpr Value() : num_(0), den_(1) {}
  constexpr Value(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Value(long long numerator, long long denominator);

  /// Parses "p" or "p/q" with optional leading '-'.
  static Value parse(std::string_view text);

  long long numerator() const { return num_; }
  long long denominator() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  Value operator-() const;
  Value operator+(const Value& o) const;
  Value operator-(const Value& o) const;
  Value operator*(const Value& o) const;
  Value operator/(const Value& o) const;  // throws on division by zero
  Value& operator+=(const Value& o) { return *this = *this + o; }
  Value& operator-=(const Value& o) { return *this = *this - o; }
  Value& operator*=(const Value& o) { return *this = *this * o; }
  Value& operator/=(const Value& o) { return *this = *this / o; }

  bool operator==(const Value& o) const = default;
  std::strong_ordering operator<=>(const Value& o) const;

  /// "p" when integral, otherwise "p/q".
  std::string str() const;

  /// Lossy conversion, for reporting ratios and timings only.
  double approx() const;

 private:
  long long num_;
  long long den_;
};

std::ostream& operator<<(std::ostream& os, const Value& v);

}  // namespace hermin
