#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

namespace ospkw {

/// Exact rational used for bilinear-form values (denominators divide 4).
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

std::string to_string(const Rational& r);

/// An element of (1/2)Z stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_doubled(std::int64_t doubled) {
    HalfInt h;
    h.doubled_ = doubled;
    return h;
  }
  static constexpr HalfInt from_int(std::int64_t value) { return from_doubled(2 * value); }
  static constexpr HalfInt half() { return from_doubled(1); }

  constexpr std::int64_t doubled() const { return doubled_; }
  constexpr bool is_integer() const { return doubled_ % 2 == 0; }
  /// Requires is_integer().
  std::int64_t to_int() const;
  Rational to_rational() const { return Rational(doubled_) / 2; }
  constexpr HalfInt abs() const { return from_doubled(doubled_ < 0 ? -doubled_ : doubled_); }

  constexpr HalfInt operator-() const { return from_doubled(-doubled_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    doubled_ += o.doubled_;
    return *this;
  }
  constexpr HalfInt& operator-=(HalfInt o) {
    doubled_ -= o.doubled_;
    return *this;
  }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
  friend constexpr HalfInt operator*(HalfInt a, std::int64_t k) { return from_doubled(a.doubled_ * k); }
  friend constexpr HalfInt operator*(std::int64_t k, HalfInt a) { return a * k; }

  friend constexpr bool operator==(HalfInt, HalfInt) = default;
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) { return a.doubled_ <=> b.doubled_; }

 private:
  std::int64_t doubled_ = 0;
};

/// Integers print plainly, halves as "p/2".
std::string to_string(HalfInt h);

/// Product of two half-integers, exact.
inline Rational product(HalfInt a, HalfInt b) { return Rational(a.doubled() * b.doubled()) / 4; }

}  // namespace ospkw
