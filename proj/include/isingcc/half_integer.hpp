#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace isingcc {

/// A value in (1/2)Z, stored as its double.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
  static constexpr HalfInt integer(int n) { return HalfInt(2 * n); }

  /// Accepts "3", "-2", "3/2", "-1/2". Anything else (e.g. "1/3") throws kSchema.
  static HalfInt parse(std::string_view text);

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  double value() const { return twice_ / 2.0; }

  /// Largest integer <= value, and smallest integer >= value.
  constexpr int floor() const { return twice_ >= 0 ? twice_ / 2 : -((-twice_ + 1) / 2); }
  constexpr int ceil() const { return -HalfInt(-twice_).floor(); }

  std::string to_string() const;

  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr auto operator<=>(const HalfInt&) const = default;

 private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

inline constexpr HalfInt kHalf = HalfInt::from_twice(1);

}  // namespace isingcc
