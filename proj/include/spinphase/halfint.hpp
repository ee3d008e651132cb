#pragma once

#include <compare>
#include <string>

namespace spinphase {

// Half-integer quantum number stored as twice its value, so j = 3/2 is
// HalfInt::from_twice(3).  Keeps spin arithmetic exact: no floating-point
// comparison of half-integers anywhere downstream.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }

  // Accepts values that are exact multiples of 1/2 (within 1e-9 slack for
  // values coming from text such as "1.5"); throws InvalidIndex otherwise.
  static HalfInt from_value(double value);

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return 0.5 * twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr bool nonnegative() const { return twice_ >= 0; }

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) {
    return HalfInt(a.twice_ + b.twice_);
  }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) {
    return HalfInt(a.twice_ - b.twice_);
  }
  friend constexpr bool operator==(HalfInt a, HalfInt b) = default;
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

  // "2", "-1/2", ...
  std::string str() const;

 private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

inline constexpr HalfInt half() { return HalfInt::from_twice(1); }

}  // namespace spinphase
