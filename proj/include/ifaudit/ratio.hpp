#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace ifaudit {

/// Exact non-negative rational in canonical form: den > 0, gcd(num, den) = 1.
///
/// Comparison is by 128-bit cross multiplication, so it never rounds.
/// Arithmetic that would leave the int64 range throws OverflowError.
class Ratio {
 public:
  constexpr Ratio() noexcept = default;
  Ratio(std::int64_t num, std::int64_t den);
  static Ratio integer(std::int64_t value) { return Ratio(value, 1); }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// "num/den", always with the denominator ("3/1").
  std::string str() const;

  friend Ratio operator+(const Ratio& a, const Ratio& b);
  friend Ratio operator*(const Ratio& a, const Ratio& b);
  friend Ratio operator/(const Ratio& a, std::int64_t divisor);

  friend bool operator==(const Ratio& a, const Ratio& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) noexcept {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Ratio& r);

/// Decimal rendering with round-half-up at `places` digits ("4/3" -> "1.33",
/// "17/8" -> "2.13").
std::string to_decimal(const Ratio& r, int places);

}  // namespace ifaudit
