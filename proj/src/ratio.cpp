#include "ifaudit/ratio.hpp"

#include <limits>
#include <numeric>
#include <ostream>

#include "ifaudit/errors.hpp"

namespace ifaudit {
namespace {

using i128 = __int128;

constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Ratio from_wide(i128 num, i128 den) {
  const i128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num > kMax || den > kMax) throw OverflowError("rational value exceeds 64-bit range");
  return Ratio(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace

Ratio::Ratio(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw InvalidArgument("ratio denominator must be positive");
  if (num < 0) throw InvalidArgument("ratio numerator must be non-negative");
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::string Ratio::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

Ratio operator+(const Ratio& a, const Ratio& b) {
  const i128 num = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
  const i128 den = static_cast<i128>(a.den_) * b.den_;
  return from_wide(num, den);
}

Ratio operator*(const Ratio& a, const Ratio& b) {
  return from_wide(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}

Ratio operator/(const Ratio& a, std::int64_t divisor) {
  if (divisor <= 0) throw InvalidArgument("ratio divisor must be positive");
  return from_wide(a.num_, static_cast<i128>(a.den_) * divisor);
}

std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.str(); }

std::string to_decimal(const Ratio& r, int places) {
  if (places < 0) throw InvalidArgument("decimal places must be >= 0");
  const std::int64_t den = r.den();
  std::string integer = std::to_string(r.num() / den);
  std::string digits;
  digits.reserve(static_cast<std::size_t>(places));
  std::int64_t rem = r.num() % den;
  for (int i = 0; i < places; ++i) {
    const i128 scaled = static_cast<i128>(rem) * 10;
    digits.push_back(static_cast<char>('0' + static_cast<int>(scaled / den)));
    rem = static_cast<std::int64_t>(scaled % den);
  }
  // half-up: round away when the discarded tail is >= 1/2 ulp
  if (static_cast<i128>(rem) * 2 >= den) {
    int i = places - 1;
    for (; i >= 0; --i) {
      if (digits[i] == '9') {
        digits[i] = '0';
      } else {
        ++digits[i];
        break;
      }
    }
    if (i < 0) {
      for (int j = static_cast<int>(integer.size()) - 1; j >= 0; --j) {
        if (integer[j] == '9') {
          integer[j] = '0';
          if (j == 0) integer.insert(integer.begin(), '1');
        } else {
          ++integer[j];
          break;
        }
      }
    }
  }
  return places == 0 ? integer : integer + "." + digits;
}

}  // namespace ifaudit
