#include "pdelp/weight.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace pdelp {

Weight Weight::ratio(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0 || num > den) {
    throw std::invalid_argument("weight must be a rational in [0, 1]");
  }
  const std::int64_t g = std::gcd(num, den);
  return Weight(num / g, den / g);
}

std::optional<Weight> Weight::from_decimal(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t i = 0;
  std::int64_t integer = 0;
  bool any_digit = false;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
    integer = integer * 10 + (text[i] - '0');
    if (integer > 1000) return std::nullopt;  // anything above 1 is invalid anyway
    any_digit = true;
    ++i;
  }
  std::int64_t num = integer;
  std::int64_t den = 1;
  if (i < text.size() && text[i] == '.') {
    ++i;
    std::size_t digits = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      if (++digits > 18) return std::nullopt;
      num = num * 10 + (text[i] - '0');
      den *= 10;
      any_digit = true;
      ++i;
    }
    if (digits == 0) return std::nullopt;
  }
  if (!any_digit || i != text.size()) return std::nullopt;
  if (num > den) return std::nullopt;
  return ratio(num, den);
}

std::string Weight::to_decimal() const {
  if (num_ == 0) return "0";
  if (num_ == den_) return "1";
  std::int64_t d = den_;
  int twos = 0;
  int fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }
  const int k = std::max(twos, fives);
  std::int64_t pow10 = 1;
  for (int j = 0; j < k; ++j) pow10 *= 10;
  const std::int64_t scaled = num_ * (pow10 / den_);
  std::string digits = std::to_string(scaled);
  if (digits.size() < static_cast<std::size_t>(k)) {
    digits.insert(digits.begin(), k - digits.size(), '0');
  }
  while (!digits.empty() && digits.back() == '0') digits.pop_back();
  return "0." + digits;
}

std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Weight& w) {
  return os << w.to_decimal();
}

}  // namespace pdelp
