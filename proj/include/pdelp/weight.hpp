#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace pdelp {

// Exact rational in [0, 1]. Necessity degrees enter the system as finite
// decimals and are only ever combined with min/max, so every reachable degree
// is one of the input weights; exact equality keeps the proper/blocking
// distinction unambiguous.
class Weight {
 public:
  constexpr Weight() = default;  // zero

  // Reduced to lowest terms; requires 0 <= num <= den and den > 0.
  static Weight ratio(std::int64_t num, std::int64_t den);

  // Accepts "1", "0.95", ".5", "0.30"; at most 18 fractional digits.
  static std::optional<Weight> from_decimal(std::string_view text);

  static constexpr Weight zero() { return {}; }
  static Weight one() { return ratio(1, 1); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == den_; }

  // Shortest exact decimal: "0.95", "1", "0". Falls back to "num/den" for
  // denominators that are not of the form 2^a * 5^b.
  std::string to_decimal() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b);

 private:
  Weight(std::int64_t num, std::int64_t den) : num_(num), den_(den) {}

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

}  // namespace pdelp
