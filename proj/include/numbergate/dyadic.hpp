#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace numbergate {

// Exact number of the form numerator / 2^exponent, kept reduced: either the
// exponent is zero or the numerator is odd. All arithmetic is checked and
// throws overflow_error rather than wrapping or rounding.
class DyadicRational {
 public:
  constexpr DyadicRational() = default;
  constexpr DyadicRational(std::int64_t n) : num_(n) {}  // NOLINT: integers convert
  static DyadicRational make(std::int64_t numerator, std::uint32_t exponent);

  std::int64_t numerator() const { return num_; }
  std::uint32_t exponent() const { return exp_; }
  bool is_integer() const { return exp_ == 0; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ < 0 ? -1 : num_ > 0 ? 1 : 0; }

  // Round toward -inf / +inf.
  std::int64_t floor() const;
  std::int64_t ceil() const;

  DyadicRational operator-() const;
  DyadicRational operator+(const DyadicRational& o) const;
  DyadicRational operator-(const DyadicRational& o) const;
  static DyadicRational mean(const DyadicRational& a, const DyadicRational& b);

  std::strong_ordering operator<=>(const DyadicRational& o) const;
  bool operator==(const DyadicRational& o) const = default;

  // "3", "-2", "3/4"; the denominator is the decimal value of 2^exponent.
  std::string to_string() const;
  static std::optional<DyadicRational> parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  std::uint32_t exp_ = 0;
};

// The unique simplest number strictly inside the (open) interval. Absent
// bounds are unbounded; with both bounds present, requires lo < hi. Integer
// candidates win over non-integers, the integer of least absolute value is
// chosen, and otherwise the dyadic of least exponent in the interval is
// returned (it is unique).
DyadicRational simplest_between(const std::optional<DyadicRational>& lo,
                                const std::optional<DyadicRational>& hi);

}  // namespace numbergate
