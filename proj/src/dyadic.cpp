#include "numbergate/dyadic.hpp"

#include <cctype>
#include <cstdlib>

#include "numbergate/errors.hpp"

namespace numbergate {

namespace {

using int128 = __int128;

constexpr std::uint32_t kMaxExponent = 62;

std::int64_t checked_narrow(int128 v, const char* op) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw overflow_error(std::string("dyadic overflow in ") + op);
  return static_cast<std::int64_t>(v);
}

// Reduce num/2^exp and range-check the result.
DyadicRational make128(int128 num, std::uint32_t exp, const char* op) {
  while (exp > 0 && (num & 1) == 0) {
    num >>= 1;
    --exp;
  }
  if (num == 0) exp = 0;
  if (exp > kMaxExponent)
    throw overflow_error(std::string("dyadic exponent too large in ") + op);
  return DyadicRational::make(checked_narrow(num, op), exp);
}

// num * 2^shift as int128; shift bounded by kMaxExponent so this cannot wrap.
int128 scale(std::int64_t num, std::uint32_t shift) {
  return static_cast<int128>(num) << shift;
}

}  // namespace

DyadicRational DyadicRational::make(std::int64_t numerator, std::uint32_t exponent) {
  while (exponent > 0 && (numerator & 1) == 0) {
    numerator /= 2;
    --exponent;
  }
  if (numerator == 0) exponent = 0;
  if (exponent > kMaxExponent)
    throw overflow_error("dyadic exponent too large");
  DyadicRational d;
  d.num_ = numerator;
  d.exp_ = exponent;
  return d;
}

std::int64_t DyadicRational::floor() const {
  if (exp_ == 0) return num_;
  return num_ >> exp_;  // arithmetic shift rounds toward -inf
}

std::int64_t DyadicRational::ceil() const {
  if (exp_ == 0) return num_;
  return -((-num_) >> exp_);
}

DyadicRational DyadicRational::operator-() const {
  if (num_ == INT64_MIN) throw overflow_error("dyadic overflow in negation");
  DyadicRational d;
  d.num_ = -num_;
  d.exp_ = exp_;
  return d;
}

DyadicRational DyadicRational::operator+(const DyadicRational& o) const {
  std::uint32_t e = exp_ > o.exp_ ? exp_ : o.exp_;
  int128 a = scale(num_, e - exp_);
  int128 b = scale(o.num_, e - o.exp_);
  return make128(a + b, e, "addition");
}

DyadicRational DyadicRational::operator-(const DyadicRational& o) const {
  std::uint32_t e = exp_ > o.exp_ ? exp_ : o.exp_;
  int128 a = scale(num_, e - exp_);
  int128 b = scale(o.num_, e - o.exp_);
  return make128(a - b, e, "subtraction");
}

DyadicRational DyadicRational::mean(const DyadicRational& a, const DyadicRational& b) {
  std::uint32_t e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
  int128 x = scale(a.num_, e - a.exp_);
  int128 y = scale(b.num_, e - b.exp_);
  return make128(x + y, e + 1, "mean");
}

std::strong_ordering DyadicRational::operator<=>(const DyadicRational& o) const {
  std::uint32_t e = exp_ > o.exp_ ? exp_ : o.exp_;
  int128 a = scale(num_, e - exp_);
  int128 b = scale(o.num_, e - o.exp_);
  return a < b ? std::strong_ordering::less
       : a > b ? std::strong_ordering::greater
               : std::strong_ordering::equal;
}

std::string DyadicRational::to_string() const {
  if (exp_ == 0) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(std::int64_t{1} << exp_);
}

std::optional<DyadicRational> DyadicRational::parse(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
    return std::nullopt;
  std::int64_t num = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    int digit = text[i] - '0';
    if (num > (INT64_MAX - digit) / 10) return std::nullopt;
    num = num * 10 + digit;
    ++i;
  }
  if (negative) num = -num;
  if (i == text.size()) return DyadicRational(num);
  if (text[i] != '/') return std::nullopt;
  ++i;
  if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
    return std::nullopt;
  std::uint64_t den = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    int digit = text[i] - '0';
    if (den > (UINT64_MAX - static_cast<unsigned>(digit)) / 10) return std::nullopt;
    den = den * 10 + static_cast<unsigned>(digit);
    ++i;
  }
  if (i != text.size()) return std::nullopt;
  // denominator must be a power of two
  if (den == 0 || (den & (den - 1)) != 0) return std::nullopt;
  std::uint32_t exp = 0;
  while ((den >> exp) != 1) ++exp;
  if (exp > kMaxExponent) return std::nullopt;
  return make(num, exp);
}

DyadicRational simplest_between(const std::optional<DyadicRational>& lo,
                                const std::optional<DyadicRational>& hi) {
  if (lo && hi && !(*lo < *hi))
    throw domain_error("simplest_between: interval is empty (lo >= hi)");
  if (!lo && !hi) return DyadicRational(0);
  if (lo && !hi)
    return lo->sign() < 0 ? DyadicRational(0) : DyadicRational(lo->floor() + 1);
  if (!lo && hi)
    return hi->sign() > 0 ? DyadicRational(0) : DyadicRational(hi->ceil() - 1);

  // Integer strictly inside, least absolute value. Only k = 0 could tie with
  // its own negation, so the choice is unambiguous.
  if (lo->sign() < 0 && hi->sign() > 0) return DyadicRational(0);
  if (lo->sign() >= 0) {
    std::int64_t k = lo->floor() + 1;
    if (DyadicRational(k) < *hi) return DyadicRational(k);
  } else {
    std::int64_t k = hi->ceil() - 1;
    if (*lo < DyadicRational(k)) return DyadicRational(k);
  }

  // No integer inside: the grid point of least exponent. At the first
  // exponent where the scaled open interval contains an integer it contains
  // exactly one, and that integer is odd.
  auto scaled_floor = [](const DyadicRational& d, std::uint32_t q) -> __int128 {
    if (q >= d.exponent())
      return static_cast<__int128>(d.numerator()) << (q - d.exponent());
    return static_cast<__int128>(d.numerator()) >> (d.exponent() - q);
  };
  for (std::uint32_t q = 1; q <= 2 * kMaxExponent + 2; ++q) {
    __int128 p_min = scaled_floor(*lo, q) + 1;
    __int128 p_max = -scaled_floor(-*hi, q) - 1;
    if (p_min <= p_max) {
      if (p_min > INT64_MAX || p_min < INT64_MIN)
        throw overflow_error("simplest_between: numerator out of range");
      return DyadicRational::make(static_cast<std::int64_t>(p_min), q);
    }
  }
  throw overflow_error("simplest_between: no representable grid point");
}

}  // namespace numbergate
