#include <doctest.h>

#include "numbergate/dyadic.hpp"
#include "numbergate/errors.hpp"
#include "oracle.hpp"

using numbergate::DyadicRational;
using numbergate::simplest_between;

namespace {

DyadicRational dy(std::int64_t num, std::uint32_t exp = 0) {
  return DyadicRational::make(num, exp);
}

oracle::Rat to_rat(const DyadicRational& d) {
  return oracle::Rat{d.numerator(), static_cast<int>(d.exponent())};
}

}  // namespace

TEST_CASE("dyadic reduction and accessors") {
  CHECK(dy(4, 2) == dy(1));
  CHECK(dy(6, 1) == dy(3));
  CHECK(dy(0, 5) == dy(0));
  CHECK(dy(3, 2).numerator() == 3);
  CHECK(dy(3, 2).exponent() == 2);
  CHECK(dy(3, 2).is_integer() == false);
  CHECK(dy(-8, 3) == dy(-1));
}

TEST_CASE("dyadic ordering") {
  CHECK(dy(1, 1) < dy(3, 2));
  CHECK(dy(-1) < dy(-1, 1));
  CHECK(dy(-1, 1) < dy(0));
  CHECK(dy(1, 1) == DyadicRational::make(2, 2));
  CHECK(dy(5, 3) < dy(3, 2));  // 5/8 < 3/4
}

TEST_CASE("dyadic arithmetic is exact") {
  CHECK(dy(1, 1) + dy(1, 2) == dy(3, 2));
  CHECK(dy(1) - dy(1, 3) == dy(7, 3));
  CHECK(-dy(3, 2) == dy(-3, 2));
  CHECK(DyadicRational::mean(dy(0), dy(1)) == dy(1, 1));
  CHECK(DyadicRational::mean(dy(1, 1), dy(1)) == dy(3, 2));
  CHECK(DyadicRational::mean(dy(-1), dy(1)) == dy(0));
}

TEST_CASE("dyadic floor and ceil") {
  CHECK(dy(3, 1).floor() == 1);
  CHECK(dy(3, 1).ceil() == 2);
  CHECK(dy(-3, 1).floor() == -2);
  CHECK(dy(-3, 1).ceil() == -1);
  CHECK(dy(5).floor() == 5);
  CHECK(dy(5).ceil() == 5);
}

TEST_CASE("dyadic overflow is an error, never a wrap") {
  CHECK_THROWS_AS(dy(INT64_MAX) + dy(INT64_MAX), numbergate::overflow_error);
  CHECK_THROWS_AS(dy(1, 70), numbergate::overflow_error);
  CHECK_THROWS_AS(-dy(INT64_MIN), numbergate::overflow_error);
}

TEST_CASE("dyadic text round trip") {
  for (const char* text : {"0", "-2", "3/4", "-3/4", "7/8", "1/2", "17"}) {
    auto d = DyadicRational::parse(text);
    REQUIRE(d.has_value());
    CHECK(d->to_string() == text);
  }
  CHECK(DyadicRational::parse("4/8") == dy(1, 1));  // reduces
  CHECK_FALSE(DyadicRational::parse("3/6").has_value());
  CHECK_FALSE(DyadicRational::parse("1/0").has_value());
  CHECK_FALSE(DyadicRational::parse("x").has_value());
  CHECK_FALSE(DyadicRational::parse("1/2/4").has_value());
}

TEST_CASE("simplest_between: pinned cases") {
  // the canonical half
  CHECK(simplest_between(dy(0), dy(1)) == dy(1, 1));
  // no bounds at all
  CHECK(simplest_between(std::nullopt, std::nullopt) == dy(0));
  // no integer inside (1,2); oracle: enumerate numbers by birthday
  CHECK(to_rat(simplest_between(dy(1), dy(2))) ==
        oracle::simplest_in_interval(oracle::Rat{1, 0}, oracle::Rat{2, 0}));
  CHECK(simplest_between(dy(1), dy(2)) == dy(3, 1));

  CHECK(simplest_between(dy(-1), dy(1)) == dy(0));
  CHECK(simplest_between(dy(1, 1), std::nullopt) == dy(1));
  CHECK(simplest_between(std::nullopt, dy(-1, 1)) == dy(-1));
  CHECK(simplest_between(dy(-1, 1), std::nullopt) == dy(0));
  CHECK(simplest_between(dy(1, 2), dy(3)) == dy(1));
  CHECK(simplest_between(dy(-3), dy(-1, 2)) == dy(-1));
  // deep interval: (5/4, 11/8) resolves at exponent 4
  CHECK(to_rat(simplest_between(dy(5, 2), dy(11, 3))) ==
        oracle::simplest_in_interval(oracle::Rat{5, 2}, oracle::Rat{11, 3}));
  CHECK(simplest_between(dy(5, 2), dy(11, 3)) == dy(21, 4));
}

TEST_CASE("simplest_between: empty interval is a domain error") {
  CHECK_THROWS_AS(simplest_between(dy(1), dy(1)), numbergate::domain_error);
  CHECK_THROWS_AS(simplest_between(dy(2), dy(1)), numbergate::domain_error);
}

TEST_CASE("simplest_between agrees with birthday enumeration") {
  std::vector<DyadicRational> samples;
  for (int num = -12; num <= 12; ++num)
    for (std::uint32_t exp : {0u, 1u, 2u, 3u}) samples.push_back(dy(num, exp));
  for (const auto& lo : samples) {
    for (const auto& hi : samples) {
      if (!(lo < hi)) continue;
      auto got = simplest_between(lo, hi);
      auto want = oracle::simplest_in_interval(to_rat(lo), to_rat(hi));
      CHECK(to_rat(got) == want);
      CHECK(lo < got);
      CHECK(got < hi);
    }
    auto above = simplest_between(lo, std::nullopt);
    CHECK(to_rat(above) == oracle::simplest_in_interval(to_rat(lo), std::nullopt));
    auto below = simplest_between(std::nullopt, lo);
    CHECK(to_rat(below) == oracle::simplest_in_interval(std::nullopt, to_rat(lo)));
  }
}
