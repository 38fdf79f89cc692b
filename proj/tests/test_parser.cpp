#include <doctest.h>

#include "numbergate/engine.hpp"
#include "random_games.hpp"

using namespace numbergate;

TEST_CASE("parse: grammar basics") {
  Engine eng;
  CHECK(eng.parse_game("{|}") == eng.zero());
  CHECK(eng.parse_game("*") == eng.star());
  CHECK(eng.parse_game("0") == eng.zero());

  GameId half = eng.parse_game("{0|1}");
  auto l = eng.left_options(half);
  auto r = eng.right_options(half);
  REQUIRE(l.size() == 1);
  REQUIRE(r.size() == 1);
  CHECK(l[0] == eng.zero());
  CHECK(r[0] == eng.number_to_game(DyadicRational(1)));

  CHECK(eng.parse_game("1/2") == half);
  CHECK(eng.parse_game("-3/4") == eng.number_to_game(DyadicRational::make(-3, 2)));
  CHECK(eng.birthday(eng.parse_game("{0,*|*}")) == 2);
}

TEST_CASE("parse: whitespace is insignificant") {
  Engine eng;
  CHECK(eng.parse_game(" { 0 , * | * } ") == eng.parse_game("{0,*|*}"));
  CHECK(eng.parse_game(" 1/2 ") == eng.parse_game("1/2"));
}

TEST_CASE("parse: errors carry positions") {
  Engine eng;
  CHECK_THROWS_AS(eng.parse_game(""), parse_error);
  CHECK_THROWS_AS(eng.parse_game("{0|"), parse_error);
  CHECK_THROWS_AS(eng.parse_game("{0|1}x"), parse_error);
  CHECK_THROWS_AS(eng.parse_game("{0;1}"), parse_error);
  CHECK_THROWS_AS(eng.parse_game("3/6"), parse_error);
  CHECK_THROWS_AS(eng.parse_game("3/0"), parse_error);
  try {
    eng.parse_game("{0|1}xyz");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.offset == 5);
  }
  try {
    eng.parse_game("3/6");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.offset == 2);
  }
}

TEST_CASE("render: canonical numbers and star collapse, forms stay in braces") {
  Engine eng;
  CHECK(eng.render_game(eng.zero()) == "0");
  CHECK(eng.render_game(eng.star()) == "*");
  CHECK(eng.render_game(eng.parse_game("{0|1}")) == "1/2");
  CHECK(eng.render_game(eng.parse_game("{1|0}")) == "{1|0}");
  CHECK(eng.render_form(eng.parse_game("{0|1}")) == "{0|1}");
  CHECK(eng.render_form(eng.zero()) == "{|}");
  CHECK(eng.render_form(eng.parse_game("{0,*|*}")) == "{0,*|*}");
  // a non-canonical number form renders structurally
  CHECK(eng.render_game(eng.parse_game("{-2|0}")) == "{-2|0}");
  CHECK(eng.render_form(eng.canonical_form(eng.parse_game("{-2|0}"))) == "{|0}");
}

TEST_CASE("render/parse round trip on random forms") {
  Engine eng;
  testsupport::RandomGames gen(eng, 0xfeedface, 4);
  for (int i = 0; i < 300; ++i) {
    GameId g = gen.next();
    CHECK(eng.parse_game(eng.render_game(g)) == g);
    CHECK(eng.parse_game(eng.render_form(g)) == g);
  }
}

TEST_CASE("reports are deterministic: rendering twice matches") {
  Engine eng;
  GameId g = eng.parse_game("{0,*,{1|0}|-2,{0|1/2}}");
  std::string a = eng.render_form(g);
  CHECK(a == eng.render_form(g));
  CHECK(eng.parse_game(a) == g);
}
