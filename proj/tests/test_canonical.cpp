#include <doctest.h>

#include "numbergate/engine.hpp"
#include "oracle.hpp"

using namespace numbergate;

TEST_CASE("canonical form of {-2|0}: minimal-birthday search oracle") {
  // Exhaustive oracle: among all forms of birthday <= 2, the youngest game
  // equal to {-2|0} is {|0}, i.e. the integer -1.
  oracle::FormTable t;
  t.generate_universe(2);
  int neg1 = t.add({{}, {0}});
  int neg2 = t.add({{}, {neg1}});
  int target = t.add({{neg2}, {0}});

  int best = -1;
  int best_day = 99;
  for (int id = 0; id < static_cast<int>(t.size()); ++id) {
    if (id == target) continue;
    if (t.birthday(id) > 2) continue;
    if (t.eq(id, target) && t.birthday(id) < best_day) {
      best = id;
      best_day = t.birthday(id);
    }
  }
  REQUIRE(best >= 0);
  CHECK(best_day == 1);
  CHECK(t.at(best) == oracle::Form{{}, {0}});

  Engine eng;
  GameId c = eng.canonical_form(eng.parse_game("{-2|0}"));
  CHECK(c == eng.number_to_game(DyadicRational(-1)));
  CHECK(c == eng.parse_game("{|0}"));
  CHECK(eng.render_game(c) == "-1");
}

TEST_CASE("canonical form of {0|1} is itself") {
  Engine eng;
  GameId g = eng.parse_game("{0|1}");
  CHECK(eng.canonical_form(g) == g);
}

TEST_CASE("dominated option removal: {0,{-1|1}|1} -> {0|1}") {
  Engine eng;
  // {-1|1} is a zero game, dominated by the left option 0
  oracle::FormTable t;
  int one = t.add({{0}, {}});
  int neg1 = t.add({{}, {0}});
  int mid = t.add({{neg1}, {one}});
  CHECK(t.eq(mid, 0));

  GameId g = eng.parse_game("{0,{-1|1}|1}");
  CHECK(eng.canonical_form(g) == eng.parse_game("{0|1}"));
}

TEST_CASE("reversible bypass collapses {-1|1} to zero") {
  Engine eng;
  CHECK(eng.canonical_form(eng.parse_game("{-1|1}")) == eng.zero());
  CHECK(eng.canonical_form(eng.parse_game("{-2|7}")) == eng.zero());
}

TEST_CASE("canonical form: star and switches survive") {
  Engine eng;
  CHECK(eng.canonical_form(eng.star()) == eng.star());
  GameId sw = eng.parse_game("{1|0}");
  CHECK(eng.canonical_form(sw) == sw);
}

TEST_CASE("canonical form is idempotent and value-preserving") {
  Engine eng;
  for (const char* text :
       {"{-2|0}", "{0,{-1|1}|1}", "{-1|1}", "{0,*|*}", "{{1|0}|{0|-1}}", "{3|5}", "{*|*}"}) {
    GameId g = eng.parse_game(text);
    GameId c = eng.canonical_form(g);
    CHECK(eng.canonical_form(c) == c);
    CHECK(eng.le(g, c));
    CHECK(eng.le(c, g));
  }
}

TEST_CASE("canonical number forms decode to expected shapes") {
  Engine eng;
  // {3|5} is the integer 4 = {3|}
  CHECK(eng.canonical_form(eng.parse_game("{3|5}")) == eng.number_to_game(DyadicRational(4)));
  // {*|*} equals 0 (second player wins both ways)
  CHECK(eng.canonical_form(eng.parse_game("{*|*}")) == eng.zero());
}
