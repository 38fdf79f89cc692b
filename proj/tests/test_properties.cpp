#include <doctest.h>

#include "numbergate/properties.hpp"
#include "oracle.hpp"
#include "random_games.hpp"

using namespace numbergate;

namespace {

// Definition-level classifier: plain scans over the option sets using only
// Engine::le. Used to pin down the optimized routes inside classify_pair.
struct PlainVerdict {
  bool f1 = false, f2 = false, f1_strict = false;
};

PlainVerdict classify_plain(Engine& eng, GameId gl, GameId gr) {
  PlainVerdict v;
  std::vector<GameId> grl(eng.left_options(gr).begin(), eng.left_options(gr).end());
  std::vector<GameId> glr(eng.right_options(gl).begin(), eng.right_options(gl).end());
  for (GameId x : grl) {
    if (eng.le(gl, x)) {
      v.f1 = true;
      if (!eng.le(x, gl)) v.f1_strict = true;
    }
  }
  for (GameId x : glr) {
    if (eng.le(x, gr)) {
      v.f1 = true;
      if (!eng.le(gr, x)) v.f1_strict = true;
    }
  }
  for (GameId a : glr)
    for (GameId b : grl)
      if (eng.le(a, b)) v.f2 = true;
  return v;
}

// Independent re-validation of recorded witnesses through direct le calls.
void validate(Engine& eng, GameId gl, GameId gr, const PairClassification& pc) {
  CHECK(pc.f1 == pc.f1_witness.has_value());
  CHECK(pc.f2 == pc.f2_witness.has_value());
  if (pc.f1_witness) {
    if (pc.f1_witness->side == F1Witness::Side::RL) {
      CHECK(eng.le(gl, pc.f1_witness->option));
      if (pc.f1_witness->strict) CHECK_FALSE(eng.le(pc.f1_witness->option, gl));
    } else {
      CHECK(eng.le(pc.f1_witness->option, gr));
      if (pc.f1_witness->strict) CHECK_FALSE(eng.le(gr, pc.f1_witness->option));
    }
  }
  if (pc.f2_witness) CHECK(eng.le(pc.f2_witness->first, pc.f2_witness->second));
}

}  // namespace

TEST_CASE("classify_pair: the F1-not-F2 integer pair of {-2|0}") {
  Engine eng;
  GameId g = eng.parse_game("{-2|0}");
  GameId gl = eng.parse_game("-2");
  GameId gr = eng.zero();
  PairClassification pc = classify_pair(eng, g, gl, gr);
  CHECK(pc.f1);
  CHECK_FALSE(pc.f2);
  REQUIRE(pc.f1_witness.has_value());
  // the only witness: -2's right option -1, with -1 <= 0 strictly
  CHECK(pc.f1_witness->side == F1Witness::Side::LR);
  CHECK(pc.f1_witness->option == eng.parse_game("-1"));
  CHECK(pc.f1_strict);
  validate(eng, gl, gr, pc);
}

TEST_CASE("classify_pair: the half's pair (0,1) is F1-only, not strict") {
  Engine eng;
  GameId g = eng.parse_game("{0|1}");
  PairClassification pc = classify_pair(eng, g, eng.zero(), eng.parse_game("1"));
  CHECK(pc.f1);
  CHECK_FALSE(pc.f2);
  REQUIRE(pc.f1_witness.has_value());
  CHECK(pc.f1_witness->side == F1Witness::Side::RL);
  CHECK(pc.f1_witness->option == eng.zero());
  CHECK_FALSE(pc.f1_strict);
  validate(eng, eng.zero(), eng.parse_game("1"), pc);
}

TEST_CASE("classify_pair: the F2-not-F1 pair ({0,*|*},{*|0,*})") {
  Engine eng;
  GameId gl = eng.parse_game("{0,*|*}");
  GameId gr = eng.parse_game("{*|0,*}");
  GameId g = eng.make_game({gl}, {gr});
  PairClassification pc = classify_pair(eng, g, gl, gr);
  CHECK(pc.f2);
  CHECK_FALSE(pc.f1);
  REQUIRE(pc.f2_witness.has_value());
  CHECK(pc.f2_witness->first == eng.star());
  CHECK(pc.f2_witness->second == eng.star());
  validate(eng, gl, gr, pc);
}

TEST_CASE("classify_pair rejects non-options") {
  Engine eng;
  GameId g = eng.parse_game("{0|1}");
  CHECK_THROWS_AS(classify_pair(eng, g, eng.star(), eng.parse_game("1")), domain_error);
  CHECK_THROWS_AS(classify_pair(eng, g, eng.zero(), eng.zero()), domain_error);
}

TEST_CASE("classify_pair agrees with the definitional scan on random forms") {
  Engine eng;
  testsupport::RandomGames gen(eng, 0xabcdef12, 4);
  std::size_t pairs = 0;
  for (int i = 0; i < 400 && pairs < 3000; ++i) {
    GameId g = gen.next();
    std::vector<GameId> ls(eng.left_options(g).begin(), eng.left_options(g).end());
    std::vector<GameId> rs(eng.right_options(g).begin(), eng.right_options(g).end());
    for (GameId gl : ls) {
      for (GameId gr : rs) {
        ++pairs;
        PairClassification pc = classify_pair(eng, g, gl, gr);
        PlainVerdict pv = classify_plain(eng, gl, gr);
        CHECK(pc.f1 == pv.f1);
        CHECK(pc.f2 == pv.f2);
        CHECK(pc.f1_strict == pv.f1_strict);
        validate(eng, gl, gr, pc);
      }
    }
  }
  CHECK(pairs > 500);
}

TEST_CASE("classification is value-level: canonicalizing first changes nothing") {
  Engine eng;
  testsupport::RandomGames gen(eng, 0x5eed, 4);
  for (int i = 0; i < 150; ++i) {
    GameId g = gen.next();
    std::vector<GameId> ls(eng.left_options(g).begin(), eng.left_options(g).end());
    std::vector<GameId> rs(eng.right_options(g).begin(), eng.right_options(g).end());
    for (GameId gl : ls) {
      for (GameId gr : rs) {
        PlainVerdict raw = classify_plain(eng, gl, gr);
        PlainVerdict canon = classify_plain(eng, eng.canonical_form(gl), eng.canonical_form(gr));
        CHECK(raw.f1 == canon.f1);
        CHECK(raw.f2 == canon.f2);
      }
    }
  }
}

TEST_CASE("followers enumerates the hereditary closure of a form") {
  Engine eng;
  GameId g = eng.parse_game("{0|1}");
  auto all = followers(eng, g);
  REQUIRE(all.size() == 3);  // {0|1}, 0, 1
  CHECK(all[0] == g);
  CHECK(all[1] == eng.zero());
  CHECK(all[2] == eng.parse_game("1"));
}

TEST_CASE("audit_followers: an all-f2 closure has strict f1 everywhere") {
  Engine eng;
  GameId g = eng.parse_game("{-1|1}");
  FollowerAudit audit = audit_followers(eng, g);
  CHECK(audit.all_f2);
  CHECK(audit.all_f1);
  CHECK(audit.all_f1_strict);
  CHECK(audit.all_numbers);
  CHECK(audit.pair_count == 1);
}

TEST_CASE("number avoidance probe: pinned cases") {
  Engine eng;

  SUBCASE("0 + * : Left wins first, the witness move is on *") {
    AvoidanceProbe p = number_avoidance_probe(eng, eng.zero(), eng.star());
    CHECK(p.left_applicable);
    REQUIRE(p.left_witness.has_value());
    CHECK(*p.left_witness == eng.zero());
    CHECK(p.right_applicable);
    CHECK(p.passed);
  }

  SUBCASE("1/2 + {1|0}") {
    // independent minimax over a sum of two explicit forms
    oracle::FormTable t;
    int one = t.add({{0}, {}});
    int half = t.add({{0}, {one}});
    int sw = t.add({{one}, {0}});
    // first-player-win over component sums
    struct SumGame {
      const oracle::FormTable& t;
      bool wins(int x, int y, bool left) const {
        const auto& fx = left ? t.at(x).left : t.at(x).right;
        const auto& fy = left ? t.at(y).left : t.at(y).right;
        for (int q : fx)
          if (!wins(q, y, !left)) return true;
        for (int q : fy)
          if (!wins(x, q, !left)) return true;
        return false;
      }
    } sum_game{t};
    CHECK(sum_game.wins(half, sw, true));        // Left first wins 1/2 + {1|0}
    CHECK_FALSE(sum_game.wins(half, sw, false)); // Right first loses

    GameId g = eng.number_to_game(DyadicRational::make(1, 1));
    GameId h = eng.parse_game("{1|0}");
    AvoidanceProbe p = number_avoidance_probe(eng, g, h);
    CHECK(p.left_applicable);
    REQUIRE(p.left_witness.has_value());
    CHECK(*p.left_witness == eng.parse_game("1"));
    CHECK_FALSE(p.right_applicable);
    CHECK(p.passed);
  }

  SUBCASE("-2 + * : Left first does not win; vacuous on the left") {
    GameId g = eng.neg(eng.number_to_game(DyadicRational(2)));
    AvoidanceProbe p = number_avoidance_probe(eng, g, eng.star());
    CHECK(eng.outcome(eng.sum(g, eng.star())) == Outcome::R);
    CHECK_FALSE(p.left_applicable);
    CHECK(p.right_applicable);
    REQUIRE(p.right_witness.has_value());
    CHECK(p.passed);
  }
}

TEST_CASE("number avoidance probe preconditions") {
  Engine eng;
  CHECK_THROWS_AS(number_avoidance_probe(eng, eng.star(), eng.star()), domain_error);
  CHECK_THROWS_AS(number_avoidance_probe(eng, eng.zero(), eng.parse_game("1")), domain_error);
}
