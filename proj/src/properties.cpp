#include "numbergate/properties.hpp"

#include <algorithm>
#include <unordered_set>

namespace numbergate {

namespace {

bool contains(std::span<const GameId> opts, GameId id) {
  return std::binary_search(opts.begin(), opts.end(), id);
}

}  // namespace

PairClassification classify_pair(Engine& eng, GameId g, GameId gl, GameId gr) {
  if (!contains(eng.left_options(g), gl))
    throw domain_error("classify_pair: not a left option of the game");
  if (!contains(eng.right_options(g), gr))
    throw domain_error("classify_pair: not a right option of the game");

  PairClassification pc;
  pc.left_option = gl;
  pc.right_option = gr;

  auto vl = eng.to_number(gl);
  auto vr = eng.to_number(gr);
  auto grl_sum = eng.left_summary(gr);   // left options of G^R (max)
  auto glr_sum = eng.right_summary(gl);  // right options of G^L (min)

  std::optional<F1Witness> first_witness, strict_witness;
  auto consider = [&](F1Witness::Side side, GameId option, bool strict) {
    if (!first_witness) first_witness = F1Witness{side, option, strict};
    if (strict && !strict_witness) strict_witness = F1Witness{side, option, true};
  };

  // F1, RL side: some G^RL >= G^L.
  if (vl && grl_sum.all_numbers) {
    if (!grl_sum.empty && !(grl_sum.best < *vl))
      consider(F1Witness::Side::RL, grl_sum.best_option, *vl < grl_sum.best);
  } else {
    for (GameId grl : eng.left_options(gr)) {
      if (eng.le(gl, grl)) consider(F1Witness::Side::RL, grl, !eng.le(grl, gl));
    }
  }
  // F1, LR side: some G^LR <= G^R.
  if (!strict_witness) {
    if (vr && glr_sum.all_numbers) {
      if (!glr_sum.empty && !(*vr < glr_sum.best))
        consider(F1Witness::Side::LR, glr_sum.best_option, glr_sum.best < *vr);
    } else {
      for (GameId glr : eng.right_options(gl)) {
        if (eng.le(glr, gr)) consider(F1Witness::Side::LR, glr, !eng.le(gr, glr));
      }
    }
  }
  if (strict_witness) {
    pc.f1 = true;
    pc.f1_strict = true;
    pc.f1_witness = strict_witness;
  } else if (first_witness) {
    pc.f1 = true;
    pc.f1_witness = first_witness;
  }

  // F2: some G^RL >= some G^LR.
  if (glr_sum.all_numbers && grl_sum.all_numbers) {
    if (!glr_sum.empty && !grl_sum.empty && !(grl_sum.best < glr_sum.best)) {
      pc.f2 = true;
      pc.f2_witness = std::make_pair(glr_sum.best_option, grl_sum.best_option);
    }
  } else {
    for (GameId glr : eng.right_options(gl)) {
      for (GameId grl : eng.left_options(gr)) {
        if (eng.le(glr, grl)) {
          pc.f2 = true;
          pc.f2_witness = std::make_pair(glr, grl);
          break;
        }
      }
      if (pc.f2) break;
    }
  }
  return pc;
}

std::vector<GameId> followers(Engine& eng, GameId g) {
  std::vector<GameId> order{g};
  std::unordered_set<std::uint32_t> seen{g.idx};
  for (std::size_t head = 0; head < order.size(); ++head) {
    GameId cur = order[head];
    for (GameId o : eng.left_options(cur))
      if (seen.insert(o.idx).second) order.push_back(o);
    for (GameId o : eng.right_options(cur))
      if (seen.insert(o.idx).second) order.push_back(o);
  }
  return order;
}

FollowerAudit audit_followers(Engine& eng, GameId g) {
  FollowerAudit audit;
  std::vector<GameId> all = followers(eng, g);
  audit.position_count = all.size();
  for (GameId pos : all) {
    if (!eng.to_number(pos)) audit.all_numbers = false;
    // classify_pair may intern new forms; copy the spans first
    std::vector<GameId> left(eng.left_options(pos).begin(), eng.left_options(pos).end());
    std::vector<GameId> right(eng.right_options(pos).begin(), eng.right_options(pos).end());
    for (GameId gl : left) {
      for (GameId gr : right) {
        ++audit.pair_count;
        PairClassification pc = classify_pair(eng, pos, gl, gr);
        if (!pc.f1) audit.all_f1 = false;
        if (!pc.f2) audit.all_f2 = false;
        if (!(pc.f1 && pc.f1_strict)) audit.all_f1_strict = false;
      }
    }
  }
  return audit;
}

AvoidanceProbe number_avoidance_probe(Engine& eng, GameId g_number, GameId h) {
  if (!eng.to_number(g_number))
    throw domain_error("number_avoidance_probe: first game is not a number");
  if (eng.to_number(h))
    throw domain_error("number_avoidance_probe: second game is a number");

  AvoidanceProbe probe;
  GameId total = eng.sum(g_number, h);
  std::vector<GameId> hl(eng.left_options(h).begin(), eng.left_options(h).end());
  std::vector<GameId> hr(eng.right_options(h).begin(), eng.right_options(h).end());

  probe.left_applicable = eng.left_first_wins(total);
  if (probe.left_applicable) {
    for (GameId x : hl) {
      if (eng.le(eng.zero(), eng.sum(g_number, x))) {
        probe.left_witness = x;
        break;
      }
    }
  }
  probe.right_applicable = eng.right_first_wins(total);
  if (probe.right_applicable) {
    for (GameId x : hr) {
      if (eng.le(eng.sum(g_number, x), eng.zero())) {
        probe.right_witness = x;
        break;
      }
    }
  }
  probe.passed = (!probe.left_applicable || probe.left_witness.has_value()) &&
                 (!probe.right_applicable || probe.right_witness.has_value());
  return probe;
}

}  // namespace numbergate
