#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "numbergate/engine.hpp"

namespace numbergate {

// Verdict for one (G^L, G^R) option pair of a game G.
//
// f1: some left option of G^R is >= G^L, or some right option of G^L is
//     <= G^R ("one move against two").
// f2: some right option of G^L and some left option of G^R compare as
//     G^RL >= G^LR (each player moves once, order nearly interchangeable).
struct F1Witness {
  enum class Side : std::uint8_t { RL, LR };
  Side side = Side::RL;
  GameId option{};
  bool strict = false;
};

struct PairClassification {
  GameId left_option{}, right_option{};
  bool f1 = false;
  bool f2 = false;
  std::optional<F1Witness> f1_witness;                  // strict witness preferred
  std::optional<std::pair<GameId, GameId>> f2_witness;  // (G^LR, G^RL)
  bool f1_strict = false;  // some f1 witness holds with strict inequality
};

// Classifies the pair (gl, gr); gl must be a left option of g and gr a right
// option, else domain_error. Witness choice is deterministic: when every
// value involved is a number the comparison runs on exact values (witnesses
// are the extreme options), otherwise the option sets are searched in stored
// order with strict witnesses preferred.
PairClassification classify_pair(Engine& eng, GameId g, GameId gl, GameId gr);

// g plus all positions reachable through options, breadth-first, deduplicated.
std::vector<GameId> followers(Engine& eng, GameId g);

// Pair sweep over the hereditary closure of a single form.
struct FollowerAudit {
  std::size_t position_count = 0;
  std::size_t pair_count = 0;
  bool all_numbers = true;
  bool all_f1 = true;
  bool all_f2 = true;
  bool all_f1_strict = true;  // every pair f1 with a strict witness
};
FollowerAudit audit_followers(Engine& eng, GameId g);

// Number Avoidance probe: with g a number and h not, if a player can win
// moving first on g+h they can win with a move on h. Throws domain_error if
// the preconditions fail.
struct AvoidanceProbe {
  bool left_applicable = false;   // Left moving first wins g+h
  std::optional<GameId> left_witness;   // hL with g + hL >= 0
  bool right_applicable = false;
  std::optional<GameId> right_witness;  // hR with g + hR <= 0
  bool passed = false;
};
AvoidanceProbe number_avoidance_probe(Engine& eng, GameId g_number, GameId h);

}  // namespace numbergate
