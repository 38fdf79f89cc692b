#pragma once

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "numbergate/engine.hpp"
#include "numbergate/properties.hpp"
#include "numbergate/rulesets.hpp"

namespace numbergate {

// --- reports -----------------------------------------------------------------

struct TheoremCheck {
  std::string name;
  std::string verdict;  // "ok" | "vacuous" | "violated"
  std::string detail;
};

struct ConProbeResult {
  enum class Verdict : std::uint8_t {
    kNoNSumFound,           // every value a number, no G+x was an N-position
    kForwardViolation,      // an N-sum on an all-numbers closure: engine bug
    kWitnessFound,          // some value not a number, witness (G, x) located
    kNoWitnessInSearchedSet
  };
  Verdict verdict = Verdict::kNoNSumFound;
  std::size_t sums_checked = 0;
  std::string witness_position;
  std::string witness_x;
};
std::string_view to_string(ConProbeResult::Verdict v);

struct NeitherWitness {
  std::string position, left, right;
};

struct FastpathStats {
  bool enabled = false;
  bool audited = false;
  std::size_t f1_fired = 0, f2_fired = 0;
  std::size_t mismatches = 0;  // fast path fired but the value check disagreed
};

struct ClosureReport {
  std::size_t position_count = 0;
  std::size_t pair_count = 0;
  std::size_t f1_only = 0, f2_only = 0, both = 0, neither = 0;
  std::vector<NeitherWitness> neither_witnesses;  // capped
  bool all_numbers = false;
  bool all_f1 = false;
  bool all_f2 = false;
  bool all_integers_claim = false;  // every pair f2 and every value an integer
  bool snc_consistent = false;      // all_numbers == all_f1
  std::vector<TheoremCheck> checks;
  FastpathStats fastpath;
  ConProbeResult con_probe;
  std::vector<std::pair<std::string, std::optional<DyadicRational>>> values;  // closure order

  bool theorem_violated() const;
  bool predicted_witness_found() const {
    return con_probe.verdict == ConProbeResult::Verdict::kWitnessFound;
  }
};

struct CheckOptions {
  std::vector<DyadicRational> x_set;  // empty means default_x_set()
  bool audit_fastpath = false;
  std::size_t max_neither_witnesses = 32;
};

// The fifteen numbers born by day three.
std::vector<DyadicRational> default_x_set();

// Shared probe core; `values[i]` is the number value of `ids[i]` when present.
ConProbeResult run_con_probe(Engine& eng, std::span<const std::string> rendered,
                             std::span<const GameId> ids,
                             std::span<const std::optional<DyadicRational>> values,
                             std::span<const DyadicRational> x_set);

// --- closure enumeration -------------------------------------------------------

// Least option-closed superset of the seeds, breadth-first, deterministic.
template <Ruleset R>
std::vector<typename R::position_type> hcr_closure(
    const R& rs, std::span<const typename R::position_type> seeds, const Limits& limits) {
  using Pos = typename R::position_type;
  std::vector<Pos> order;
  std::unordered_set<Pos> seen;
  std::size_t head = 0;
  auto push = [&](const Pos& p) {
    if (!seen.insert(p).second) return;
    if (order.size() >= limits.max_positions)
      throw resource_error("position budget exceeded: cap " +
                           std::to_string(limits.max_positions) + " hit with " +
                           std::to_string(order.size() - head) + " positions in the frontier");
    order.push_back(p);
  };
  for (const Pos& p : seeds) push(p);
  while (head < order.size()) {
    Pos p = order[head++];  // copy: order may reallocate while expanding
    for (const Pos& q : rs.left_moves(p)) push(q);
    for (const Pos& q : rs.right_moves(p)) push(q);
  }
  return order;
}

// Recursive position-to-form conversion, memoized on position identity.
template <Ruleset R>
class PositionMapper {
 public:
  PositionMapper(Engine& eng, const R& rs) : eng_(eng), rs_(rs) {}

  GameId to_game(const typename R::position_type& p) {
    if (auto it = memo_.find(p); it != memo_.end()) return it->second;
    Engine::DepthScope scope(eng_);
    std::vector<GameId> left, right;
    for (const auto& q : rs_.left_moves(p)) left.push_back(to_game(q));
    for (const auto& q : rs_.right_moves(p)) right.push_back(to_game(q));
    GameId id = eng_.make_game(left, right);
    memo_.emplace(p, id);
    return id;
  }

 private:
  Engine& eng_;
  const R& rs_;
  std::unordered_map<typename R::position_type, GameId> memo_;
};

// --- closure verification --------------------------------------------------------

// Classifies every (left move, right move) pair of every closure position,
// computes every value, and checks each statement that ties the F1/F2
// properties to numberhood:
//   (a) every pair f1-or-f2        => every value is a number
//   (b) every value is a number   <=> every pair is f1   (both directions)
//   (c) every pair f2              => every value is an integer
//   (d) every pair f2              => every pair f1 with a strict witness
// A violated verdict means an engine bug, not a property of the ruleset.
template <Ruleset R>
ClosureReport check_closure(Engine& eng, const R& rs,
                            std::span<const typename R::position_type> seeds,
                            const CheckOptions& opts = {}) {
  using Pos = typename R::position_type;
  ClosureReport rep;
  std::vector<Pos> closure = hcr_closure(rs, seeds, eng.limits());
  rep.position_count = closure.size();

  PositionMapper<R> mapper(eng, rs);
  std::vector<GameId> ids;
  std::vector<std::string> rendered;
  std::vector<std::optional<DyadicRational>> values;
  ids.reserve(closure.size());
  rendered.reserve(closure.size());
  values.reserve(closure.size());
  rep.all_numbers = true;
  for (const Pos& p : closure) {
    ids.push_back(mapper.to_game(p));
    rendered.push_back(rs.render(p));
  }
  for (std::size_t i = 0; i < closure.size(); ++i) {
    values.push_back(eng.to_number(ids[i]));
    if (!values.back()) rep.all_numbers = false;
    rep.values.emplace_back(rendered[i], values.back());
  }

  rep.all_f1 = true;
  rep.all_f2 = true;
  rep.fastpath.enabled = R::kIdentityFastPath;
  rep.fastpath.audited = opts.audit_fastpath;
  bool all_f1_strict = true;
  struct Deferred {
    GameId g, gl, gr;
  };
  std::vector<Deferred> deferred_strict;
  bool all_integers = true;
  for (const auto& v : values)
    if (!v || !v->is_integer()) all_integers = false;

  for (std::size_t i = 0; i < closure.size(); ++i) {
    const Pos p = closure[i];
    std::vector<Pos> lmoves = rs.left_moves(p);
    std::vector<Pos> rmoves = rs.right_moves(p);
    if (lmoves.empty() || rmoves.empty()) continue;

    std::vector<GameId> lids, rids;
    for (const Pos& q : lmoves) lids.push_back(mapper.to_game(q));
    for (const Pos& q : rmoves) rids.push_back(mapper.to_game(q));

    // Second-move position sets for the identity fast path.
    std::vector<std::unordered_set<Pos>> lr_sets;
    std::vector<std::vector<Pos>> rl_lists;
    if constexpr (R::kIdentityFastPath) {
      lr_sets.reserve(lmoves.size());
      for (const Pos& q : lmoves) {
        auto ms = rs.right_moves(q);
        lr_sets.emplace_back(ms.begin(), ms.end());
      }
      rl_lists.reserve(rmoves.size());
      for (const Pos& q : rmoves) rl_lists.push_back(rs.left_moves(q));
    }

    for (std::size_t li = 0; li < lmoves.size(); ++li) {
      for (std::size_t ri = 0; ri < rmoves.size(); ++ri) {
        ++rep.pair_count;

        bool fast_f1 = false, fast_f2 = false;
        if constexpr (R::kIdentityFastPath) {
          // G^{rl} == G^l or G^{lr} == G^r as board positions implies f1;
          // a common second-move position implies f2 with equality.
          for (const Pos& q : rl_lists[ri]) {
            if (q == lmoves[li]) {
              fast_f1 = true;
              break;
            }
          }
          if (!fast_f1 && lr_sets[li].contains(rmoves[ri])) fast_f1 = true;
          for (const Pos& q : rl_lists[ri]) {
            if (lr_sets[li].contains(q)) {
              fast_f2 = true;
              break;
            }
          }
          if (fast_f1) ++rep.fastpath.f1_fired;
          if (fast_f2) ++rep.fastpath.f2_fired;
        }

        bool f1, f2;
        bool strict_known = false, f1_strict = false;
        if (fast_f1 && fast_f2 && !opts.audit_fastpath) {
          f1 = f2 = true;
        } else if ((fast_f1 || fast_f2) && !opts.audit_fastpath) {
          PairClassification pc = classify_pair(eng, ids[i], lids[li], rids[ri]);
          f1 = fast_f1 || pc.f1;
          f2 = fast_f2 || pc.f2;
          if (!fast_f1) {
            strict_known = true;
            f1_strict = pc.f1 && pc.f1_strict;
          }
        } else {
          PairClassification pc = classify_pair(eng, ids[i], lids[li], rids[ri]);
          f1 = pc.f1;
          f2 = pc.f2;
          strict_known = true;
          f1_strict = pc.f1 && pc.f1_strict;
          if (opts.audit_fastpath) {
            if (fast_f1 && !pc.f1) ++rep.fastpath.mismatches;
            if (fast_f2 && !pc.f2) ++rep.fastpath.mismatches;
          }
          f1 = f1 || fast_f1;
          f2 = f2 || fast_f2;
        }

        if (f1 && f2)
          ++rep.both;
        else if (f1)
          ++rep.f1_only;
        else if (f2)
          ++rep.f2_only;
        else {
          ++rep.neither;
          if (rep.neither_witnesses.size() < opts.max_neither_witnesses)
            rep.neither_witnesses.push_back(
                {rendered[i], rs.render(lmoves[li]), rs.render(rmoves[ri])});
        }
        if (!f1) rep.all_f1 = false;
        if (!f2) rep.all_f2 = false;
        if (strict_known) {
          if (!f1_strict) all_f1_strict = false;
        } else {
          deferred_strict.push_back({ids[i], lids[li], rids[ri]});
        }
      }
    }
  }

  // Strictness left open by skipped fast-path pairs only matters under the
  // all-f2 premise; resolve it at value level now.
  if (rep.all_f2 && all_f1_strict) {
    for (const auto& d : deferred_strict) {
      PairClassification pc = classify_pair(eng, d.g, d.gl, d.gr);
      if (!(pc.f1 && pc.f1_strict)) {
        all_f1_strict = false;
        break;
      }
    }
  }

  rep.snc_consistent = rep.all_numbers == rep.all_f1;
  rep.all_integers_claim = rep.all_f2 && all_integers;

  auto add_check = [&rep](std::string name, bool premise, bool conclusion, std::string detail) {
    TheoremCheck c;
    c.name = std::move(name);
    c.verdict = !premise ? "vacuous" : conclusion ? "ok" : "violated";
    if (premise && !conclusion) c.detail = std::move(detail);
    rep.checks.push_back(std::move(c));
  };
  add_check("f1-or-f2-implies-numbers", rep.neither == 0, rep.all_numbers,
            "a pair-complete closure produced a non-number value");
  add_check("numbers-implies-all-f1", rep.all_numbers, rep.all_f1,
            "an all-numbers closure has a pair without f1");
  add_check("all-f1-implies-numbers", rep.all_f1, rep.all_numbers,
            "an all-f1 closure produced a non-number value");
  add_check("all-f2-implies-integers", rep.all_f2, all_integers,
            "an all-f2 closure produced a non-integer value");
  add_check("all-f2-implies-f1-strict", rep.all_f2, all_f1_strict,
            "an all-f2 closure has a pair without a strict f1 witness");

  std::vector<DyadicRational> xs = opts.x_set.empty() ? default_x_set() : opts.x_set;
  rep.con_probe = run_con_probe(eng, rendered, ids, values, xs);
  return rep;
}

// Outcome-level probe of the closure on its own: either confirm that no
// G + x is an N-position (all values numbers), or hunt for the witness pair
// that must exist when some value is not a number.
template <Ruleset R>
ConProbeResult confirm_con(Engine& eng, const R& rs,
                           std::span<const typename R::position_type> seeds,
                           std::span<const DyadicRational> x_set) {
  using Pos = typename R::position_type;
  std::vector<Pos> closure = hcr_closure(rs, seeds, eng.limits());
  PositionMapper<R> mapper(eng, rs);
  std::vector<GameId> ids;
  std::vector<std::string> rendered;
  std::vector<std::optional<DyadicRational>> values;
  for (const Pos& p : closure) {
    ids.push_back(mapper.to_game(p));
    rendered.push_back(rs.render(p));
  }
  for (GameId id : ids) values.push_back(eng.to_number(id));
  return run_con_probe(eng, rendered, ids, values, x_set);
}

}  // namespace numbergate
