#include "numbergate/closure.hpp"

#include <algorithm>

namespace numbergate {

std::string_view to_string(ConProbeResult::Verdict v) {
  switch (v) {
    case ConProbeResult::Verdict::kNoNSumFound: return "no-n-sum-found";
    case ConProbeResult::Verdict::kForwardViolation: return "forward-violation";
    case ConProbeResult::Verdict::kWitnessFound: return "witness-found";
    case ConProbeResult::Verdict::kNoWitnessInSearchedSet: return "no-witness-in-searched-set";
  }
  return "?";
}

bool ClosureReport::theorem_violated() const {
  if (fastpath.mismatches > 0) return true;
  if (con_probe.verdict == ConProbeResult::Verdict::kForwardViolation) return true;
  for (const TheoremCheck& c : checks)
    if (c.verdict == "violated") return true;
  return false;
}

std::vector<DyadicRational> default_x_set() {
  std::vector<DyadicRational> xs;
  xs.emplace_back(0);
  for (std::int64_t k : {1, 2, 3}) {
    xs.emplace_back(k);
    xs.emplace_back(-k);
  }
  for (auto [num, exp] : {std::pair{1, 1}, {1, 2}, {3, 2}, {3, 1}}) {
    xs.push_back(DyadicRational::make(num, static_cast<std::uint32_t>(exp)));
    xs.push_back(DyadicRational::make(-num, static_cast<std::uint32_t>(exp)));
  }
  return xs;
}

ConProbeResult run_con_probe(Engine& eng, std::span<const std::string> rendered,
                             std::span<const GameId> ids,
                             std::span<const std::optional<DyadicRational>> values,
                             std::span<const DyadicRational> x_set) {
  ConProbeResult result;
  bool all_numbers = true;
  for (const auto& v : values)
    if (!v) all_numbers = false;

  // Sums run on canonical forms: same value, far smaller form.
  auto n_sum = [&](GameId g, const DyadicRational& x) {
    GameId s = eng.sum(eng.canonical_form(g), eng.number_to_game(x));
    ++result.sums_checked;
    return eng.outcome(s) == Outcome::N;
  };

  if (all_numbers) {
    result.verdict = ConProbeResult::Verdict::kNoNSumFound;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (const DyadicRational& x : x_set) {
        if (n_sum(ids[i], x)) {
          result.verdict = ConProbeResult::Verdict::kForwardViolation;
          result.witness_position = rendered[i];
          result.witness_x = x.to_string();
          return result;
        }
      }
    }
    return result;
  }

  // Some value is not a number: a witness pair exists, though not necessarily
  // inside any fixed candidate set. Candidates: the x set, then -a for each
  // number-valued left option a, then -(a+b)/2 for number-valued option pairs.
  result.verdict = ConProbeResult::Verdict::kNoWitnessInSearchedSet;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (values[i]) continue;
    std::vector<DyadicRational> candidates(x_set.begin(), x_set.end());
    auto add = [&candidates](const DyadicRational& d) {
      if (std::find(candidates.begin(), candidates.end(), d) == candidates.end())
        candidates.push_back(d);
    };
    std::vector<GameId> lefts(eng.left_options(ids[i]).begin(), eng.left_options(ids[i]).end());
    std::vector<GameId> rights(eng.right_options(ids[i]).begin(),
                               eng.right_options(ids[i]).end());
    std::vector<DyadicRational> lvals, rvals;
    for (GameId o : lefts)
      if (auto v = eng.to_number(o)) lvals.push_back(*v);
    for (GameId o : rights)
      if (auto v = eng.to_number(o)) rvals.push_back(*v);
    for (const auto& a : lvals) add(-a);
    for (const auto& a : lvals)
      for (const auto& b : rvals) add(-DyadicRational::mean(a, b));

    for (const DyadicRational& x : candidates) {
      if (n_sum(ids[i], x)) {
        result.verdict = ConProbeResult::Verdict::kWitnessFound;
        result.witness_position = rendered[i];
        result.witness_x = x.to_string();
        return result;
      }
    }
  }
  return result;
}

}  // namespace numbergate
