#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "numbergate/dyadic.hpp"
#include "numbergate/errors.hpp"

namespace numbergate {

// Handle into the engine's arena. Ids are dense and deterministic for a
// deterministic construction order; equal forms always share one id.
struct GameId {
  std::uint32_t idx = 0;
  friend constexpr bool operator==(GameId, GameId) = default;
  friend constexpr auto operator<=>(GameId, GameId) = default;
};

enum class Outcome : std::uint8_t { L, R, P, N };
std::string_view to_string(Outcome o);

struct Limits {
  std::size_t max_arena = 5'000'000;   // interned forms
  std::size_t max_depth = 10'000;      // recursion depth
  std::size_t max_positions = 200'000; // closure enumeration
};

// Append-only arena of immutable partizan game forms with structural
// interning, plus memoized evaluation: outcome, order, negation, disjunctive
// sum, canonical form and dyadic number extraction. Option lists are stored
// deduplicated in ascending id order, so id equality is form equality.
class Engine {
 public:
  explicit Engine(Limits limits = {});
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  // --- construction -------------------------------------------------------
  GameId make_game(std::span<const GameId> left, std::span<const GameId> right);
  GameId make_game(std::initializer_list<GameId> left, std::initializer_list<GameId> right);
  GameId zero() const { return GameId{0}; }
  GameId star();
  GameId number_to_game(const DyadicRational& d);
  GameId parse_game(std::string_view text);

  // --- structure ----------------------------------------------------------
  std::span<const GameId> left_options(GameId g) const;
  std::span<const GameId> right_options(GameId g) const;
  std::uint32_t birthday(GameId g) const;
  std::size_t size() const { return forms_.size(); }
  const Limits& limits() const { return limits_; }

  // --- evaluation ---------------------------------------------------------
  Outcome outcome(GameId g);
  bool left_first_wins(GameId g);
  bool right_first_wins(GameId g);
  bool le(GameId g, GameId h);  // g <= h in the partizan order
  bool eq(GameId g, GameId h) { return le(g, h) && le(h, g); }
  GameId neg(GameId g);
  GameId sum(GameId g, GameId h);
  GameId canonical_form(GameId g);
  std::optional<DyadicRational> to_number(GameId g);
  bool incentives_negative(GameId g);

  // Value summary of one option set; meaningful when every option on that
  // side is a number. Left sides track the maximum, right sides the minimum.
  struct SideSummary {
    bool empty = true;
    bool all_numbers = true;  // vacuously true when empty
    DyadicRational best;
    GameId best_option{};  // first option attaining `best` in stored order
  };
  SideSummary left_summary(GameId g);
  SideSummary right_summary(GameId g);

  // --- text ---------------------------------------------------------------
  // render_game collapses canonical number forms and * to literals;
  // render_form keeps the outermost level in braces.
  std::string render_game(GameId g);
  std::string render_form(GameId g);

  // RAII recursion-depth accounting, shared with external recursions that
  // feed the engine (e.g. position-to-game conversion).
  class DepthScope {
   public:
    explicit DepthScope(Engine& e);
    ~DepthScope();
    DepthScope(const DepthScope&) = delete;
    DepthScope& operator=(const DepthScope&) = delete;

   private:
    Engine& eng_;
  };

 private:
  struct FormRec {
    std::uint32_t opts_begin = 0;  // into pool_
    std::uint32_t n_left = 0;
    std::uint32_t n_right = 0;
    std::uint32_t birthday = 0;
  };

  struct FormView {
    std::span<const GameId> left, right;
  };

  struct InternHash {
    using is_transparent = void;
    const Engine* eng;
    std::size_t operator()(GameId id) const;
    std::size_t operator()(const FormView& v) const;
  };
  struct InternEq {
    using is_transparent = void;
    const Engine* eng;
    bool operator()(GameId a, GameId b) const { return a == b; }
    bool operator()(const FormView& v, GameId b) const;
    bool operator()(GameId a, const FormView& v) const;
  };

  FormView view(GameId g) const;
  static std::size_t hash_view(const FormView& v);
  // `left`/`right` must already be sorted and deduplicated.
  GameId intern_normalized(std::vector<GameId>&& left, std::vector<GameId>&& right);
  void check_ids(std::span<const GameId> ids) const;

  bool le_game_virtual(GameId x, std::span<const GameId> left, std::span<const GameId> right);
  bool le_virtual_game(std::span<const GameId> left, std::span<const GameId> right, GameId x);
  void remove_dominated(std::vector<GameId>& opts, bool left_side);

  SideSummary summarize(std::span<const GameId> opts, bool left_side);

  Limits limits_;
  std::size_t depth_ = 0;

  std::vector<FormRec> forms_;
  std::vector<GameId> pool_;
  std::unordered_set<GameId, InternHash, InternEq> index_;

  std::vector<std::uint8_t> outcome_memo_;     // 0 = unset, else Outcome + 1
  std::vector<std::uint32_t> neg_memo_;        // kUnset sentinel
  std::vector<std::uint32_t> canonical_memo_;  // kUnset sentinel
  std::unordered_map<std::uint64_t, bool> le_memo_;
  std::unordered_map<std::uint64_t, std::uint32_t> sum_memo_;
  std::unordered_map<std::uint32_t, std::optional<DyadicRational>> number_memo_;
  std::map<DyadicRational, GameId> number_form_memo_;
  std::unordered_map<std::uint32_t, SideSummary> left_summary_memo_;
  std::unordered_map<std::uint32_t, SideSummary> right_summary_memo_;
  std::optional<GameId> star_;
};

}  // namespace numbergate
