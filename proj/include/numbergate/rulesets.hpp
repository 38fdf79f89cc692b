#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace numbergate {

// Uniform surface every ruleset provides. Move generation is deterministic
// and duplicate-free; parse/render round-trip every generated position.
// kIdentityFastPath marks rulesets where commuting moves on the board are
// worth detecting before comparing values.
template <class R>
concept Ruleset = requires(const R rs, const typename R::position_type& p,
                           std::string_view text) {
  requires std::equality_comparable<typename R::position_type>;
  { rs.parse(text) } -> std::same_as<typename R::position_type>;
  { rs.render(p) } -> std::same_as<std::string>;
  { rs.left_moves(p) } -> std::same_as<std::vector<typename R::position_type>>;
  { rs.right_moves(p) } -> std::same_as<std::vector<typename R::position_type>>;
  { R::kName } -> std::convertible_to<std::string_view>;
  { R::kIdentityFastPath } -> std::convertible_to<bool>;
};

// --- divisors ---------------------------------------------------------------
// Position (l, r) of positive integers. Left replaces l by a smaller divisor
// of r; Right replaces r by a smaller divisor of l.

struct DivisorsPosition {
  std::uint32_t l = 1, r = 1;
  friend bool operator==(const DivisorsPosition&, const DivisorsPosition&) = default;
};

class DivisorsRuleset {
 public:
  using position_type = DivisorsPosition;
  static constexpr std::string_view kName = "divisors";
  static constexpr bool kIdentityFastPath = true;
  position_type parse(std::string_view text) const;  // "l,r"
  std::string render(const position_type& p) const;
  std::vector<position_type> left_moves(const position_type& p) const;
  std::vector<position_type> right_moves(const position_type& p) const;
};

// --- partizan turning turtles ------------------------------------------------
// A line over {U, D}: U on its feet, D on its back. Left turns two D turtles
// to U; Right picks i < j with p[i] = U, p[j] = D and flips both.

class TurtlesRuleset {
 public:
  using position_type = std::string;
  static constexpr std::string_view kName = "turtles";
  static constexpr bool kIdentityFastPath = true;
  position_type parse(std::string_view text) const;  // "UDDU", possibly empty
  std::string render(const position_type& p) const;
  std::vector<position_type> left_moves(const position_type& p) const;
  std::vector<position_type> right_moves(const position_type& p) const;
};

// --- polychromatic chomp ------------------------------------------------------
// Staircase of column heights with a poison square at column 1, row 1 and a
// black/gray color on every other visible cell. A bite at (row, col) removes
// everything above or to the right. Identity is by visible cells: trailing
// empty columns are dropped and colors are stored column-major for the cells
// still on the board (poison excluded).

struct ChompPosition {
  std::vector<std::uint8_t> heights;  // non-increasing, heights[0] >= 1
  std::string colors;                 // 'B'/'G', column-major, poison skipped
  friend bool operator==(const ChompPosition&, const ChompPosition&) = default;
};

class ChompRuleset {
 public:
  using position_type = ChompPosition;
  static constexpr std::string_view kName = "chomp";
  static constexpr bool kIdentityFastPath = true;
  // Rows top-to-bottom, '/'-separated; the bottom row starts at column 2
  // because the poison square is implicit. "" is the poison-only board.
  position_type parse(std::string_view text) const;
  std::string render(const position_type& p) const;
  std::vector<position_type> left_moves(const position_type& p) const;
  std::vector<position_type> right_moves(const position_type& p) const;

  static char color_at(const position_type& p, int row, int col);  // 1-based
  static position_type bite(const position_type& p, int row, int col);
};

// --- cutcake -------------------------------------------------------------------
// A multiset of m x n boards. Left cuts a board along its second dimension
// into (m, l) + (m, n-l); Right cuts along the first into (r, n) + (m-r, n).

struct CutcakePosition {
  std::vector<std::pair<std::uint8_t, std::uint8_t>> boards;  // sorted
  friend bool operator==(const CutcakePosition&, const CutcakePosition&) = default;
};

class CutcakeRuleset {
 public:
  using position_type = CutcakePosition;
  static constexpr std::string_view kName = "cutcake";
  static constexpr bool kIdentityFastPath = false;
  position_type parse(std::string_view text) const;  // "MxN" or "MxN+MxN+..."
  std::string render(const position_type& p) const;
  std::vector<position_type> left_moves(const position_type& p) const;
  std::vector<position_type> right_moves(const position_type& p) const;
};

// --- blue-red-hackenbush strings ------------------------------------------------
// Edges from the ground up; removing an edge drops everything above it.
// Left plays blue ('b'), Right plays red ('r').

class HackenbushRuleset {
 public:
  using position_type = std::string;
  static constexpr std::string_view kName = "hackenbush";
  static constexpr bool kIdentityFastPath = true;
  position_type parse(std::string_view text) const;  // "brrb", case-insensitive
  std::string render(const position_type& p) const;
  std::vector<position_type> left_moves(const position_type& p) const;
  std::vector<position_type> right_moves(const position_type& p) const;
};

// --- partizan subtraction --------------------------------------------------------
// Heap of n tokens; Left removes any amount in its set, Right in his.
// The subtraction sets travel with the position.

struct SubtractionPosition {
  std::uint32_t heap = 0;
  std::vector<std::uint32_t> left_set, right_set;  // ascending, positive
  friend bool operator==(const SubtractionPosition&, const SubtractionPosition&) = default;
};

class SubtractionRuleset {
 public:
  using position_type = SubtractionPosition;
  static constexpr std::string_view kName = "subtraction";
  static constexpr bool kIdentityFastPath = true;
  position_type parse(std::string_view text) const;  // "n=5;L=1,3;R=2"
  std::string render(const position_type& p) const;
  std::vector<position_type> left_moves(const position_type& p) const;
  std::vector<position_type> right_moves(const position_type& p) const;
};

using AnyRuleset = std::variant<DivisorsRuleset, TurtlesRuleset, ChompRuleset,
                                CutcakeRuleset, HackenbushRuleset, SubtractionRuleset>;

// Throws domain_error for an unknown name.
AnyRuleset make_ruleset(std::string_view name);
std::vector<std::string_view> ruleset_names();

}  // namespace numbergate

// Hash support so closures can deduplicate positions.
template <>
struct std::hash<numbergate::DivisorsPosition> {
  std::size_t operator()(const numbergate::DivisorsPosition& p) const noexcept {
    return std::hash<std::uint64_t>{}((std::uint64_t{p.l} << 32) | p.r);
  }
};

template <>
struct std::hash<numbergate::ChompPosition> {
  std::size_t operator()(const numbergate::ChompPosition& p) const noexcept {
    std::size_t h = std::hash<std::string>{}(p.colors);
    for (std::uint8_t x : p.heights) h = h * 1315423911u + x + 1;
    return h;
  }
};

template <>
struct std::hash<numbergate::CutcakePosition> {
  std::size_t operator()(const numbergate::CutcakePosition& p) const noexcept {
    std::size_t h = 0x811c9dc5u;
    for (auto [m, n] : p.boards) {
      h = (h ^ m) * 16777619u;
      h = (h ^ n) * 16777619u;
    }
    return h;
  }
};

template <>
struct std::hash<numbergate::SubtractionPosition> {
  std::size_t operator()(const numbergate::SubtractionPosition& p) const noexcept {
    std::size_t h = std::hash<std::uint32_t>{}(p.heap);
    for (std::uint32_t x : p.left_set) h = h * 1000003u + x;
    h = h * 1000003u + 0xabcdu;
    for (std::uint32_t x : p.right_set) h = h * 1000003u + x;
    return h;
  }
};
