#include "numbergate/rulesets.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "numbergate/errors.hpp"

namespace numbergate {

namespace {

std::uint64_t parse_uint(std::string_view text, std::string_view what,
                         std::uint64_t min_value, std::uint64_t max_value) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw domain_error(std::string(what) + ": expected integer, got '" +
                       std::string(text) + "'");
  if (value < min_value || value > max_value)
    throw domain_error(std::string(what) + ": value " + std::to_string(value) +
                       " out of range");
  return value;
}

// Split that keeps empty segments ("B/" -> {"B", ""}).
std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == sep) {
      out.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::vector<std::uint32_t> parse_set(std::string_view text, std::string_view what) {
  std::vector<std::uint32_t> out;
  if (text.empty()) return out;
  for (auto part : split(text, ','))
    out.push_back(static_cast<std::uint32_t>(parse_uint(part, what, 1, 1'000'000'000)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

// --- divisors ---------------------------------------------------------------

DivisorsPosition DivisorsRuleset::parse(std::string_view text) const {
  auto parts = split(text, ',');
  if (parts.size() != 2) throw domain_error("divisors: expected \"l,r\"");
  DivisorsPosition p;
  p.l = static_cast<std::uint32_t>(parse_uint(parts[0], "divisors l", 1, 1'000'000));
  p.r = static_cast<std::uint32_t>(parse_uint(parts[1], "divisors r", 1, 1'000'000));
  return p;
}

std::string DivisorsRuleset::render(const DivisorsPosition& p) const {
  return std::to_string(p.l) + "," + std::to_string(p.r);
}

std::vector<DivisorsPosition> DivisorsRuleset::left_moves(const DivisorsPosition& p) const {
  std::vector<DivisorsPosition> out;
  for (std::uint32_t d = 1; d < p.l; ++d)
    if (p.r % d == 0) out.push_back({d, p.r});
  return out;
}

std::vector<DivisorsPosition> DivisorsRuleset::right_moves(const DivisorsPosition& p) const {
  std::vector<DivisorsPosition> out;
  for (std::uint32_t d = 1; d < p.r; ++d)
    if (p.l % d == 0) out.push_back({p.l, d});
  return out;
}

// --- partizan turning turtles -------------------------------------------------

std::string TurtlesRuleset::parse(std::string_view text) const {
  for (char c : text)
    if (c != 'U' && c != 'D')
      throw domain_error("turtles: line must consist of 'U' and 'D'");
  return std::string(text);
}

std::string TurtlesRuleset::render(const std::string& p) const { return p; }

std::vector<std::string> TurtlesRuleset::left_moves(const std::string& p) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != 'D') continue;
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[j] != 'D') continue;
      std::string q = p;
      q[i] = 'U';
      q[j] = 'U';
      out.push_back(std::move(q));
    }
  }
  return out;
}

std::vector<std::string> TurtlesRuleset::right_moves(const std::string& p) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != 'U') continue;
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[j] != 'D') continue;
      std::string q = p;
      q[i] = 'D';
      q[j] = 'U';
      out.push_back(std::move(q));
    }
  }
  return out;
}

// --- polychromatic chomp --------------------------------------------------------

char ChompRuleset::color_at(const ChompPosition& p, int row, int col) {
  // column-major over visible cells, poison (1,1) skipped
  std::size_t idx = 0;
  for (int j = 1; j <= static_cast<int>(p.heights.size()); ++j) {
    int h = p.heights[static_cast<std::size_t>(j - 1)];
    for (int i = 1; i <= h; ++i) {
      if (i == 1 && j == 1) continue;
      if (i == row && j == col) return p.colors[idx];
      ++idx;
    }
  }
  throw domain_error("chomp: no such cell");
}

ChompPosition ChompRuleset::bite(const ChompPosition& p, int row, int col) {
  ChompPosition q;
  for (std::size_t j = 0; j < p.heights.size(); ++j) {
    int h = p.heights[j];
    if (static_cast<int>(j) + 1 >= col) h = std::min(h, row - 1);
    q.heights.push_back(static_cast<std::uint8_t>(h));
  }
  while (!q.heights.empty() && q.heights.back() == 0) q.heights.pop_back();
  for (int j = 1; j <= static_cast<int>(q.heights.size()); ++j) {
    for (int i = 1; i <= q.heights[static_cast<std::size_t>(j - 1)]; ++i) {
      if (i == 1 && j == 1) continue;
      q.colors.push_back(color_at(p, i, j));
    }
  }
  return q;
}

std::vector<ChompPosition> ChompRuleset::left_moves(const ChompPosition& p) const {
  std::vector<ChompPosition> out;
  for (int j = 1; j <= static_cast<int>(p.heights.size()); ++j) {
    for (int i = 1; i <= p.heights[static_cast<std::size_t>(j - 1)]; ++i) {
      if (i == 1 && j == 1) continue;
      if (color_at(p, i, j) == 'B') out.push_back(bite(p, i, j));
    }
  }
  return out;
}

std::vector<ChompPosition> ChompRuleset::right_moves(const ChompPosition& p) const {
  std::vector<ChompPosition> out;
  for (int j = 1; j <= static_cast<int>(p.heights.size()); ++j) {
    for (int i = 1; i <= p.heights[static_cast<std::size_t>(j - 1)]; ++i) {
      if (i == 1 && j == 1) continue;
      if (color_at(p, i, j) == 'G') out.push_back(bite(p, i, j));
    }
  }
  return out;
}

ChompPosition ChompRuleset::parse(std::string_view text) const {
  auto rows = split(text, '/');  // top to bottom
  int height = static_cast<int>(rows.size());
  ChompPosition p;
  // cells in row i (1-based from the bottom): bottom row lists columns 2..C,
  // other rows start at column 1
  std::vector<int> cols(static_cast<std::size_t>(height));
  for (int i = 1; i <= height; ++i) {
    std::string_view row = rows[static_cast<std::size_t>(height - i)];
    for (char c : row)
      if (c != 'B' && c != 'G')
        throw domain_error("chomp: cells must be 'B' or 'G'");
    cols[static_cast<std::size_t>(i - 1)] =
        static_cast<int>(row.size()) + (i == 1 ? 1 : 0);
  }
  for (int i = 2; i <= height; ++i) {
    if (cols[static_cast<std::size_t>(i - 1)] > cols[static_cast<std::size_t>(i - 2)])
      throw domain_error("chomp: rows must not widen upward");
    if (cols[static_cast<std::size_t>(i - 1)] < 1)
      throw domain_error("chomp: empty row above the bottom");
  }
  int width = cols[0];
  for (int j = 1; j <= width; ++j) {
    int h = 0;
    for (int i = 1; i <= height; ++i)
      if (cols[static_cast<std::size_t>(i - 1)] >= j) h = i;
    p.heights.push_back(static_cast<std::uint8_t>(h));
  }
  while (!p.heights.empty() && p.heights.back() == 0) p.heights.pop_back();
  for (int j = 1; j <= static_cast<int>(p.heights.size()); ++j) {
    for (int i = 1; i <= p.heights[static_cast<std::size_t>(j - 1)]; ++i) {
      if (i == 1 && j == 1) continue;
      std::string_view row = rows[static_cast<std::size_t>(height - i)];
      p.colors.push_back(row[static_cast<std::size_t>(j - 1 - (i == 1 ? 1 : 0))]);
    }
  }
  return p;
}

std::string ChompRuleset::render(const ChompPosition& p) const {
  int maxh = p.heights.empty() ? 1 : p.heights[0];
  std::string out;
  for (int i = maxh; i >= 1; --i) {
    if (i != maxh) out += '/';
    for (int j = 1; j <= static_cast<int>(p.heights.size()); ++j) {
      if (p.heights[static_cast<std::size_t>(j - 1)] < i) break;
      if (i == 1 && j == 1) continue;
      out += color_at(p, i, j);
    }
  }
  return out;
}

// --- cutcake ---------------------------------------------------------------------

CutcakePosition CutcakeRuleset::parse(std::string_view text) const {
  CutcakePosition p;
  for (auto part : split(text, '+')) {
    auto xs = split(part, 'x');
    if (xs.size() != 2) throw domain_error("cutcake: expected \"MxN\"");
    auto m = parse_uint(xs[0], "cutcake m", 1, 255);
    auto n = parse_uint(xs[1], "cutcake n", 1, 255);
    p.boards.emplace_back(static_cast<std::uint8_t>(m), static_cast<std::uint8_t>(n));
  }
  if (p.boards.empty()) throw domain_error("cutcake: no boards");
  std::sort(p.boards.begin(), p.boards.end());
  return p;
}

std::string CutcakeRuleset::render(const CutcakePosition& p) const {
  std::string out;
  for (std::size_t i = 0; i < p.boards.size(); ++i) {
    if (i) out += '+';
    out += std::to_string(p.boards[i].first) + "x" + std::to_string(p.boards[i].second);
  }
  return out;
}

namespace {

// Replace board `idx` by two boards; keep the multiset sorted.
CutcakePosition replace_board(const CutcakePosition& p, std::size_t idx,
                              std::pair<std::uint8_t, std::uint8_t> a,
                              std::pair<std::uint8_t, std::uint8_t> b) {
  CutcakePosition q;
  q.boards.reserve(p.boards.size() + 1);
  for (std::size_t i = 0; i < p.boards.size(); ++i)
    if (i != idx) q.boards.push_back(p.boards[i]);
  q.boards.push_back(a);
  q.boards.push_back(b);
  std::sort(q.boards.begin(), q.boards.end());
  return q;
}

std::vector<CutcakePosition> dedupe_moves(std::vector<CutcakePosition>&& moves) {
  std::vector<CutcakePosition> out;
  for (auto& m : moves)
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
  return out;
}

}  // namespace

std::vector<CutcakePosition> CutcakeRuleset::left_moves(const CutcakePosition& p) const {
  std::vector<CutcakePosition> moves;
  for (std::size_t idx = 0; idx < p.boards.size(); ++idx) {
    auto [m, n] = p.boards[idx];
    for (int cut = 1; cut < n; ++cut)
      moves.push_back(replace_board(p, idx, {m, static_cast<std::uint8_t>(cut)},
                                    {m, static_cast<std::uint8_t>(n - cut)}));
  }
  return dedupe_moves(std::move(moves));
}

std::vector<CutcakePosition> CutcakeRuleset::right_moves(const CutcakePosition& p) const {
  std::vector<CutcakePosition> moves;
  for (std::size_t idx = 0; idx < p.boards.size(); ++idx) {
    auto [m, n] = p.boards[idx];
    for (int cut = 1; cut < m; ++cut)
      moves.push_back(replace_board(p, idx, {static_cast<std::uint8_t>(cut), n},
                                    {static_cast<std::uint8_t>(m - cut), n}));
  }
  return dedupe_moves(std::move(moves));
}

// --- blue-red-hackenbush strings ----------------------------------------------------

std::string HackenbushRuleset::parse(std::string_view text) const {
  std::string p;
  p.reserve(text.size());
  for (char c : text) {
    char lc = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lc != 'b' && lc != 'r')
      throw domain_error("hackenbush: edges must be 'b' or 'r'");
    p.push_back(lc);
  }
  return p;
}

std::string HackenbushRuleset::render(const std::string& p) const { return p; }

std::vector<std::string> HackenbushRuleset::left_moves(const std::string& p) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] == 'b') out.push_back(p.substr(0, i));
  return out;
}

std::vector<std::string> HackenbushRuleset::right_moves(const std::string& p) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] == 'r') out.push_back(p.substr(0, i));
  return out;
}

// --- partizan subtraction -------------------------------------------------------------

SubtractionPosition SubtractionRuleset::parse(std::string_view text) const {
  auto parts = split(text, ';');
  if (parts.size() != 3 || !parts[0].starts_with("n=") || !parts[1].starts_with("L=") ||
      !parts[2].starts_with("R="))
    throw domain_error("subtraction: expected \"n=<heap>;L=<set>;R=<set>\"");
  SubtractionPosition p;
  p.heap = static_cast<std::uint32_t>(
      parse_uint(parts[0].substr(2), "subtraction heap", 0, 1'000'000));
  p.left_set = parse_set(parts[1].substr(2), "subtraction L");
  p.right_set = parse_set(parts[2].substr(2), "subtraction R");
  return p;
}

std::string SubtractionRuleset::render(const SubtractionPosition& p) const {
  auto join = [](const std::vector<std::uint32_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(v[i]);
    }
    return s;
  };
  return "n=" + std::to_string(p.heap) + ";L=" + join(p.left_set) +
         ";R=" + join(p.right_set);
}

std::vector<SubtractionPosition> SubtractionRuleset::left_moves(
    const SubtractionPosition& p) const {
  std::vector<SubtractionPosition> out;
  for (std::uint32_t take : p.left_set)
    if (take <= p.heap) out.push_back({p.heap - take, p.left_set, p.right_set});
  return out;  // ascending takes = descending heaps
}

std::vector<SubtractionPosition> SubtractionRuleset::right_moves(
    const SubtractionPosition& p) const {
  std::vector<SubtractionPosition> out;
  for (std::uint32_t take : p.right_set)
    if (take <= p.heap) out.push_back({p.heap - take, p.left_set, p.right_set});
  return out;
}

// --- dispatch ---------------------------------------------------------------------

AnyRuleset make_ruleset(std::string_view name) {
  if (name == DivisorsRuleset::kName) return DivisorsRuleset{};
  if (name == TurtlesRuleset::kName) return TurtlesRuleset{};
  if (name == ChompRuleset::kName) return ChompRuleset{};
  if (name == CutcakeRuleset::kName) return CutcakeRuleset{};
  if (name == HackenbushRuleset::kName) return HackenbushRuleset{};
  if (name == SubtractionRuleset::kName) return SubtractionRuleset{};
  throw domain_error("unknown ruleset '" + std::string(name) + "'");
}

std::vector<std::string_view> ruleset_names() {
  return {DivisorsRuleset::kName,   TurtlesRuleset::kName,    ChompRuleset::kName,
          CutcakeRuleset::kName,    HackenbushRuleset::kName, SubtractionRuleset::kName};
}

}  // namespace numbergate
