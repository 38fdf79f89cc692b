#include <cctype>
#include <string>
#include <vector>

#include "numbergate/engine.hpp"

// Game-literal grammar:
//   game   := number | "*" | "{" list "|" list "}"
//   list   := eps | game ("," game)*
//   number := integer | integer "/" power-of-two   (denominator in decimal)
// Whitespace is insignificant. Number literals expand to canonical forms.

namespace numbergate {

namespace {

class Parser {
 public:
  Parser(Engine& eng, std::string_view text) : eng_(eng), text_(text) {}

  GameId run() {
    GameId g = parse_game();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input after game");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw parse_error("game literal: " + what, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    return text_[pos_];
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  GameId parse_game() {
    char c = peek();
    if (c == '*') {
      ++pos_;
      return eng_.star();
    }
    if (c == '{') return parse_braces();
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return parse_number();
    fail(std::string("expected game, found '") + c + "'");
  }

  GameId parse_braces() {
    ++pos_;  // '{'
    std::vector<GameId> left = parse_list('|');
    if (peek() != '|') fail("expected '|'");
    ++pos_;
    std::vector<GameId> right = parse_list('}');
    if (peek() != '}') fail("expected '}'");
    ++pos_;
    return eng_.make_game(left, right);
  }

  std::vector<GameId> parse_list(char terminator) {
    std::vector<GameId> out;
    if (peek() == terminator) return out;
    out.push_back(parse_game());
    while (peek() == ',') {
      ++pos_;
      out.push_back(parse_game());
    }
    return out;
  }

  GameId parse_number() {
    std::int64_t numerator = parse_integer();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      std::size_t den_at = pos_;
      std::int64_t den = parse_integer();
      if (den <= 0 || (den & (den - 1)) != 0) {
        pos_ = den_at;
        fail("denominator must be a power of two");
      }
      std::uint32_t exp = 0;
      while ((den >> exp) != 1) ++exp;
      return eng_.number_to_game(DyadicRational::make(numerator, exp));
    }
    return eng_.number_to_game(DyadicRational(numerator));
  }

  std::int64_t parse_integer() {
    skip_ws();
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected digits");
    std::int64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      int digit = text_[pos_] - '0';
      if (value > (INT64_MAX - digit) / 10) fail("integer literal out of range");
      value = value * 10 + digit;
      ++pos_;
    }
    return negative ? -value : value;
  }

  Engine& eng_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GameId Engine::parse_game(std::string_view text) {
  return Parser(*this, text).run();
}

std::string Engine::render_game(GameId g) {
  if (g == star()) return "*";
  // Canonical number forms print as literals; everything else in braces.
  if (canonical_form(g) == g) {
    if (auto d = to_number(g)) return d->to_string();
  }
  return render_form(g);
}

std::string Engine::render_form(GameId g) {
  std::vector<GameId> l(left_options(g).begin(), left_options(g).end());
  std::vector<GameId> r(right_options(g).begin(), right_options(g).end());
  std::string out = "{";
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i) out += ",";
    out += render_game(l[i]);
  }
  out += "|";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) out += ",";
    out += render_game(r[i]);
  }
  out += "}";
  return out;
}

}  // namespace numbergate
