#include "numbergate/engine.hpp"

#include <algorithm>
#include <cstdlib>

namespace numbergate {

namespace {

constexpr std::uint32_t kUnset = UINT32_MAX;

std::uint64_t pair_key(GameId a, GameId b) {
  return (static_cast<std::uint64_t>(a.idx) << 32) | b.idx;
}

void sort_unique(std::vector<GameId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Insert keeping the vector sorted and duplicate-free.
void sorted_insert(std::vector<GameId>& v, GameId id) {
  auto it = std::lower_bound(v.begin(), v.end(), id);
  if (it == v.end() || *it != id) v.insert(it, id);
}

}  // namespace

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::L: return "L";
    case Outcome::R: return "R";
    case Outcome::P: return "P";
    case Outcome::N: return "N";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// arena

Engine::Engine(Limits limits)
    : limits_(limits), index_(64, InternHash{this}, InternEq{this}) {
  make_game({}, {});  // id 0 is the empty game
}

Engine::FormView Engine::view(GameId g) const {
  const FormRec& rec = forms_[g.idx];
  const GameId* base = pool_.data() + rec.opts_begin;
  return FormView{{base, rec.n_left}, {base + rec.n_left, rec.n_right}};
}

std::size_t Engine::hash_view(const FormView& v) {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  auto mix = [&h](std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
  };
  mix(v.left.size());
  for (GameId id : v.left) mix(id.idx);
  mix(0xdeadbeefull);
  for (GameId id : v.right) mix(id.idx);
  return static_cast<std::size_t>(h ^ (h >> 32));
}

std::size_t Engine::InternHash::operator()(GameId id) const {
  return hash_view(eng->view(id));
}
std::size_t Engine::InternHash::operator()(const FormView& v) const {
  return hash_view(v);
}

bool Engine::InternEq::operator()(const FormView& v, GameId b) const {
  FormView w = eng->view(b);
  return std::ranges::equal(v.left, w.left) && std::ranges::equal(v.right, w.right);
}
bool Engine::InternEq::operator()(GameId a, const FormView& v) const {
  return operator()(v, a);
}

void Engine::check_ids(std::span<const GameId> ids) const {
  for (GameId id : ids)
    if (id.idx >= forms_.size())
      throw domain_error("make_game: unknown GameId " + std::to_string(id.idx));
}

GameId Engine::intern_normalized(std::vector<GameId>&& left, std::vector<GameId>&& right) {
  FormView v{left, right};
  if (auto it = index_.find(v); it != index_.end()) return *it;

  if (forms_.size() >= limits_.max_arena)
    throw resource_error("arena budget exceeded: " + std::to_string(forms_.size()) +
                         " forms interned");

  FormRec rec;
  rec.opts_begin = static_cast<std::uint32_t>(pool_.size());
  rec.n_left = static_cast<std::uint32_t>(left.size());
  rec.n_right = static_cast<std::uint32_t>(right.size());
  std::uint32_t bday = 0;
  for (GameId id : left) bday = std::max(bday, forms_[id.idx].birthday + 1);
  for (GameId id : right) bday = std::max(bday, forms_[id.idx].birthday + 1);
  rec.birthday = bday;

  pool_.insert(pool_.end(), left.begin(), left.end());
  pool_.insert(pool_.end(), right.begin(), right.end());
  forms_.push_back(rec);
  GameId id{static_cast<std::uint32_t>(forms_.size() - 1)};
  index_.insert(id);
  return id;
}

GameId Engine::make_game(std::span<const GameId> left, std::span<const GameId> right) {
  check_ids(left);
  check_ids(right);
  std::vector<GameId> l(left.begin(), left.end());
  std::vector<GameId> r(right.begin(), right.end());
  sort_unique(l);
  sort_unique(r);
  return intern_normalized(std::move(l), std::move(r));
}

GameId Engine::make_game(std::initializer_list<GameId> left, std::initializer_list<GameId> right) {
  return make_game(std::span<const GameId>(left.begin(), left.size()),
                   std::span<const GameId>(right.begin(), right.size()));
}

GameId Engine::star() {
  if (!star_) star_ = make_game({zero()}, {zero()});
  return *star_;
}

std::span<const GameId> Engine::left_options(GameId g) const {
  if (g.idx >= forms_.size()) throw domain_error("unknown GameId");
  return view(g).left;
}

std::span<const GameId> Engine::right_options(GameId g) const {
  if (g.idx >= forms_.size()) throw domain_error("unknown GameId");
  return view(g).right;
}

std::uint32_t Engine::birthday(GameId g) const {
  if (g.idx >= forms_.size()) throw domain_error("unknown GameId");
  return forms_[g.idx].birthday;
}

Engine::DepthScope::DepthScope(Engine& e) : eng_(e) {
  if (eng_.depth_ >= eng_.limits_.max_depth)
    throw resource_error("recursion depth budget exceeded (" +
                         std::to_string(eng_.limits_.max_depth) + ")");
  ++eng_.depth_;
}
Engine::DepthScope::~DepthScope() { --eng_.depth_; }

// ---------------------------------------------------------------------------
// outcome and order

Outcome Engine::outcome(GameId g) {
  if (outcome_memo_.size() < forms_.size()) outcome_memo_.resize(forms_.size(), 0);
  if (std::uint8_t c = outcome_memo_[g.idx]) return static_cast<Outcome>(c - 1);

  DepthScope scope(*this);
  // Left moving first wins iff some left option is >= 0 for Left, i.e. its
  // outcome is L or P; symmetrically for Right.
  bool lf = false;
  for (GameId gl : left_options(g)) {
    Outcome o = outcome(gl);
    if (o == Outcome::L || o == Outcome::P) {
      lf = true;
      break;
    }
  }
  bool rf = false;
  for (GameId gr : right_options(g)) {
    Outcome o = outcome(gr);
    if (o == Outcome::R || o == Outcome::P) {
      rf = true;
      break;
    }
  }
  Outcome res = lf ? (rf ? Outcome::N : Outcome::L) : (rf ? Outcome::R : Outcome::P);
  outcome_memo_[g.idx] = static_cast<std::uint8_t>(res) + 1;
  return res;
}

bool Engine::left_first_wins(GameId g) {
  Outcome o = outcome(g);
  return o == Outcome::L || o == Outcome::N;
}

bool Engine::right_first_wins(GameId g) {
  Outcome o = outcome(g);
  return o == Outcome::R || o == Outcome::N;
}

bool Engine::le(GameId g, GameId h) {
  if (g == h) return true;
  std::uint64_t key = pair_key(g, h);
  if (auto it = le_memo_.find(key); it != le_memo_.end()) return it->second;

  DepthScope scope(*this);
  // g <= h fails iff some gL >= h or some hR <= g.
  bool result = true;
  for (GameId gl : left_options(g)) {
    if (le(h, gl)) {
      result = false;
      break;
    }
  }
  if (result) {
    for (GameId hr : right_options(h)) {
      if (le(hr, g)) {
        result = false;
        break;
      }
    }
  }
  le_memo_.emplace(key, result);
  return result;
}

// ---------------------------------------------------------------------------
// negation and sum

GameId Engine::neg(GameId g) {
  if (neg_memo_.size() < forms_.size()) neg_memo_.resize(forms_.size(), kUnset);
  if (neg_memo_[g.idx] != kUnset) return GameId{neg_memo_[g.idx]};

  DepthScope scope(*this);
  // Copy before recursing: interning may reallocate the option pool.
  std::vector<GameId> gl(left_options(g).begin(), left_options(g).end());
  std::vector<GameId> gr(right_options(g).begin(), right_options(g).end());
  std::vector<GameId> l, r;
  l.reserve(gr.size());
  r.reserve(gl.size());
  for (GameId x : gr) l.push_back(neg(x));
  for (GameId x : gl) r.push_back(neg(x));
  GameId res = make_game(l, r);

  if (neg_memo_.size() < forms_.size()) neg_memo_.resize(forms_.size(), kUnset);
  neg_memo_[g.idx] = res.idx;
  neg_memo_[res.idx] = g.idx;
  return res;
}

GameId Engine::sum(GameId g, GameId h) {
  if (g == zero()) return h;
  if (h == zero()) return g;
  if (h < g) std::swap(g, h);  // commutative: memo on the unordered pair
  std::uint64_t key = pair_key(g, h);
  if (auto it = sum_memo_.find(key); it != sum_memo_.end()) return GameId{it->second};

  DepthScope scope(*this);
  std::vector<GameId> gl(left_options(g).begin(), left_options(g).end());
  std::vector<GameId> gr(right_options(g).begin(), right_options(g).end());
  std::vector<GameId> hl(left_options(h).begin(), left_options(h).end());
  std::vector<GameId> hr(right_options(h).begin(), right_options(h).end());

  std::vector<GameId> l, r;
  l.reserve(gl.size() + hl.size());
  r.reserve(gr.size() + hr.size());
  for (GameId x : gl) l.push_back(sum(x, h));
  for (GameId x : hl) l.push_back(sum(g, x));
  for (GameId x : gr) r.push_back(sum(x, h));
  for (GameId x : hr) r.push_back(sum(g, x));
  GameId res = make_game(l, r);
  sum_memo_.emplace(key, res.idx);
  return res;
}

// ---------------------------------------------------------------------------
// canonical form

// x <= {left|right}?
bool Engine::le_game_virtual(GameId x, std::span<const GameId> left,
                             std::span<const GameId> right) {
  for (GameId xl : left_options(x))
    if (le_virtual_game(left, right, xl)) return false;
  for (GameId r : right)
    if (le(r, x)) return false;
  return true;
}

// {left|right} <= x?
bool Engine::le_virtual_game(std::span<const GameId> left, std::span<const GameId> right,
                             GameId x) {
  for (GameId l : left)
    if (le(x, l)) return false;
  for (GameId xr : right_options(x))
    if (le_game_virtual(xr, left, right)) return false;
  return true;
}

void Engine::remove_dominated(std::vector<GameId>& opts, bool left_side) {
  if (opts.size() < 2) return;

  // Distinct canonical options never share a value, so when all of them are
  // numbers exactly one survives: the max (Left) or min (Right).
  bool all_numbers = true;
  std::optional<DyadicRational> best;
  GameId best_id{};
  for (GameId o : opts) {
    auto v = to_number(o);
    if (!v) {
      all_numbers = false;
      break;
    }
    if (!best || (left_side ? *best < *v : *v < *best)) {
      best = *v;
      best_id = o;
    }
  }
  if (all_numbers) {
    opts.assign(1, best_id);
    return;
  }

  std::vector<GameId> kept;
  kept.reserve(opts.size());
  for (std::size_t i = 0; i < opts.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < opts.size() && !dominated; ++j) {
      if (i == j) continue;
      dominated = left_side ? le(opts[i], opts[j]) : le(opts[j], opts[i]);
    }
    if (!dominated) kept.push_back(opts[i]);
  }
  opts = std::move(kept);
}

GameId Engine::canonical_form(GameId g) {
  if (canonical_memo_.size() < forms_.size()) canonical_memo_.resize(forms_.size(), kUnset);
  if (canonical_memo_[g.idx] != kUnset) return GameId{canonical_memo_[g.idx]};

  DepthScope scope(*this);
  std::vector<GameId> l0(left_options(g).begin(), left_options(g).end());
  std::vector<GameId> r0(right_options(g).begin(), right_options(g).end());
  std::vector<GameId> left, right;
  left.reserve(l0.size());
  right.reserve(r0.size());
  for (GameId x : l0) left.push_back(canonical_form(x));
  for (GameId x : r0) right.push_back(canonical_form(x));
  sort_unique(left);
  sort_unique(right);

  // Fixpoint: remove dominated options, bypass reversible ones. Comparisons
  // run against the virtual form {left|right}, which keeps the same value as
  // g at every step while touching only canonical subgames.
  for (;;) {
    remove_dominated(left, true);
    remove_dominated(right, false);

    bool changed = false;
    for (std::size_t i = 0; i < left.size() && !changed; ++i) {
      GameId gl = left[i];
      std::vector<GameId> glr(right_options(gl).begin(), right_options(gl).end());
      for (GameId through : glr) {
        if (le_game_virtual(through, left, right)) {
          // gl reverses out through `through`: replace it by the left
          // options of `through` (already canonical).
          left.erase(left.begin() + static_cast<std::ptrdiff_t>(i));
          std::vector<GameId> repl(left_options(through).begin(), left_options(through).end());
          for (GameId x : repl) sorted_insert(left, x);
          changed = true;
          break;
        }
      }
    }
    if (changed) continue;
    for (std::size_t i = 0; i < right.size() && !changed; ++i) {
      GameId gr = right[i];
      std::vector<GameId> grl(left_options(gr).begin(), left_options(gr).end());
      for (GameId through : grl) {
        if (le_virtual_game(left, right, through)) {
          right.erase(right.begin() + static_cast<std::ptrdiff_t>(i));
          std::vector<GameId> repl(right_options(through).begin(), right_options(through).end());
          for (GameId x : repl) sorted_insert(right, x);
          changed = true;
          break;
        }
      }
    }
    if (!changed) break;
  }

  GameId res = intern_normalized(std::move(left), std::move(right));
  if (canonical_memo_.size() < forms_.size()) canonical_memo_.resize(forms_.size(), kUnset);
  canonical_memo_[g.idx] = res.idx;
  canonical_memo_[res.idx] = res.idx;
  return res;
}

// ---------------------------------------------------------------------------
// numbers

std::optional<DyadicRational> Engine::to_number(GameId g) {
  GameId c = canonical_form(g);
  if (auto it = number_memo_.find(c.idx); it != number_memo_.end()) return it->second;

  DepthScope scope(*this);
  std::optional<DyadicRational> result;
  auto left = left_options(c);
  auto right = right_options(c);
  // A canonical number has at most one option per side, each a canonical
  // number, with left < right; its value is the simplest number between.
  if (left.size() <= 1 && right.size() <= 1) {
    std::optional<DyadicRational> lo, hi;
    bool numeric = true;
    if (!left.empty()) {
      lo = to_number(left[0]);
      numeric = lo.has_value();
    }
    if (numeric && !right.empty()) {
      hi = to_number(right[0]);
      numeric = hi.has_value();
    }
    if (numeric && (!lo || !hi || *lo < *hi)) result = simplest_between(lo, hi);
  }
  number_memo_.emplace(c.idx, result);
  return result;
}

GameId Engine::number_to_game(const DyadicRational& d) {
  if (auto it = number_form_memo_.find(d); it != number_form_memo_.end()) return it->second;

  GameId res;
  if (d.is_integer()) {
    // Build the integer ladder iteratively: n = {n-1 | } for n > 0.
    std::int64_t n = d.numerator();
    std::int64_t steps = n < 0 ? -n : n;
    GameId cur = zero();
    number_form_memo_.emplace(DyadicRational(0), cur);
    for (std::int64_t k = 1; k <= steps; ++k) {
      cur = n > 0 ? make_game({cur}, {}) : make_game({}, {cur});
      number_form_memo_.emplace(DyadicRational(n > 0 ? k : -k), cur);
    }
    res = cur;
  } else {
    DepthScope scope(*this);
    GameId lo = number_to_game(DyadicRational::make(d.numerator() - 1, d.exponent()));
    GameId hi = number_to_game(DyadicRational::make(d.numerator() + 1, d.exponent()));
    res = make_game({lo}, {hi});
    number_form_memo_.emplace(d, res);
  }
  return res;
}

Engine::SideSummary Engine::summarize(std::span<const GameId> opts, bool left_side) {
  SideSummary s;
  std::vector<GameId> copy(opts.begin(), opts.end());  // to_number may intern
  for (GameId o : copy) {
    auto v = to_number(o);
    if (!v) {
      s.all_numbers = false;
      s.empty = false;
      return s;
    }
    if (s.empty || (left_side ? s.best < *v : *v < s.best)) {
      s.best = *v;
      s.best_option = o;
    }
    s.empty = false;
  }
  return s;
}

Engine::SideSummary Engine::left_summary(GameId g) {
  if (auto it = left_summary_memo_.find(g.idx); it != left_summary_memo_.end())
    return it->second;
  SideSummary s = summarize(left_options(g), true);
  left_summary_memo_.emplace(g.idx, s);
  return s;
}

Engine::SideSummary Engine::right_summary(GameId g) {
  if (auto it = right_summary_memo_.find(g.idx); it != right_summary_memo_.end())
    return it->second;
  SideSummary s = summarize(right_options(g), false);
  right_summary_memo_.emplace(g.idx, s);
  return s;
}

bool Engine::incentives_negative(GameId g) {
  std::vector<GameId> gl(left_options(g).begin(), left_options(g).end());
  std::vector<GameId> gr(right_options(g).begin(), right_options(g).end());
  auto vg = to_number(g);
  for (GameId x : gl) {
    // gL - g < 0, i.e. gL < g
    if (auto vx = to_number(x); vx && vg) {
      if (!(*vx < *vg)) return false;
    } else if (outcome(sum(x, neg(g))) != Outcome::R) {
      return false;
    }
  }
  for (GameId x : gr) {
    // g - gR < 0, i.e. g < gR
    if (auto vx = to_number(x); vx && vg) {
      if (!(*vg < *vx)) return false;
    } else if (outcome(sum(g, neg(x))) != Outcome::R) {
      return false;
    }
  }
  return true;
}

}  // namespace numbergate
