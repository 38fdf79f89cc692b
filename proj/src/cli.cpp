#include "numbergate/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "numbergate/closure.hpp"
#include "numbergate/engine.hpp"
#include "numbergate/properties.hpp"
#include "numbergate/rulesets.hpp"

namespace numbergate::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitBudget = 2;
constexpr int kExitParse = 3;

struct CommonArgs {
  std::string game;                // game literal (repeatable where noted)
  std::vector<std::string> games;
  std::string ruleset;
  std::vector<std::string> seeds;
  std::size_t max_positions = Limits{}.max_positions;
  std::size_t max_arena = Limits{}.max_arena;
  std::string format = "json";
  std::string x_set_text;
  std::string emit_positions;
  bool audit_fastpath = false;
};

Limits to_limits(const CommonArgs& a) {
  Limits lim;
  lim.max_positions = a.max_positions;
  lim.max_arena = a.max_arena;
  return lim;
}

std::vector<DyadicRational> parse_x_set(const std::string& text) {
  if (text.empty()) return default_x_set();
  std::vector<DyadicRational> xs;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      std::string part = text.substr(start, i - start);
      auto d = DyadicRational::parse(part);
      if (!d) throw parse_error("x-set: bad number '" + part + "'", start);
      xs.push_back(*d);
      start = i + 1;
    }
  }
  return xs;
}

json x_set_json(const std::vector<DyadicRational>& xs) {
  json arr = json::array();
  for (const auto& x : xs) arr.push_back(x.to_string());
  return arr;
}

json value_or_null(const std::optional<DyadicRational>& v) {
  return v ? json(v->to_string()) : json(nullptr);
}

// A single game or position input; positions remember their ruleset.
struct GameInput {
  GameId id;
  std::string echo_game;                // literal, when given as --game
  std::optional<std::string> position;  // rendered, when given as --seed
};

json input_json(const GameInput& in) {
  json j;
  if (in.position) {
    j["position"] = *in.position;
  } else {
    j["game"] = in.echo_game;
  }
  return j;
}

class Command {
 public:
  Command(std::string name, const CommonArgs& args) : args_(args), engine_(to_limits(args)) {
    report_["schema"] = "numbergate/1";
    report_["command"] = std::move(name);
    report_["config"] = json::object();
    config()["max_positions"] = args.max_positions;
    config()["max_arena"] = args.max_arena;
  }

  json& config() { return report_["config"]; }
  Engine& engine() { return engine_; }

  GameInput load_game(const std::string& literal) {
    return GameInput{engine_.parse_game(literal), literal, std::nullopt};
  }

  GameInput load_seed(const std::string& seed) {
    GameInput in;
    AnyRuleset rs = make_ruleset(args_.ruleset);
    std::visit(
        [&](const auto& r) {
          auto pos = r.parse(seed);
          PositionMapper mapper(engine_, r);
          in.id = mapper.to_game(pos);
          in.position = r.render(pos);
        },
        rs);
    in.echo_game = seed;
    return in;
  }

  // Resolves the k-th input: --game literals or --seed texts, never mixed.
  GameInput load_input(std::size_t k = 0) {
    if (!args_.ruleset.empty()) {
      if (k >= args_.seeds.size()) throw domain_error("missing --seed argument");
      return load_seed(args_.seeds[k]);
    }
    if (k >= args_.games.size()) throw domain_error("missing --game argument");
    return load_game(args_.games[k]);
  }

  void finish(std::string status, json result, std::string kind = {}) {
    report_["status"] = std::move(status);
    if (!kind.empty()) report_["kind"] = kind;
    report_["result"] = std::move(result);
  }

  void fail(std::string status, const std::string& message) {
    report_["status"] = std::move(status);
    report_["error"] = message;
  }

  int emit(std::ostream& out, const std::string& format) const {
    if (format == "text") {
      print_text(out, "", report_);
    } else {
      out << report_.dump(2) << "\n";
    }
    const std::string& status = report_["status"].get_ref<const std::string&>();
    if (status == "ok") return kExitOk;
    if (status == "violated") return kExitViolated;
    if (status == "budget-exceeded") return kExitBudget;
    return kExitParse;
  }

 private:
  static void print_text(std::ostream& out, const std::string& prefix, const json& j) {
    if (j.is_object()) {
      for (const auto& [key, value] : j.items())
        print_text(out, prefix.empty() ? key : prefix + "." + key, value);
    } else if (j.is_array()) {
      std::size_t i = 0;
      for (const auto& value : j)
        print_text(out, prefix + "[" + std::to_string(i++) + "]", value);
      if (j.empty()) out << prefix << ": []\n";
    } else {
      out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
  }

  const CommonArgs& args_;
  Engine engine_;
  json report_;
};

json game_report(Command& cmd, const GameInput& in) {
  Engine& eng = cmd.engine();
  json r = input_json(in);
  r["value"] = value_or_null(eng.to_number(in.id));
  r["outcome"] = std::string(to_string(eng.outcome(in.id)));
  r["canonical"] = eng.render_form(eng.canonical_form(in.id));
  r["birthday"] = eng.birthday(in.id);
  return r;
}

json classification_json(Engine& eng, const PairClassification& pc) {
  json p;
  p["left"] = eng.render_game(pc.left_option);
  p["right"] = eng.render_game(pc.right_option);
  p["f1"] = pc.f1;
  if (pc.f1_witness) {
    json w;
    w["side"] = pc.f1_witness->side == F1Witness::Side::RL ? "RL" : "LR";
    w["option"] = eng.render_game(pc.f1_witness->option);
    w["strict"] = pc.f1_witness->strict;
    p["f1_witness"] = std::move(w);
  } else {
    p["f1_witness"] = nullptr;
  }
  p["f1_strict"] = pc.f1_strict;
  p["f2"] = pc.f2;
  if (pc.f2_witness) {
    json w;
    w["lr"] = eng.render_game(pc.f2_witness->first);
    w["rl"] = eng.render_game(pc.f2_witness->second);
    p["f2_witness"] = std::move(w);
  } else {
    p["f2_witness"] = nullptr;
  }
  return p;
}

json con_probe_json(const ConProbeResult& probe) {
  json c;
  c["verdict"] = std::string(to_string(probe.verdict));
  c["sums_checked"] = probe.sums_checked;
  if (probe.verdict == ConProbeResult::Verdict::kWitnessFound ||
      probe.verdict == ConProbeResult::Verdict::kForwardViolation) {
    json w;
    w["position"] = probe.witness_position;
    w["x"] = probe.witness_x;
    c["witness"] = std::move(w);
  } else {
    c["witness"] = nullptr;
  }
  return c;
}

json closure_report_json(const ClosureReport& rep) {
  json r;
  r["position_count"] = rep.position_count;
  r["pair_count"] = rep.pair_count;
  json counts;
  counts["f1_only"] = rep.f1_only;
  counts["f2_only"] = rep.f2_only;
  counts["both"] = rep.both;
  counts["neither"] = rep.neither;
  r["class_counts"] = std::move(counts);
  json nw = json::array();
  for (const auto& w : rep.neither_witnesses) {
    json e;
    e["position"] = w.position;
    e["left"] = w.left;
    e["right"] = w.right;
    nw.push_back(std::move(e));
  }
  r["neither_witnesses"] = std::move(nw);
  r["all_numbers"] = rep.all_numbers;
  r["all_f1"] = rep.all_f1;
  r["all_f2"] = rep.all_f2;
  r["all_integers_claim"] = rep.all_integers_claim;
  r["snc_consistent"] = rep.snc_consistent;
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json e;
    e["check"] = c.name;
    e["verdict"] = c.verdict;
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  r["checks"] = std::move(checks);
  json fp;
  fp["enabled"] = rep.fastpath.enabled;
  fp["audited"] = rep.fastpath.audited;
  fp["f1_fired"] = rep.fastpath.f1_fired;
  fp["f2_fired"] = rep.fastpath.f2_fired;
  fp["mismatches"] = rep.fastpath.mismatches;
  r["fastpath"] = std::move(fp);
  r["con_probe"] = con_probe_json(rep.con_probe);
  json values = json::array();
  for (const auto& [pos, val] : rep.values) {
    json e;
    e["position"] = pos;
    e["value"] = value_or_null(val);
    values.push_back(std::move(e));
  }
  r["values"] = std::move(values);
  return r;
}

void emit_positions_file(const std::string& path, const ClosureReport& rep) {
  std::ofstream f(path);
  if (!f) throw domain_error("cannot open '" + path + "' for writing");
  for (const auto& [pos, val] : rep.values) f << pos << "\n";
}

// status/kind assembly for probe-style commands
void finish_closure(Command& cmd, const ClosureReport& rep, json result) {
  if (rep.theorem_violated())
    cmd.finish("violated", std::move(result), "theorem-violation");
  else if (rep.predicted_witness_found())
    cmd.finish("violated", std::move(result), "predicted-witness");
  else
    cmd.finish("ok", std::move(result));
}

int run_impl(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"numbergate: partizan game values and first-move-disadvantage checks"};
  app.require_subcommand(1);
  CommonArgs a;

  auto add_common = [&a](CLI::App* sub, bool games_repeat, bool with_ruleset) {
    if (games_repeat)
      sub->add_option("--game", a.games, "game literal, e.g. \"{0|1}\"");
    else
      sub->add_option("--game", a.game, "game literal, e.g. \"{0|1}\"");
    if (with_ruleset) {
      sub->add_option("--ruleset", a.ruleset,
                      "ruleset name: divisors, turtles, chomp, cutcake, hackenbush, subtraction");
      sub->add_option("--seed", a.seeds, "position in the ruleset's seed grammar");
    }
    sub->add_option("--max-positions", a.max_positions, "closure position budget");
    sub->add_option("--max-arena", a.max_arena, "interned form budget");
    sub->add_option("--format", a.format, "json|text")->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* value = app.add_subcommand("value", "value, outcome and canonical form");
  add_common(value, true, true);
  CLI::App* canonical = app.add_subcommand("canonical", "canonical form only");
  add_common(canonical, true, true);
  CLI::App* outcome = app.add_subcommand("outcome", "outcome class only");
  add_common(outcome, true, true);
  CLI::App* sum = app.add_subcommand("sum", "disjunctive sum of two inputs");
  add_common(sum, true, true);
  CLI::App* classify = app.add_subcommand("classify-pairs", "f1/f2 verdicts for option pairs");
  add_common(classify, true, true);
  CLI::App* closure = app.add_subcommand("closure-check", "verify a hereditarily closed set");
  add_common(closure, false, true);
  closure->add_option("--x-set", a.x_set_text, "comma-separated numbers for the sum probe");
  closure->add_flag("--audit-fastpath", a.audit_fastpath,
                    "run value checks alongside the identity fast path");
  closure->add_option("--emit-positions", a.emit_positions, "write closure positions to a file");
  CLI::App* con = app.add_subcommand("confirm-con", "outcome probe over a closure");
  add_common(con, false, true);
  con->add_option("--x-set", a.x_set_text, "comma-separated numbers for the sum probe");
  con->add_option("--emit-positions", a.emit_positions, "write closure positions to a file");
  CLI::App* avoid = app.add_subcommand("avoidance-probe", "number avoidance spot check");
  avoid->add_option("--number", a.game, "a game literal that is a number");
  add_common(avoid, true, true);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream usage;
    int rc = app.exit(e, usage, usage);
    (rc == 0 ? out : err) << usage.str();
    return rc == 0 ? kExitOk : kExitParse;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  Command cmd(name, a);

  try {
    if (name == "value" || name == "canonical" || name == "outcome") {
      if (!a.ruleset.empty()) cmd.config()["ruleset"] = a.ruleset;
      GameInput in = cmd.load_input();
      json r = input_json(in);
      if (name == "value") r = game_report(cmd, in);
      if (name == "canonical")
        r["canonical"] = cmd.engine().render_form(cmd.engine().canonical_form(in.id));
      if (name == "outcome")
        r["outcome"] = std::string(to_string(cmd.engine().outcome(in.id)));
      cmd.finish("ok", std::move(r));
    } else if (name == "sum") {
      if (!a.ruleset.empty()) cmd.config()["ruleset"] = a.ruleset;
      GameInput lhs = cmd.load_input(0);
      GameInput rhs = cmd.load_input(1);
      Engine& eng = cmd.engine();
      GameId total = eng.sum(lhs.id, rhs.id);
      json r;
      r["lhs"] = input_json(lhs);
      r["rhs"] = input_json(rhs);
      r["value"] = value_or_null(eng.to_number(total));
      r["outcome"] = std::string(to_string(eng.outcome(total)));
      r["canonical"] = eng.render_form(eng.canonical_form(total));
      cmd.finish("ok", std::move(r));
    } else if (name == "classify-pairs") {
      if (!a.ruleset.empty()) cmd.config()["ruleset"] = a.ruleset;
      Engine& eng = cmd.engine();
      json r;
      json pairs = json::array();
      if (!a.ruleset.empty()) {
        AnyRuleset rs = make_ruleset(a.ruleset);
        if (a.seeds.empty()) throw domain_error("missing --seed argument");
        std::visit(
            [&](const auto& rsv) {
              auto pos = rsv.parse(a.seeds[0]);
              r["position"] = rsv.render(pos);
              PositionMapper mapper(eng, rsv);
              GameId g = mapper.to_game(pos);
              auto lmoves = rsv.left_moves(pos);
              auto rmoves = rsv.right_moves(pos);
              for (const auto& lp : lmoves) {
                for (const auto& rp : rmoves) {
                  PairClassification pc =
                      classify_pair(eng, g, mapper.to_game(lp), mapper.to_game(rp));
                  json pj = classification_json(eng, pc);
                  pj["left_position"] = rsv.render(lp);
                  pj["right_position"] = rsv.render(rp);
                  pairs.push_back(std::move(pj));
                }
              }
            },
            rs);
      } else {
        GameInput in = cmd.load_input();
        r = input_json(in);
        std::vector<GameId> lo(eng.left_options(in.id).begin(), eng.left_options(in.id).end());
        std::vector<GameId> ro(eng.right_options(in.id).begin(), eng.right_options(in.id).end());
        for (GameId gl : lo)
          for (GameId gr : ro)
            pairs.push_back(classification_json(eng, classify_pair(eng, in.id, gl, gr)));
      }
      r["pair_count"] = pairs.size();
      r["pairs"] = std::move(pairs);
      cmd.finish("ok", std::move(r));
    } else if (name == "closure-check" || name == "confirm-con") {
      if (a.ruleset.empty()) throw domain_error(name + " requires --ruleset");
      if (a.seeds.empty()) throw domain_error(name + " requires at least one --seed");
      cmd.config()["ruleset"] = a.ruleset;
      cmd.config()["seeds"] = a.seeds;
      std::vector<DyadicRational> xs = parse_x_set(a.x_set_text);
      cmd.config()["x_set"] = x_set_json(xs);
      if (name == "closure-check") cmd.config()["audit_fastpath"] = a.audit_fastpath;

      AnyRuleset rs = make_ruleset(a.ruleset);
      std::visit(
          [&](const auto& rsv) {
            using Pos = typename std::decay_t<decltype(rsv)>::position_type;
            std::vector<Pos> seeds;
            seeds.reserve(a.seeds.size());
            for (const auto& s : a.seeds) seeds.push_back(rsv.parse(s));
            Engine& eng = cmd.engine();
            if (name == "closure-check") {
              CheckOptions copts;
              copts.x_set = xs;
              copts.audit_fastpath = a.audit_fastpath;
              ClosureReport rep = check_closure(eng, rsv, seeds, copts);
              if (!a.emit_positions.empty()) emit_positions_file(a.emit_positions, rep);
              finish_closure(cmd, rep, closure_report_json(rep));
            } else {
              std::vector<Pos> closure = hcr_closure(rsv, seeds, eng.limits());
              PositionMapper mapper(eng, rsv);
              std::vector<GameId> ids;
              std::vector<std::string> rendered;
              std::vector<std::optional<DyadicRational>> values;
              for (const Pos& p : closure) {
                ids.push_back(mapper.to_game(p));
                rendered.push_back(rsv.render(p));
              }
              bool all_numbers = true;
              for (GameId id : ids) {
                values.push_back(eng.to_number(id));
                if (!values.back()) all_numbers = false;
              }
              if (!a.emit_positions.empty()) {
                std::ofstream f(a.emit_positions);
                if (!f) throw domain_error("cannot open '" + a.emit_positions + "'");
                for (const auto& p : rendered) f << p << "\n";
              }
              ConProbeResult probe = run_con_probe(eng, rendered, ids, values, xs);
              json r;
              r["position_count"] = closure.size();
              r["all_numbers"] = all_numbers;
              r["con_probe"] = con_probe_json(probe);
              if (probe.verdict == ConProbeResult::Verdict::kForwardViolation)
                cmd.finish("violated", std::move(r), "theorem-violation");
              else if (probe.verdict == ConProbeResult::Verdict::kWitnessFound)
                cmd.finish("violated", std::move(r), "predicted-witness");
              else
                cmd.finish("ok", std::move(r));
            }
          },
          rs);
    } else if (name == "avoidance-probe") {
      Engine& eng = cmd.engine();
      if (a.game.empty()) throw domain_error("avoidance-probe requires --number");
      GameId g = eng.parse_game(a.game);
      if (!a.ruleset.empty()) cmd.config()["ruleset"] = a.ruleset;
      GameInput h = cmd.load_input();
      AvoidanceProbe probe = number_avoidance_probe(eng, g, h.id);
      json r;
      r["number"] = a.game;
      r["game"] = input_json(h);
      r["left_first_wins_sum"] = probe.left_applicable;
      r["left_witness"] =
          probe.left_witness ? json(eng.render_game(*probe.left_witness)) : json(nullptr);
      r["right_first_wins_sum"] = probe.right_applicable;
      r["right_witness"] =
          probe.right_witness ? json(eng.render_game(*probe.right_witness)) : json(nullptr);
      r["passed"] = probe.passed;
      if (probe.passed)
        cmd.finish("ok", std::move(r));
      else
        cmd.finish("violated", std::move(r), "theorem-violation");
    }
  } catch (const parse_error& e) {
    cmd.fail("parse-error", std::string(e.what()) + " (offset " + std::to_string(e.offset) + ")");
  } catch (const domain_error& e) {
    cmd.fail("parse-error", e.what());
  } catch (const resource_error& e) {
    cmd.fail("budget-exceeded", e.what());
  }
  return cmd.emit(out, a.format);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run_impl(args, out, err);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitViolated;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace numbergate::cli
