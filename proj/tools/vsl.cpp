// vsl: command-line front end.
//
// Exit codes
//   reach:    0 reachable, 1 exhausted (no run), 2 unknown within bounds
//   decide:   0 run found, 1 separator found, 2 undecided
//   check-*:  0 all conditions hold, 1 some condition refuted, 2 otherwise
//   bezout, zero-path, pump, separators: 0 found, 1 none
//   3 bad input, 4 internal error

#include "vsl/checker.hpp"
#include "vsl/constructions.hpp"
#include "vsl/explore.hpp"
#include "vsl/numtheory.hpp"
#include "vsl/report.hpp"
#include "vsl/separator.hpp"
#include "vsl/text_format.hpp"
#include "vsl/wqo.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

using nlohmann::json;
namespace fs = std::filesystem;
using vsl::Int;
using vsl::IntVec;
using vsl::Rational;

namespace {

constexpr int kBadInput = 3;
constexpr int kInternal = 4;

struct Output {
  std::string text;  // everything goes to stdout in one write at the end
  void add(const std::string& s) { text += s; }
  void add(const json& j) { text += j.dump(2) + "\n"; }
};

IntVec parse_vec(const std::string& s) {
  IntVec v;
  std::string tok;
  std::istringstream in(s);
  while (std::getline(in, tok, ',')) {
    std::istringstream w(tok);
    std::string part;
    while (w >> part) {
      v.push_back(vsl::parse_int(part));
    }
  }
  return v;
}

IntVec json_vec(const json& j) {
  IntVec v;
  for (const auto& x : j) {
    v.push_back(x.is_string() ? vsl::parse_int(x.get<std::string>()) : Int(x.get<std::int64_t>()));
  }
  return v;
}

// Problem descriptor: either a JSON file or inline flags.
struct Problem {
  std::string problem_path;
  std::string vass_path;
  std::string s_text, t_text;
  long long norm_bound = 100;
  long long max_length = -1;
  long long node_budget = -1;

  json desc = json::object();
  std::optional<vsl::Vass> vass;
  vsl::Configuration s, t;

  void add_options(CLI::App* cmd) {
    cmd->add_option("--problem", problem_path, "JSON problem descriptor");
    cmd->add_option("--vass", vass_path, "VASS file");
    cmd->add_option("-s,--source", s_text, "source configuration, e.g. \"q 0 1\"");
    cmd->add_option("-t,--target", t_text, "target configuration");
    cmd->add_option("--norm-bound", norm_bound, "max counter norm");
    cmd->add_option("--max-length", max_length, "max run length");
    cmd->add_option("--node-budget", node_budget, "max explored configurations");
  }

  void load() {
    fs::path base = ".";
    if (!problem_path.empty()) {
      try {
        desc = json::parse(vsl::read_file(problem_path));
      } catch (const json::exception& e) {
        throw vsl::VslError(vsl::ErrorKind::Parse, problem_path + ": " + e.what());
      }
      base = fs::path(problem_path).parent_path();
      if (vass_path.empty() && desc.contains("vass")) {
        vass_path = (base / desc["vass"].get<std::string>()).string();
      }
      if (s_text.empty() && desc.contains("s")) s_text = desc["s"].get<std::string>();
      if (t_text.empty() && desc.contains("t")) t_text = desc["t"].get<std::string>();
      if (desc.contains("bounds")) {
        const json& b = desc["bounds"];
        if (b.contains("norm")) norm_bound = b["norm"].get<long long>();
        if (b.contains("length")) max_length = b["length"].get<long long>();
        if (b.contains("nodes")) node_budget = b["nodes"].get<long long>();
      }
    }
    if (vass_path.empty()) {
      throw vsl::VslError(vsl::ErrorKind::Parse, "no VASS given (--vass or --problem)");
    }
    vass = vsl::parse_vass(vsl::read_file(vass_path));
    if (s_text.empty() || t_text.empty()) {
      throw vsl::VslError(vsl::ErrorKind::Parse, "source and target configurations are required");
    }
    s = vsl::parse_configuration(*vass, s_text);
    t = vsl::parse_configuration(*vass, t_text);
  }

  vsl::SearchBounds bounds() const {
    vsl::SearchBounds b;
    b.norm_bound = Int(norm_bound);
    if (max_length >= 0) b.length_bound = static_cast<std::size_t>(max_length);
    if (node_budget >= 0) b.node_budget = static_cast<std::size_t>(node_budget);
    return b;
  }

  vsl::StateId state(const char* key) const {
    if (!desc.contains(key)) {
      throw vsl::VslError(vsl::ErrorKind::Parse, std::string("descriptor lacks '") + key + "'");
    }
    return vass->state(desc[key].get<std::string>());
  }

  IntVec vec(const char* key) const {
    if (!desc.contains(key)) {
      throw vsl::VslError(vsl::ErrorKind::Parse, std::string("descriptor lacks '") + key + "'");
    }
    IntVec v = json_vec(desc[key]);
    if (v.size() != vass->dim()) {
      throw vsl::VslError(vsl::ErrorKind::DimensionMismatch, std::string("'") + key + "' has wrong length");
    }
    return v;
  }
};

std::optional<std::chrono::milliseconds> env_budget() {
  if (const char* ms = std::getenv("VSL_BUDGET_MS")) {
    try {
      return std::chrono::milliseconds(std::stoll(ms));
    } catch (const std::exception&) {
      throw vsl::VslError(vsl::ErrorKind::Parse, "VSL_BUDGET_MS is not a number");
    }
  }
  return std::nullopt;
}

int cmd_reach(Problem& p, Output& out) {
  p.load();
  const auto v = vsl::shortest_run(*p.vass, p.s, p.t, p.bounds());
  out.add(vsl::envelope("reach", vsl::to_json(*p.vass, v)));
  switch (v.kind) {
    case vsl::ReachVerdict::Kind::Reachable: return 0;
    case vsl::ReachVerdict::Kind::Exhausted: return 1;
    default: return 2;
  }
}

struct DecideArgs {
  std::size_t max_run_length = 64;
  std::size_t max_separator_size = 4;
  long long sample_box = 10;
  std::string separator_out;
};

int cmd_decide(Problem& p, const DecideArgs& a, bool deterministic, Output& out) {
  p.load();
  vsl::DualSchedule sch;
  sch.max_run_length = a.max_run_length;
  sch.max_separator_size = a.max_separator_size;
  sch.run_norm_bound = Int(p.norm_bound);
  sch.separator.sample_box = Int(a.sample_box);
  sch.parallel = !deterministic;
  sch.tier_budget = env_budget();
  const auto v = vsl::decide_dual(*p.vass, p.s, p.t, sch);
  json body = vsl::to_json(*p.vass, v);
  body["budgets"] = {{"max_run_length", a.max_run_length},
                     {"max_separator_size", a.max_separator_size},
                     {"run_norm_bound", p.norm_bound},
                     {"sample_box", a.sample_box},
                     {"deterministic", deterministic}};
  if (v.separator && !a.separator_out.empty()) {
    vsl::write_file(a.separator_out, vsl::format_semilinear(*p.vass, *v.separator));
  }
  out.add(vsl::envelope("decide", body));
  switch (v.kind) {
    case vsl::DualVerdict::Kind::RunFound: return 0;
    case vsl::DualVerdict::Kind::SeparatorFound: return 1;
    default: return 2;
  }
}

int cmd_separators(Problem& p, std::size_t budget, long long sample_box, Output& out) {
  p.load();
  vsl::SeparatorOptions opt;
  opt.sample_box = Int(sample_box);
  json seps = json::array();
  try {
    for (const auto& sep : vsl::minimal_separators(*p.vass, p.s, p.t, budget, opt)) {
      json j = vsl::to_json(*p.vass, sep);
      j["text"] = vsl::format_semilinear(*p.vass, sep);
      seps.push_back(std::move(j));
    }
  } catch (const vsl::VslError& e) {
    if (e.kind() != vsl::ErrorKind::BudgetExhausted) throw;
    out.add(vsl::envelope("separators", {{"separators", seps}, {"budget", budget}, {"diagnostics", {e.what()}}}));
    return 1;
  }
  out.add(vsl::envelope("separators", {{"separators", seps}, {"budget", budget}}));
  return 0;
}

vsl::FractionSchedule parse_schedule(std::size_t n, const std::string& fractions) {
  if (fractions.empty()) {
    if (n != 1) {
      throw vsl::VslError(vsl::ErrorKind::InvalidSchedule, "--fractions is required for n > 1");
    }
    return vsl::FractionSchedule::standard();
  }
  vsl::FractionSchedule sched;
  std::istringstream in(fractions);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    const Rational r = vsl::parse_rational(tok);
    sched.fractions.emplace_back(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
  }
  if (sched.n() != n) {
    throw vsl::VslError(vsl::ErrorKind::InvalidSchedule, "--fractions must list n fractions");
  }
  return sched;
}

struct GenArgs {
  std::string kind;
  std::size_t n = 1;
  std::string fractions;
  std::string out_prefix;
  long long bound = 2;
  std::string loop = "1,2";
  std::string vass_path, state, lin1, lin2;
};

int cmd_gen(const GenArgs& a, Output& out) {
  std::optional<vsl::Vass> vass;
  json side = json::object();
  auto conf = [&](const vsl::Configuration& c) { return vsl::format_configuration(*vass, c); };
  if (a.kind == "un") {
    auto u = vsl::build_Un(parse_schedule(a.n, a.fractions));
    vass = std::move(u.vass);
    side["s"] = conf(u.initial);
    side["t"] = conf(u.accepting);
    side["f"] = vsl::to_string(u.f);
    side["big_n"] = vsl::to_string(u.big_n);
  } else if (a.kind == "vn") {
    auto v = vsl::build_Vn(parse_schedule(a.n, a.fractions));
    vass = std::move(v.vass);
    side["s"] = conf(v.s);
    side["t"] = conf(v.t);
    side["q"] = vass->state_name(v.q);
    side["a"] = vsl::to_json(v.a);
    side["delta"] = vsl::to_json(v.delta);
    side["f"] = vsl::to_string(v.f);
    side["big_n"] = vsl::to_string(v.big_n);
  } else if (a.kind == "toy-slope") {
    auto f = vsl::build_toy_slope(parse_vec(a.loop));
    vass = std::move(f.vass);
    side["s"] = conf(f.s);
    side["t"] = conf(f.t);
    side["q"] = vass->state_name(f.q);
    side["a"] = vsl::to_json(f.a);
    side["delta"] = vsl::to_json(f.delta);
  } else if (a.kind == "gadget-b" || a.kind == "zero-test") {
    auto g = a.kind == "gadget-b" ? vsl::build_gadget_B() : vsl::build_zero_test_gadget(Int(a.bound));
    vass = std::move(g.vass);
    side["s"] = conf(g.entry);
    side["exit"] = vass->state_name(g.exit);
  } else if (a.kind == "modify") {
    if (a.vass_path.empty() || a.state.empty() || a.lin1.empty() || a.lin2.empty()) {
      throw vsl::VslError(vsl::ErrorKind::Parse, "modify needs --vass, --state, --lin1 and --lin2");
    }
    const vsl::Vass in = vsl::parse_vass(vsl::read_file(a.vass_path));
    const vsl::LinearFunction l1(parse_vec(a.lin1)), l2(parse_vec(a.lin2));
    vass = vsl::modify_vass(in, in.state(a.state), l1, l2);
    side["q"] = a.state;
    side["lin1"] = vsl::to_json(l1.coeffs());
    side["lin2"] = vsl::to_json(l2.coeffs());
    json loops = json::array();
    for (const IntVec& l : vsl::modification_loops(l1, l2)) loops.push_back(vsl::to_json(l));
    side["loops"] = loops;
  } else {
    throw vsl::VslError(vsl::ErrorKind::Parse, "unknown generator '" + a.kind + "'");
  }
  const std::string text = vsl::format_vass(*vass);
  if (a.out_prefix.empty()) {
    out.add(text);
    return 0;
  }
  const std::string vass_file = a.out_prefix + ".vass";
  side["vass"] = fs::path(vass_file).filename().string();
  vsl::write_file(vass_file, text);
  vsl::write_file(a.out_prefix + ".json", vsl::envelope("gen", side).dump(2) + "\n");
  out.add(vsl::envelope("gen", {{"kind", a.kind}, {"files", {vass_file, a.out_prefix + ".json"}}}));
  return 0;
}

int check_exit(const vsl::CheckReport& r) {
  for (const auto& c : r.conditions) {
    if (c.status == vsl::CheckStatus::Refuted) return 1;
  }
  return r.all_hold() ? 0 : 2;
}

int cmd_check1(Problem& p, Output& out) {
  p.load();
  vsl::LineSpec line{p.vec("a"), p.vec("delta")};
  vsl::SimpleSamples samples;
  if (p.desc.contains("samples")) {
    const json& s = p.desc["samples"];
    if (s.contains("n")) samples.n = s["n"].get<std::vector<std::size_t>>();
    if (s.contains("m")) samples.m = s["m"].get<std::vector<std::size_t>>();
  }
  const auto r = vsl::check_thm_simple(*p.vass, p.s, p.t, p.state("q"), line, p.bounds(), samples);
  out.add(vsl::envelope("check-thm1", vsl::to_json(*p.vass, r)));
  return check_exit(r);
}

int cmd_check2(Problem& p, Output& out) {
  p.load();
  const vsl::LinearFunction l1(p.vec("lin1")), l2(p.vec("lin2"));
  if (!p.desc.contains("r")) {
    throw vsl::VslError(vsl::ErrorKind::Parse, "descriptor lacks 'r'");
  }
  const Rational r = vsl::parse_rational(p.desc["r"].get<std::string>());
  vsl::AdvancedOptions opt;
  if (p.desc.contains("offsets")) {
    for (const auto& u : p.desc["offsets"]) opt.offsets.push_back(json_vec(u));
  }
  if (p.desc.contains("run_length")) opt.run_length = p.desc["run_length"].get<std::size_t>();
  const auto rep = vsl::check_thm_advanced(*p.vass, p.s, p.t, p.state("q"), l1, l2, r, p.bounds(), opt);
  out.add(vsl::envelope("check-thm2", vsl::to_json(*p.vass, rep)));
  return check_exit(rep);
}

int cmd_pump(const std::string& vass_path, const std::string& small_path, const std::string& large_path,
             std::size_t n, const std::string& run_out, Output& out) {
  const vsl::Vass vass = vsl::parse_vass(vsl::read_file(vass_path));
  const vsl::Run small = vsl::parse_run(vass, vsl::read_file(small_path));
  const vsl::Run large = vsl::parse_run(vass, vsl::read_file(large_path));
  const auto emb = vsl::find_embedding(small, large, vsl::Anchor::TargetAnchored);
  if (!emb) {
    out.add(vsl::envelope("pump", {{"embedding", nullptr}}));
    return 1;
  }
  const vsl::Run pumped = vsl::pump_run(vass, small, large, *emb, n);
  if (!run_out.empty()) vsl::write_file(run_out, vsl::format_run(vass, pumped));
  out.add(vsl::envelope("pump", {{"embedding", emb->indices}, {"n", n}, {"run", vsl::to_json(vass, pumped)}}));
  return 0;
}

int cmd_bezout(const std::vector<std::string>& coeffs, const std::string& target, Output& out) {
  std::vector<Int> a;
  for (const auto& c : coeffs) a.push_back(vsl::parse_int(c));
  const Int s = vsl::parse_int(target);
  const auto sol = vsl::bezout_nonneg(a, s);
  json body = {{"coefficients", vsl::to_json(a)}, {"target", vsl::to_string(s)}};
  if (!sol) {
    body["solution"] = nullptr;
    out.add(vsl::envelope("bezout", body));
    return 1;
  }
  body["solution"] = vsl::to_json(*sol);
  out.add(vsl::envelope("bezout", body));
  return 0;
}

int cmd_zero_path(const std::string& lin, const std::string& u, const std::string& v, Output& out) {
  const auto path = vsl::zero_run_path(vsl::LinearFunction(parse_vec(lin)), parse_vec(u), parse_vec(v));
  if (!path) {
    out.add(vsl::envelope("zero-path", {{"path", nullptr}}));
    return 1;
  }
  json j = vsl::to_json(*path);
  json steps = json::array();
  for (const IntVec& st : path->steps()) steps.push_back(vsl::to_json(st));
  j["steps"] = steps;
  out.add(vsl::envelope("zero-path", {{"path", j}}));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"VASS reachability and semilinear separators"};
  app.require_subcommand(1);
  bool deterministic = false;
  app.add_flag("--deterministic", deterministic, "sequential scheduling in decide");

  Problem problem;
  auto* reach = app.add_subcommand("reach", "bounded shortest run");
  problem.add_options(reach);

  DecideArgs dargs;
  auto* decide = app.add_subcommand("decide", "alternate run and separator search");
  problem.add_options(decide);
  decide->add_option("--max-run-length", dargs.max_run_length);
  decide->add_option("--max-separator-size", dargs.max_separator_size);
  decide->add_option("--sample-box", dargs.sample_box);
  decide->add_option("--separator-out", dargs.separator_out, "write the separator here");

  std::size_t sep_budget = 4;
  long long sep_box = 10;
  auto* seps = app.add_subcommand("separators", "all minimal separators within a size budget");
  problem.add_options(seps);
  seps->add_option("--budget", sep_budget);
  seps->add_option("--sample-box", sep_box);

  GenArgs gargs;
  auto* gen = app.add_subcommand("gen", "emit a construction");
  gen->add_option("kind", gargs.kind, "un|vn|toy-slope|gadget-b|zero-test|modify")->required();
  gen->add_option("--n", gargs.n);
  gen->add_option("--fractions", gargs.fractions, "a1/b1,...,an/bn");
  gen->add_option("--bound", gargs.bound, "zero-test bound");
  gen->add_option("--loop", gargs.loop, "toy-slope loop vector");
  gen->add_option("--vass", gargs.vass_path);
  gen->add_option("--state", gargs.state);
  gen->add_option("--lin1", gargs.lin1);
  gen->add_option("--lin2", gargs.lin2);
  gen->add_option("-o,--out", gargs.out_prefix, "write PREFIX.vass and PREFIX.json");

  auto* check1 = app.add_subcommand("check-thm1", "check the line-based separator hypotheses");
  problem.add_options(check1);
  auto* check2 = app.add_subcommand("check-thm2", "check the ratio-based separator hypotheses");
  problem.add_options(check2);

  std::string pump_vass, pump_small, pump_large, pump_out;
  std::size_t pump_n = 1;
  auto* pump = app.add_subcommand("pump", "pump a dominated pair of runs");
  pump->add_option("--vass", pump_vass)->required();
  pump->add_option("--small", pump_small)->required();
  pump->add_option("--large", pump_large)->required();
  pump->add_option("--n", pump_n);
  pump->add_option("--run-out", pump_out);

  std::vector<std::string> bz_coeffs;
  std::string bz_target;
  auto* bezout = app.add_subcommand("bezout", "nonnegative combination hitting a target");
  bezout->add_option("coeffs", bz_coeffs)->required();
  bezout->add_option("--target", bz_target)->required();

  std::string zp_lin, zp_u, zp_v;
  auto* zpath = app.add_subcommand("zero-path", "path inside a level set of a linear function");
  zpath->add_option("--lin", zp_lin)->required();
  zpath->add_option("--from", zp_u)->required();
  zpath->add_option("--to", zp_v)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kBadInput;
  }

  Output out;
  int rc = 0;
  try {
    if (*reach) rc = cmd_reach(problem, out);
    else if (*decide) rc = cmd_decide(problem, dargs, deterministic, out);
    else if (*seps) rc = cmd_separators(problem, sep_budget, sep_box, out);
    else if (*gen) rc = cmd_gen(gargs, out);
    else if (*check1) rc = cmd_check1(problem, out);
    else if (*check2) rc = cmd_check2(problem, out);
    else if (*pump) rc = cmd_pump(pump_vass, pump_small, pump_large, pump_n, pump_out, out);
    else if (*bezout) rc = cmd_bezout(bz_coeffs, bz_target, out);
    else if (*zpath) rc = cmd_zero_path(zp_lin, zp_u, zp_v, out);
  } catch (const vsl::VslError& e) {
    std::cerr << "vsl: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "vsl: internal error: " << e.what() << "\n";
    return kInternal;
  }
  std::cout << out.text << std::flush;
  return rc;
}
