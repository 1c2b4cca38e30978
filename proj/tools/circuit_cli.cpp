// Command-line front end: simulate, verify, bound, optimum, search, builtin.
// Exit codes: 0 ok, 1 negative verdict, 2 usage error, 3 search limit.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "circuit/bounds.hpp"
#include "circuit/builtins.hpp"
#include "circuit/core.hpp"
#include "circuit/families.hpp"
#include "circuit/schedule.hpp"
#include "circuit/search.hpp"
#include "circuit/serialize.hpp"
#include "circuit/simulator.hpp"

namespace {

using namespace circuit;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kLimit = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RuleFlags {
  std::string preset = "FREE";
  std::optional<bool> ants, dawn, discard;
  std::string capacity;

  void attach(CLI::App* app) {
    app->add_option("--rules", preset, "rule preset: FREE, ANTS or DAWN")->capture_default_str();
    app->add_option("--ants", ants, "override: ants eat open rations at night (true/false)");
    app->add_option("--dawn", dawn, "override: departure must be at dawn (true/false)");
    app->add_option("--discard", discard, "override: open rations may be thrown away (true/false)");
    app->add_option("--capacity", capacity, "override: carrying capacity in ration-days");
  }
  [[nodiscard]] RuleSet resolve() const {
    RuleSet r = circuit::preset(preset);
    if (ants) r.ants_active = *ants;
    if (dawn) r.require_dawn_start = *dawn;
    if (discard) r.allow_discard = *discard;
    if (!capacity.empty()) r.capacity = Ratio::parse(capacity);
    r.validate();
    return r;
  }
};

struct ScheduleSource {
  std::string file;
  std::string builtin;

  void attach(CLI::App* app) {
    app->add_option("file", file, "schedule file");
    app->add_option("--builtin", builtin, "built-in schedule (alg1, alg2, alg3)");
  }
  [[nodiscard]] Schedule load() const {
    if (file.empty() == builtin.empty()) throw UsageError("give exactly one of a schedule file or --builtin");
    if (!builtin.empty()) return circuit::builtin(builtin);
    std::ifstream in(file);
    if (!in) throw UsageError("cannot read " + file);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_schedule(ss.str());
  }
};

void print_report(const SimReport& r) {
  std::cout << (r.feasible ? "feasible" : "infeasible") << ", total time " << r.total_time.str() << " days\n";
  for (const auto& v : r.violations)
    std::cout << "  violation " << to_string(v.kind) << " at clock " << v.clock.str() << ", mile " << v.position.str()
              << ": " << v.detail << "\n";
  const auto& l = r.ledger;
  std::cout << "  ledger: taken " << l.boxes_taken.str() << " = consumed " << l.consumed.str() << " + ants "
            << l.ants_lost.str() << " + discarded " << l.discarded.str() << " + cached " << l.left_in_caches.str()
            << " + carried " << l.carried_at_end.str() << (l.balanced() ? "" : "  (UNBALANCED)") << "\n";
  for (const auto& m : r.marks)
    std::cout << "  mark " << m.label << ": elapsed " << m.elapsed.str() << ", mile " << m.position.str() << "\n";
  std::cout << "  circuit covered: " << (r.circuit_covered ? "yes" : "no") << "\n";
}

std::vector<BoundLine> parse_lines(const std::string& spec, BoundLine::Axis axis) {
  std::vector<BoundLine> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ';'))
    if (!item.empty()) out.push_back(BoundLine::parse(item, axis));
  if (out.empty()) throw UsageError("empty line list '" + spec + "'");
  return out;
}

const char* kRoundTripNote =
    "Printed in the source as an upper bound (t <= ...); the surrounding derivation establishes a necessity, so it is "
    "certified here as the lower bound t >= ...";

int run(int argc, char** argv) {
  CLI::App app{"Exact engine for the 100-mile circuit ration puzzle"};
  app.require_subcommand(1);
  bool json_out = false;

  // simulate
  auto* sim = app.add_subcommand("simulate", "simulate a schedule and report its ledger");
  ScheduleSource sim_src;
  RuleFlags sim_rules;
  sim_src.attach(sim);
  sim_rules.attach(sim);
  sim->add_flag("--json", json_out, "JSON output");

  // verify
  auto* ver = app.add_subcommand("verify", "check feasibility and an exact total time");
  ScheduleSource ver_src;
  RuleFlags ver_rules;
  std::string claim;
  ver_src.attach(ver);
  ver_rules.attach(ver);
  ver->add_option("--claim", claim, "claimed total time, p/q")->required();
  ver->add_flag("--json", json_out, "JSON output");

  // bound
  auto* bnd = app.add_subcommand("bound", "certify or refute a bound line");
  std::string part, line_spec, families, cert_out, csv_out;
  int part_b_n = 5;
  int csv_steps = 40;
  bnd->add_option("--part", part, "A, B or roundtrip")->required()->check(CLI::IsMember({"A", "B", "roundtrip"}));
  bnd->add_option("--line", line_spec, "a,b for t >= a*x + b (x = gamma, or 5 - gamma for part B)")->required();
  bnd->add_option("--families", families, "inequality families, e.g. gamm,siAB:2-4,sd:0-1 (ordering is added)");
  bnd->add_option("--n", part_b_n, "part-B index split: cbd 1..n, cbsi n+1..2n")->capture_default_str();
  bnd->add_option("--certificate", cert_out, "write the certificate as JSON");
  bnd->add_option("--csv", csv_out, "write the (gamma, min_t) envelope as CSV");
  bnd->add_option("--steps", csv_steps, "envelope sample count")->capture_default_str();
  bnd->add_flag("--json", json_out, "JSON output");

  // optimum
  auto* opt = app.add_subcommand("optimum", "compose part bounds into the optimal total");
  std::string a_lines = "14,-11", b_lines = "96/7,-258/7;16,-45";
  opt->add_option("--a-lines", a_lines, "part-A lines a,b;a,b over gamma")->capture_default_str();
  opt->add_option("--b-lines", b_lines, "part-B lines a,b;a,b over 5 - gamma")->capture_default_str();
  opt->add_flag("--json", json_out, "JSON output");

  // search
  auto* srch = app.add_subcommand("search", "brute-force grid search");
  srch->require_subcommand(1);
  GridSpec grid;
  std::string max_days = "4";
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  RuleFlags srch_rules;
  auto grid_flags = [&](CLI::App* s) {
    s->add_option("--denominator", grid.denominator, "grid points per unit")->capture_default_str();
    s->add_option("--max-days", max_days, "longest horizon considered")->capture_default_str();
    s->add_option("--max-boxes", grid.max_boxes, "boxes taken from the base")->capture_default_str();
    s->add_option("--max-actions", grid.max_actions, "takes and dumps away from the base")->capture_default_str();
    s->add_option("--workers", workers, "parallel workers")->capture_default_str();
    srch_rules.attach(s);
  };
  auto* reach = srch->add_subcommand("reach", "farthest reach within a budget");
  std::string budget;
  reach->add_option("--budget", budget, "days")->required();
  grid_flags(reach);
  auto* rtrip = srch->add_subcommand("roundtrip", "fastest round trip to gamma");
  std::string gamma;
  rtrip->add_option("--gamma", gamma, "turning point in units")->required();
  grid_flags(rtrip);

  // builtin
  auto* bi = app.add_subcommand("builtin", "list built-in schedules");
  bool list = false;
  bi->add_flag("--list", list, "list names")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (sim->parsed()) {
    auto rep = simulate(sim_src.load(), sim_rules.resolve());
    if (json_out) {
      std::cout << to_json(rep).dump(2) << "\n";
    } else {
      print_report(rep);
    }
    return rep.feasible ? kOk : kNegative;
  }

  if (ver->parsed()) {
    Ratio claimed = Ratio::parse(claim);
    auto rep = simulate(ver_src.load(), ver_rules.resolve());
    bool ok = rep.feasible && rep.total_time == claimed;
    if (json_out) {
      json j = to_json(rep);
      j["claim"] = claimed.str();
      j["verified"] = ok;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << (ok ? "verified" : "rejected") << ": claim " << claimed.str() << ", simulated "
                << rep.total_time.str() << (rep.feasible ? "" : " (infeasible)") << "\n";
      if (!rep.feasible) print_report(rep);
    }
    return ok ? kOk : kNegative;
  }

  if (bnd->parsed()) {
    auto axis = part == "B" ? BoundLine::Axis::kReverse : BoundLine::Axis::kGamma;
    BoundLine line = BoundLine::parse(line_spec, axis);
    std::vector<std::pair<std::string, std::vector<LinIneq>>> systems;
    if (!families.empty()) {
      systems.emplace_back(families, with_ordering(parse_families(families)));
    } else if (part == "A") {
      systems.emplace_back("gamm,siAB:2-4,sd:0-1", part_a_system(true));
      systems.emplace_back("gamm,siC:2-4,sd:0-1", part_a_system(false));
    } else if (part == "B") {
      systems.emplace_back("cbd:1-" + std::to_string(part_b_n) + ",cbsi:" + std::to_string(part_b_n + 1) + "-" +
                               std::to_string(2 * part_b_n) + ",pin",
                           part_b_system(part_b_n));
    } else {
      systems.emplace_back("rtd0,rtd1:2-4,rtd2:4-8,rtsi:9-18", roundtrip_system());
    }
    std::optional<Verdict> verdict;
    std::string used;
    for (const auto& [name, sys] : systems) {
      verdict = implies(sys, line);
      used = name;
      if (verdict->kind == VerdictKind::kImplied) break;
    }
    if (!csv_out.empty()) {
      std::ofstream csv(csv_out);
      if (!csv) throw UsageError("cannot write " + csv_out);
      csv << "gamma,min_t,line\n";
      for (const auto& [g, m] : envelope(systems.front().second, Ratio(0), Ratio(5), csv_steps))
        csv << g.str() << "," << (m.status == LpStatus::kOptimal ? m.value.str() : "") << "," << line.at(g).str() << "\n";
    }
    bool implied = verdict->kind == VerdictKind::kImplied;
    std::string note = part == "roundtrip" ? kRoundTripNote : "";
    if (implied && !cert_out.empty()) {
      std::ofstream out(cert_out);
      if (!out) throw UsageError("cannot write " + cert_out);
      json j = to_json(*verdict->certificate, note);
      j["families"] = used;
      out << j.dump(2) << "\n";
    }
    if (json_out) {
      json j;
      j["verdict"] = to_string(verdict->kind);
      j["line"] = to_json(line);
      j["families"] = used;
      if (implied) j["certificate"] = to_json(*verdict->certificate, note);
      if (verdict->witness) {
        json w = json::object();
        for (const auto& [v, x] : *verdict->witness) w[v.name()] = x.str();
        j["witness"] = w;
      }
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << to_string(verdict->kind) << ": " << line.str() << " from " << used << "\n";
      if (implied) {
        const auto& c = *verdict->certificate;
        for (std::size_t i = 0; i < c.system.size(); ++i)
          if (!c.multipliers[i].is_zero())
            std::cout << "  " << c.multipliers[i].str() << " x " << c.system[i].label() << "\n";
        std::cout << "  slack " << c.slack.str() << "\n";
      } else if (verdict->witness) {
        std::cout << "  witness:";
        for (const auto& [v, x] : *verdict->witness) std::cout << " " << v.name() << "=" << x.str();
        std::cout << "\n";
      }
    }
    return implied ? kOk : kNegative;
  }

  if (opt->parsed()) {
    auto la = parse_lines(a_lines, BoundLine::Axis::kGamma);
    auto lb = parse_lines(b_lines, BoundLine::Axis::kReverse);
    auto [g, t] = compose_total(la, lb);
    if (json_out) {
      std::cout << json{{"gamma", g.str()}, {"total", t.str()}}.dump(2) << "\n";
    } else {
      std::cout << "gamma = " << g.str() << ", total = " << t.str() << "\n";
    }
    return kOk;
  }

  if (srch->parsed()) {
    grid.max_days = Ratio::parse(max_days);
    RuleSet rules = srch_rules.resolve();
    SearchResult res;
    try {
      if (reach->parsed()) {
        res = best_reach(Ratio::parse(budget), grid, rules, workers, &std::cerr);
      } else {
        res = roundtrip_search(Ratio::parse(gamma), grid, rules, workers, &std::cerr);
      }
    } catch (const SearchLimitError& e) {
      std::cerr << "refused: " << e.what() << "\n";
      return kLimit;
    }
    if (!res.found) {
      std::cerr << "no schedule within the grid limits";
      if (res.bound) std::cerr << " (certified lower bound " << res.bound->str() << " days)";
      std::cerr << "\n";
      return kNegative;
    }
    std::cerr << (reach->parsed() ? "reach " + res.value.str() + " units" : "round trip") << " in " << res.time.str()
              << " days";
    if (res.bound) std::cerr << "; certified bound " << res.bound->str() << (res.consistent ? " respected" : " BEATEN");
    std::cerr << "\n";
    std::cout << format_schedule(res.schedule);
    return res.consistent ? kOk : kNegative;
  }

  if (bi->parsed()) {
    for (const auto& b : kBuiltins) std::cout << b.name << "  " << b.summary << "\n";
    return kOk;
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ScheduleParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kLimit;
  }
}
