#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "circuit/bounds.hpp"
#include "circuit/builtins.hpp"
#include "circuit/core.hpp"
#include "circuit/families.hpp"
#include "circuit/ratio.hpp"
#include "circuit/schedule.hpp"
#include "circuit/simulator.hpp"

namespace circuit {

/// Search grid. Positions are multiples of 1/denominator unit and every
/// step takes 1/denominator day. max_boxes caps the boxes ever taken from
/// the base; max_actions caps the takes and dumps made away from the base.
struct GridSpec {
  long denominator = 12;
  Ratio max_days{4};
  long max_boxes = 8;
  long max_actions = 12;

  void validate() const {
    if (denominator <= 0 || max_days.sign() <= 0 || max_boxes <= 0 || max_actions <= 0)
      throw std::invalid_argument("grid: denominator, max_days, max_boxes and max_actions must be positive");
  }
};

class SearchLimitError : public std::runtime_error {
 public:
  SearchLimitError(const std::string& what, double estimate) : std::runtime_error(what), estimate_(estimate) {}
  [[nodiscard]] double estimate() const { return estimate_; }

 private:
  double estimate_;
};

inline constexpr double kDefaultSearchCeiling = 1e16;

/// Refusal threshold, overridable with CIRCUIT_SEARCH_CEILING.
inline double search_ceiling() {
  if (const char* env = std::getenv("CIRCUIT_SEARCH_CEILING")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0) return v;
    throw std::invalid_argument(std::string("CIRCUIT_SEARCH_CEILING must be a positive number, got '") + env + "'");
  }
  return kDefaultSearchCeiling;
}

struct SearchResult {
  bool found = false;
  Ratio value;  // reach: units from the base; round trip: days
  Ratio time;   // walking time of the witness
  Schedule schedule;
  SimReport replay;
  std::optional<Ratio> bound;  // certified lower bound on `time`, when one applies
  bool consistent = true;      // witness time never below `bound`
  double estimate = 0;
  std::size_t states = 0;
};

namespace detail {

struct GridState {
  int pos = 0;
  int sealed = 0;
  int open = 0;  // ticks of walking left in the open ration
  bool reached = false;
  int taken = 0;
  int ops = 0;
  std::vector<std::pair<int, int>> caches;  // (position, boxes), sorted, counts > 0

  friend auto operator<=>(const GridState&, const GridState&) = default;

  [[nodiscard]] int cache_at(int p) const {
    for (const auto& [q, n] : caches)
      if (q == p) return n;
    return 0;
  }
  void set_cache(int p, int n) {
    auto it = std::lower_bound(caches.begin(), caches.end(), std::make_pair(p, 0));
    if (it != caches.end() && it->first == p) {
      if (n == 0) {
        caches.erase(it);
      } else {
        it->second = n;
      }
    } else if (n > 0) {
      caches.insert(it, {p, n});
    }
  }
  [[nodiscard]] long food(int den) const {
    long f = static_cast<long>(sealed) * den + open;
    for (const auto& [p, n] : caches) f += static_cast<long>(n) * den;
    return f;
  }
};

/// How a state was produced from its parent: optional discard, new sealed
/// count after taking or dumping, then one step.
struct Step {
  std::size_t parent = 0;
  bool discard = false;
  int sealed = 0;
  int dir = 1;

  friend auto operator<=>(const Step&, const Step&) = default;
};

struct Problem {
  int den = 1;
  int cap = 2;  // boxes
  int ticks = 0;
  int max_pos = 0;
  int max_boxes = 0;
  int max_actions = 0;
  bool ants = false;
  bool discard_ok = true;
  // round trip
  bool roundtrip = false;
  int goal = 0;
};

inline bool caches_cover(const GridState& a, const GridState& b) {
  for (const auto& [p, n] : b.caches)
    if (a.cache_at(p) < n) return false;
  return true;
}

/// a can mimic every continuation of b.
inline bool dominates(const GridState& a, const GridState& b, const Problem& pb) {
  if (a.pos != b.pos || a.reached != b.reached || a.sealed != b.sealed) return false;
  if (pb.discard_ok ? a.open < b.open : a.open != b.open) return false;
  if (a.taken > b.taken || a.ops > b.ops) return false;
  return caches_cover(a, b);
}

inline void expand(const Problem& pb, const GridState& s, std::size_t index, int tick,
                   std::vector<std::pair<GridState, Step>>& out) {
  const bool base = s.pos == 0;
  const int here = s.cache_at(s.pos);
  for (int disc = 0; disc <= 1; ++disc) {
    if (disc && (!pb.discard_ok || s.open == 0)) continue;
    const int open = disc ? 0 : s.open;
    for (int ns = 0; ns <= pb.cap; ++ns) {
      if (static_cast<long>(ns) * pb.den + open > static_cast<long>(pb.cap) * pb.den) break;
      GridState t = s;
      t.open = open;
      if (base) {
        if (ns > s.sealed) t.taken += ns - s.sealed;
        if (t.taken > pb.max_boxes) continue;
      } else if (ns != s.sealed) {
        int cache = here + s.sealed - ns;
        if (cache < 0) continue;
        t.set_cache(s.pos, cache);
        if (++t.ops > pb.max_actions) continue;
      }
      t.sealed = ns;
      if (t.open == 0) {
        if (t.sealed == 0) continue;
        --t.sealed;
        t.open = pb.den;
      }
      --t.open;
      if (pb.ants && (tick + 1) % pb.den == 0) t.open = 0;
      for (int dir : {1, -1}) {
        GridState u = t;
        u.pos += dir;
        if (u.pos < 0 || u.pos > pb.max_pos) continue;
        if (pb.roundtrip) {
          if (u.pos == pb.goal) u.reached = true;
          int need = u.reached ? u.pos : (pb.goal - u.pos) + pb.goal;
          if (tick + 1 + need > pb.ticks) continue;
        }
        out.emplace_back(std::move(u), Step{index, static_cast<bool>(disc), ns, dir});
      }
    }
  }
}

/// Sorts, keeps the smallest parent per state and drops dominated states.
inline std::vector<std::pair<GridState, Step>> reduce_layer(std::vector<std::pair<GridState, Step>> next,
                                                            const Problem& pb) {
  std::sort(next.begin(), next.end());
  next.erase(std::unique(next.begin(), next.end(), [](const auto& x, const auto& y) { return x.first == y.first; }),
             next.end());
  // Group by the fields dominance compares for equality; within a group,
  // visit richer states first so any dominator is already kept.
  auto key = [&](const GridState& s) { return std::make_tuple(s.pos, s.reached, s.sealed, pb.discard_ok ? 0 : s.open); };
  std::vector<std::size_t> order(next.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    const auto& a = next[i].first;
    const auto& b = next[j].first;
    auto ka = key(a), kb = key(b);
    if (ka != kb) return ka < kb;
    long fa = a.food(pb.den), fb = b.food(pb.den);
    if (fa != fb) return fa > fb;
    if (a.taken != b.taken) return a.taken < b.taken;
    if (a.ops != b.ops) return a.ops < b.ops;
    return i < j;
  });
  std::vector<char> keep(next.size(), 0);
  std::size_t g0 = 0;
  while (g0 < order.size()) {
    std::size_t g1 = g0;
    auto k = key(next[order[g0]].first);
    while (g1 < order.size() && key(next[order[g1]].first) == k) ++g1;
    std::vector<std::size_t> kept;
    for (std::size_t x = g0; x < g1; ++x) {
      const auto& s = next[order[x]].first;
      bool dominated = false;
      for (std::size_t y : kept)
        if (dominates(next[y].first, s, pb)) {
          dominated = true;
          break;
        }
      if (!dominated) {
        kept.push_back(order[x]);
        keep[order[x]] = 1;
      }
    }
    g0 = g1;
  }
  std::vector<std::pair<GridState, Step>> out;
  out.reserve(next.size());
  for (std::size_t i = 0; i < next.size(); ++i)
    if (keep[i]) out.push_back(std::move(next[i]));
  return out;
}

inline std::vector<std::pair<GridState, Step>> expand_layer(const Problem& pb, const std::vector<GridState>& frontier,
                                                            int tick, unsigned workers) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(frontier.size())));
  std::vector<std::vector<std::pair<GridState, Step>>> parts(workers);
  auto work = [&](unsigned w) {
    std::size_t lo = frontier.size() * w / workers, hi = frontier.size() * (w + 1) / workers;
    for (std::size_t i = lo; i < hi; ++i) expand(pb, frontier[i], i, tick, parts[w]);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  std::vector<std::pair<GridState, Step>> all;
  for (auto& p : parts)
    for (auto& x : p) all.push_back(std::move(x));
  return reduce_layer(std::move(all), pb);
}

inline double estimate_space(const Problem& pb) {
  // ticks x positions x carried load x cache multisets x counters
  double positions = pb.max_pos + 1;
  double multisets = 1;
  for (int k = 1; k <= pb.max_boxes; ++k) multisets = multisets * (positions - 1 + k) / k;
  return static_cast<double>(pb.ticks) * positions * (pb.cap + 1) * (pb.den + 1) * multisets * (pb.max_boxes + 1) *
         (pb.max_actions + 1) * (pb.roundtrip ? 2 : 1);
}

/// Replays the recorded steps into a schedule of Take/Dump/Discard/Move actions.
inline Schedule to_schedule(const std::vector<Step>& steps, const RuleSet& rules, int den) {
  ScheduleBuilder b;
  int pos = 0, sealed = 0, open = 0, tick = 0;
  const Ratio tick_miles = rules.daily_miles / Ratio(den);
  // ticks in one direction with no action between them become a single move
  std::optional<int> pending;
  int last_dir = 0;
  auto flush = [&] {
    if (pending) b.to(tick_miles * Ratio(*pending));
    pending.reset();
  };
  for (const auto& st : steps) {
    if (st.discard || st.sealed != sealed || st.dir != last_dir) {
      flush();
      last_dir = st.dir;
    }
    if (st.discard) {
      b.discard();
      open = 0;
    }
    if (st.sealed > sealed) b.take(st.sealed - sealed);
    if (st.sealed < sealed) b.dump(sealed - st.sealed);
    sealed = st.sealed;
    if (open == 0) {
      --sealed;
      open = den;
    }
    --open;
    if (rules.ants_active && ++tick % den == 0) open = 0;
    pos += st.dir;
    pending = pos;
  }
  flush();
  return std::move(b).build();
}

struct RunOutcome {
  std::optional<std::pair<int, GridState>> best;  // layer and state
  std::vector<std::vector<Step>> steps;            // per layer, aligned with that layer's states
  std::size_t states = 0;
};

template <typename Accept>
RunOutcome run_layers(const Problem& pb, unsigned workers, Accept&& accept) {
  RunOutcome out;
  std::vector<GridState> frontier{GridState{}};
  out.steps.emplace_back(1, Step{});
  for (int tick = 0; tick < pb.ticks && !frontier.empty(); ++tick) {
    auto next = expand_layer(pb, frontier, tick, workers);
    frontier.clear();
    std::vector<Step> st;
    st.reserve(next.size());
    for (auto& [s, p] : next) {
      frontier.push_back(std::move(s));
      st.push_back(p);
    }
    out.states += frontier.size();
    out.steps.push_back(std::move(st));
    if (!accept(tick + 1, frontier, out)) break;
  }
  return out;
}

inline std::vector<Step> trace(const RunOutcome& run, int layer, std::size_t index) {
  std::vector<Step> path;
  for (int l = layer; l > 0; --l) {
    const Step& s = run.steps[l][index];
    path.push_back(s);
    index = s.parent;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

inline Problem make_problem(const GridSpec& g, const RuleSet& rules, const Ratio& days) {
  g.validate();
  rules.validate();
  if (!rules.capacity.is_integer())
    throw std::invalid_argument("search: capacity must be a whole number of boxes");
  Problem pb;
  pb.den = static_cast<int>(g.denominator);
  pb.cap = static_cast<int>(rules.capacity.to_long());
  pb.ticks = static_cast<int>((days * Ratio(g.denominator)).floor().to_long());
  pb.max_boxes = static_cast<int>(g.max_boxes);
  pb.max_actions = static_cast<int>(g.max_actions);
  pb.ants = rules.ants_active;
  pb.discard_ok = rules.allow_discard;
  return pb;
}

inline void check_ceiling(const Problem& pb, double& estimate, std::ostream* diag) {
  estimate = estimate_space(pb);
  double ceiling = search_ceiling();
  if (diag) *diag << "search space estimate: " << estimate << " (ceiling " << ceiling << ")\n";
  if (estimate > ceiling)
    throw SearchLimitError("search space estimate " + std::to_string(estimate) + " exceeds ceiling " +
                               std::to_string(ceiling),
                           estimate);
}

}  // namespace detail

/// Farthest grid point reachable within the budget, starting at the base.
inline SearchResult best_reach(const Ratio& budget_days, const GridSpec& g, const RuleSet& rules, unsigned workers = 1,
                               std::ostream* diag = nullptr) {
  if (budget_days.sign() <= 0) throw std::invalid_argument("best_reach: budget must be positive");
  if (budget_days > g.max_days)
    throw SearchLimitError("budget " + budget_days.str() + " exceeds grid max_days " + g.max_days.str(), 0);
  auto pb = detail::make_problem(g, rules, budget_days);
  pb.max_pos = std::min(pb.ticks, static_cast<int>((rules.circuit_units() * Ratio(pb.den)).ceil().to_long()) - 1);
  SearchResult res;
  detail::check_ceiling(pb, res.estimate, diag);

  int best = 0, best_layer = 0;
  std::size_t best_index = 0;
  auto run = detail::run_layers(pb, workers, [&](int layer, std::vector<detail::GridState>& frontier, auto& out) {
    for (std::size_t i = 0; i < frontier.size(); ++i)
      if (frontier[i].pos > best) {
        best = frontier[i].pos;
        best_layer = layer;
        best_index = i;
      }
    if (layer == pb.ticks) return false;
    // states that cannot pass the current best are useless
    auto& steps = out.steps.back();
    std::size_t w = 0;
    for (std::size_t i = 0; i < frontier.size(); ++i)
      if (frontier[i].pos + (pb.ticks - layer) > best) {
        if (w != i) {
          frontier[w] = std::move(frontier[i]);
          steps[w] = steps[i];
        }
        ++w;
      }
    frontier.resize(w);
    steps.resize(w);
    if (best_layer == layer)
      for (std::size_t i = 0; i < frontier.size(); ++i)
        if (frontier[i].pos == best) {
          best_index = i;
          break;
        }
    return w > 0;
  });
  res.states = run.states;
  res.found = true;
  res.value = Ratio(best, pb.den);
  res.time = Ratio(best_layer, pb.den);
  res.schedule = detail::to_schedule(detail::trace(run, best_layer, best_index), rules, pb.den);
  res.replay = simulate(res.schedule, rules);
  if (!res.replay.feasible || res.replay.total_time != res.time)
    throw std::logic_error("best_reach: witness does not replay");
  if (res.value >= Ratio(1) && res.value < rules.circuit_units()) {
    auto m = min_t(part_b_system(5, rules.circuit_units()), rules.circuit_units() - res.value);
    if (m.status == LpStatus::kOptimal) {
      res.bound = m.value;
      res.consistent = res.time >= m.value;
    }
  }
  if (diag) *diag << "explored " << res.states << " states\n";
  return res;
}

/// Fastest base -> gamma -> base trip on the grid within g.max_days.
inline SearchResult roundtrip_search(const Ratio& gamma, const GridSpec& g, const RuleSet& rules, unsigned workers = 1,
                                     std::ostream* diag = nullptr) {
  if (gamma.sign() <= 0 || gamma >= rules.circuit_units())
    throw std::invalid_argument("roundtrip_search: gamma must lie strictly inside the circuit");
  Ratio goal = gamma * Ratio(g.denominator);
  if (!goal.is_integer()) throw std::invalid_argument("roundtrip_search: gamma " + gamma.str() + " is not on the grid");
  auto pb = detail::make_problem(g, rules, g.max_days);
  pb.roundtrip = true;
  pb.goal = static_cast<int>(goal.to_long());
  pb.max_pos = pb.goal;
  SearchResult res;
  detail::check_ceiling(pb, res.estimate, diag);

  int done_layer = -1;
  std::size_t done_index = 0;
  auto run = detail::run_layers(pb, workers, [&](int layer, std::vector<detail::GridState>& frontier, auto&) {
    for (std::size_t i = 0; i < frontier.size(); ++i)
      if (frontier[i].pos == 0 && frontier[i].reached) {
        done_layer = layer;
        done_index = i;
        return false;
      }
    return true;
  });
  res.states = run.states;
  if (diag) *diag << "explored " << res.states << " states\n";

  auto sys = roundtrip_system();
  auto m = min_t(sys, gamma);
  if (m.status == LpStatus::kOptimal) res.bound = max(m.value, BoundLine{27, Ratio(-375, 8)}.at(gamma));
  if (done_layer < 0) return res;

  res.found = true;
  res.time = Ratio(done_layer, pb.den);
  res.value = res.time;
  res.schedule = detail::to_schedule(detail::trace(run, done_layer, done_index), rules, pb.den);
  res.replay = simulate(res.schedule, rules);
  if (!res.replay.feasible || res.replay.total_time != res.time)
    throw std::logic_error("roundtrip_search: witness does not replay");
  if (res.bound) res.consistent = res.time >= *res.bound;
  return res;
}

}  // namespace circuit
