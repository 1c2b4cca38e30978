#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "circuit/core.hpp"
#include "circuit/ratio.hpp"
#include "circuit/schedule.hpp"

namespace circuit {

enum class ViolationKind {
  kPhaseNotDawn,
  kPhaseOutOfRange,
  kStarvation,
  kCapacity,
  kEmptyCache,
  kNotCarried,
  kNoSealedBox,
  kDiscardForbidden,
  kInvalidAction,
};

inline std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::kPhaseNotDawn: return "phase-not-dawn";
    case ViolationKind::kPhaseOutOfRange: return "phase-out-of-range";
    case ViolationKind::kStarvation: return "starvation";
    case ViolationKind::kCapacity: return "capacity";
    case ViolationKind::kEmptyCache: return "empty-cache";
    case ViolationKind::kNotCarried: return "not-carried";
    case ViolationKind::kNoSealedBox: return "no-sealed-box";
    case ViolationKind::kDiscardForbidden: return "discard-forbidden";
    case ViolationKind::kInvalidAction: return "invalid-action";
  }
  return "unknown";
}

struct Violation {
  Ratio clock;     // days since dawn of the first day
  Ratio position;  // miles, in [0, circuit)
  ViolationKind kind;
  std::string detail;
};

/// Ration accounting in ration-days. `boxes_taken` is net of boxes handed
/// back to the base.
struct Ledger {
  Ratio boxes_taken;
  Ratio consumed;
  Ratio ants_lost;
  Ratio discarded;
  Ratio left_in_caches;
  Ratio carried_at_end;

  [[nodiscard]] bool balanced() const {
    return boxes_taken == consumed + ants_lost + discarded + left_in_caches + carried_at_end;
  }
  friend bool operator==(const Ledger&, const Ledger&) = default;
};

using CacheMap = std::map<Ratio, long>;  // mile position -> sealed boxes

struct MarkRecord {
  std::string label;
  Ratio elapsed;   // days walked since departure
  Ratio position;  // miles, in [0, circuit)
  CacheMap caches;
};

struct SimReport {
  bool feasible = true;
  Ratio total_time;
  std::vector<Violation> violations;
  Ledger ledger;
  bool circuit_covered = false;
  Ratio final_position;
  CacheMap final_caches;
  std::vector<MarkRecord> marks;

  [[nodiscard]] const MarkRecord* mark(std::string_view label) const {
    for (const auto& m : marks)
      if (m.label == label) return &m;
    return nullptr;
  }
  [[nodiscard]] std::optional<Ratio> mark_time(std::string_view label) const {
    if (const auto* m = mark(label)) return m->elapsed;
    return std::nullopt;
  }
  [[nodiscard]] bool has_violation(ViolationKind k) const {
    return std::any_of(violations.begin(), violations.end(), [k](const Violation& v) { return v.kind == k; });
  }
};

namespace detail {

/// True iff the union of closed intervals (on the unwrapped line) covers the
/// whole circle of length `circuit`.
inline bool covers_circle(const std::vector<std::pair<Ratio, Ratio>>& arcs, const Ratio& circuit) {
  std::vector<std::pair<Ratio, Ratio>> pieces;
  for (const auto& [lo, hi] : arcs) {
    if (hi - lo >= circuit) return true;
    Ratio a = mod(lo, circuit);
    Ratio b = a + (hi - lo);
    if (b <= circuit) {
      pieces.emplace_back(a, b);
    } else {
      pieces.emplace_back(a, circuit);
      pieces.emplace_back(Ratio(0), b - circuit);
    }
  }
  std::sort(pieces.begin(), pieces.end());
  Ratio reach(0);
  for (const auto& [a, b] : pieces) {
    if (a > reach) return false;
    reach = max(reach, b);
  }
  return reach >= circuit;
}

class Walker {
 public:
  Walker(const Schedule& s, const RuleSet& r) : s_(s), r_(r) {
    clock_ = s.phase;
    end_clock_ = s.phase + s.distance() / r.daily_miles;
    report_.total_time = end_clock_ - s.phase;
  }

  SimReport run() {
    if (s_.phase.sign() < 0 || s_.phase >= Ratio(1))
      flag(ViolationKind::kPhaseOutOfRange, "phase " + s_.phase.str() + " outside [0, 1)");
    if (r_.require_dawn_start && !s_.phase.is_zero())
      flag(ViolationKind::kPhaseNotDawn, "phase " + s_.phase.str() + " but the rules require a dawn start");
    for (const auto& a : s_.actions) std::visit([this](const auto& x) { apply(x); }, a);
    finish();
    return std::move(report_);
  }

 private:
  [[nodiscard]] MilePos here() const { return MilePos(pos_, r_.circuit_miles); }

  void flag(ViolationKind k, std::string detail) {
    report_.violations.push_back({clock_, here().miles(), k, std::move(detail)});
  }

  void check_capacity() {
    Ratio load = Ratio(sealed_) + open_;
    if (load > r_.capacity)
      flag(ViolationKind::kCapacity, "carrying " + load.str() + " ration-days, capacity " + r_.capacity.str());
  }

  void nightfall_if_due() {
    if (!clock_.is_integer() || clock_ <= s_.phase || clock_ >= end_clock_ || clock_ <= last_night_) return;
    last_night_ = clock_;
    if (r_.ants_active && open_.sign() > 0) {
      report_.ledger.ants_lost += open_;
      open_ = Ratio(0);
    }
  }

  void apply(const Move& m) {
    if (m.miles.is_zero()) {
      flag(ViolationKind::kInvalidAction, "zero move");
      return;
    }
    const Ratio dir = m.miles.sign() > 0 ? Ratio(1) : Ratio(-1);
    const Ratio start = pos_;
    Ratio remaining = m.miles.abs();
    bool starving = false;
    while (remaining.sign() > 0) {
      if (open_.is_zero() && sealed_ > 0) {
        --sealed_;
        open_ = Ratio(1);
      }
      Ratio step = remaining;
      if (open_.sign() > 0) step = min(step, open_ * r_.daily_miles);
      if (r_.ants_active) {
        Ratio next_night = clock_.floor() + Ratio(1);
        if (next_night < end_clock_) step = min(step, (next_night - clock_) * r_.daily_miles);
      }
      if (open_.is_zero() && !starving) {
        starving = true;
        flag(ViolationKind::kStarvation, "out of rations at mile " + here().miles().str() + ", clock " + clock_.str());
      }
      Ratio days = step / r_.daily_miles;
      if (open_.sign() > 0) {
        open_ -= days;
        report_.ledger.consumed += days;
      }
      pos_ += dir * step;
      clock_ += days;
      remaining -= step;
      nightfall_if_due();
    }
    arcs_.emplace_back(min(start, pos_), max(start, pos_));
  }

  void apply(const Dump& d) {
    if (d.count <= 0) {
      flag(ViolationKind::kInvalidAction, "dump count must be positive");
      return;
    }
    long n = d.count;
    if (n > sealed_) {
      flag(ViolationKind::kNotCarried,
           "dump " + std::to_string(n) + " but only " + std::to_string(sealed_) + " sealed boxes carried");
      n = sealed_;
    }
    sealed_ -= n;
    if (here().is_base()) {
      report_.ledger.boxes_taken -= Ratio(n);
    } else if (n > 0) {
      caches_[here().miles()] += n;
    }
  }

  void apply(const Take& t) {
    if (t.count <= 0) {
      flag(ViolationKind::kInvalidAction, "take count must be positive");
      return;
    }
    long n = t.count;
    if (here().is_base()) {
      report_.ledger.boxes_taken += Ratio(n);
    } else {
      auto it = caches_.find(here().miles());
      long available = it == caches_.end() ? 0 : it->second;
      if (available < n) {
        flag(ViolationKind::kEmptyCache,
             "take " + std::to_string(n) + " but cache holds " + std::to_string(available));
        n = available;
      }
      if (n > 0) {
        it->second -= n;
        if (it->second == 0) caches_.erase(it);
      }
    }
    sealed_ += n;
    check_capacity();
  }

  void apply(const Unseal&) {
    if (sealed_ == 0) {
      flag(ViolationKind::kNoSealedBox, "unseal with no sealed box carried");
      return;
    }
    if (open_.sign() > 0) {
      if (!r_.allow_discard) {
        flag(ViolationKind::kDiscardForbidden, "unseal would discard " + open_.str() + " of an open ration");
        return;
      }
      report_.ledger.discarded += open_;
    }
    --sealed_;
    open_ = Ratio(1);
    check_capacity();
  }

  void apply(const Discard&) {
    if (open_.is_zero()) return;
    if (!r_.allow_discard) {
      flag(ViolationKind::kDiscardForbidden, "discard of " + open_.str() + " not allowed");
      return;
    }
    report_.ledger.discarded += open_;
    open_ = Ratio(0);
  }

  void apply(const Mark& m) { report_.marks.push_back({m.label, clock_ - s_.phase, here().miles(), caches_}); }

  void finish() {
    auto& l = report_.ledger;
    Ratio cached;
    for (const auto& [p, n] : caches_) cached += Ratio(n);
    l.left_in_caches = cached;
    l.carried_at_end = Ratio(sealed_) + open_;
    report_.final_position = here().miles();
    report_.final_caches = caches_;
    report_.circuit_covered = here().is_base() && covers_circle(arcs_, r_.circuit_miles);
    report_.feasible = report_.violations.empty();
  }

  const Schedule& s_;
  const RuleSet& r_;
  Ratio clock_;
  Ratio end_clock_;
  Ratio last_night_{-1};
  Ratio pos_;  // unwrapped miles from the base
  long sealed_ = 0;
  Ratio open_;
  CacheMap caches_;
  std::vector<std::pair<Ratio, Ratio>> arcs_;
  SimReport report_;
};

}  // namespace detail

/// Runs `s` under `r` on an exact timeline. Walking consumes the open ration
/// at one ration per `daily_miles`; a sealed box is opened automatically when
/// the open one runs out. No idle time exists, so the clock is
/// phase + miles walked / daily_miles.
inline SimReport simulate(const Schedule& s, const RuleSet& r) {
  r.validate();
  return detail::Walker(s, r).run();
}

inline bool verify_total(const Schedule& s, const RuleSet& r, const Ratio& claimed) {
  auto rep = simulate(s, r);
  return rep.feasible && rep.total_time == claimed;
}

}  // namespace circuit
