#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

#include "circuit/ratio.hpp"

namespace circuit {

/// Rule interpretation flags for the circuit puzzle.
struct RuleSet {
  bool ants_active = false;         // open rations are lost at nightfall
  bool require_dawn_start = false;  // schedule phase must be 0
  bool allow_discard = true;        // open remainder may be thrown away
  Ratio capacity{2};                // ration-days that can be carried
  Ratio circuit_miles{100};
  Ratio daily_miles{20};

  void validate() const {
    if (capacity.sign() <= 0) throw std::invalid_argument("capacity must be positive");
    if (circuit_miles.sign() <= 0) throw std::invalid_argument("circuit length must be positive");
    if (daily_miles.sign() <= 0) throw std::invalid_argument("daily distance must be positive");
  }

  /// Circuit length measured in days of walking.
  [[nodiscard]] Ratio circuit_units() const { return circuit_miles / daily_miles; }

  friend bool operator==(const RuleSet&, const RuleSet&) = default;
};

enum class Preset { kFree, kAnts, kDawn };

inline constexpr std::array<std::string_view, 3> kPresetNames = {"FREE", "ANTS", "DAWN"};

inline RuleSet preset(Preset p) {
  RuleSet r;
  switch (p) {
    case Preset::kFree:
      break;
    case Preset::kAnts:
      r.ants_active = true;
      break;
    case Preset::kDawn:
      r.ants_active = true;
      r.require_dawn_start = true;
      r.allow_discard = false;
      break;
  }
  return r;
}

inline RuleSet preset(std::string_view name) {
  if (name == "FREE") return preset(Preset::kFree);
  if (name == "ANTS") return preset(Preset::kAnts);
  if (name == "DAWN") return preset(Preset::kDawn);
  std::string valid;
  for (auto n : kPresetNames) {
    if (!valid.empty()) valid += ", ";
    valid += n;
  }
  throw std::invalid_argument("unknown rule preset '" + std::string(name) + "' (valid: " + valid + ")");
}

/// A point on the circuit in miles, reduced into [0, circuit). The base is 0.
class MilePos {
 public:
  explicit MilePos(const Ratio& miles, const Ratio& circuit = Ratio(100))
      : miles_(mod(miles, circuit)) {}

  [[nodiscard]] const Ratio& miles() const { return miles_; }
  [[nodiscard]] bool is_base() const { return miles_.is_zero(); }

  friend bool operator==(const MilePos&, const MilePos&) = default;
  friend auto operator<=>(const MilePos& a, const MilePos& b) { return a.miles_ <=> b.miles_; }

 private:
  Ratio miles_;
};

/// Distance from p back to the base measured against the walking direction,
/// in days of walking. The base maps to 0.
inline Ratio to_units(const MilePos& p, const RuleSet& rules = {}) {
  return mod(rules.circuit_miles - p.miles(), rules.circuit_miles) / rules.daily_miles;
}

inline MilePos from_units(const Ratio& u, const RuleSet& rules = {}) {
  return MilePos(rules.circuit_miles - u * rules.daily_miles, rules.circuit_miles);
}

}  // namespace circuit
