#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "circuit/inequality.hpp"
#include "circuit/ratio.hpp"

namespace circuit {

namespace detail {

/// Scales so the first coefficient (or a nonzero constant) has absolute value 1.
inline LinIneq fm_normalize(const LinIneq& q) {
  Ratio k = q.coeffs().empty() ? q.constant().abs() : q.coeffs().begin()->second.abs();
  if (k.is_zero()) return q;
  return q.scaled(Ratio(1) / k);
}

inline std::vector<LinIneq> fm_dedupe(const std::vector<LinIneq>& in) {
  std::set<std::string> seen;
  std::vector<LinIneq> out;
  for (const auto& q : in) {
    LinIneq n = fm_normalize(q);
    if (seen.insert(n.str()).second) out.push_back(std::move(n));
  }
  return out;
}

}  // namespace detail

/// Eliminates `var` by pairing every positive occurrence with every negative one.
/// Rows that end up constant-only are kept, so infeasibility stays visible.
inline std::vector<LinIneq> fm_eliminate(const std::vector<LinIneq>& system, VarId var) {
  std::vector<const LinIneq*> pos, neg;
  std::vector<LinIneq> out;
  bool occurs = false;
  for (const auto& q : system) {
    Ratio c = q.coeff(var);
    if (c.sign() > 0) {
      pos.push_back(&q);
      occurs = true;
    } else if (c.sign() < 0) {
      neg.push_back(&q);
      occurs = true;
    } else {
      out.push_back(q);
    }
  }
  if (!occurs) throw std::invalid_argument("fm_eliminate: " + var.name() + " does not occur in the system");
  for (const auto* p : pos)
    for (const auto* n : neg) {
      Ratio cp = p->coeff(var), cn = -n->coeff(var);
      LinIneq sum = p->scaled(cn);
      for (const auto& [v, c] : n->coeffs()) sum.add(v, c * cp);
      sum.add_constant(n->constant() * cp);
      out.push_back(std::move(sum));
    }
  for (auto& q : out) q.set_label("");
  return detail::fm_dedupe(out);
}

/// Projects onto `keep` by eliminating every other variable.
inline std::vector<LinIneq> fm_project(std::vector<LinIneq> system, const std::set<VarId>& keep) {
  for (;;) {
    std::set<VarId> vars;
    for (const auto& q : system)
      for (const auto& [v, c] : q.coeffs())
        if (!keep.count(v)) vars.insert(v);
    if (vars.empty()) return system;
    system = fm_eliminate(system, *vars.begin());
  }
}

inline bool fm_feasible(const std::vector<LinIneq>& system) {
  for (const auto& q : fm_project(system, {}))
    if (q.constant().sign() < 0) return false;
  return true;
}

}  // namespace circuit
