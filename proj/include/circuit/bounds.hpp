#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "circuit/inequality.hpp"
#include "circuit/lp.hpp"
#include "circuit/ratio.hpp"

namespace circuit {

/// The claim t >= a*gamma + b, or t >= a*(U - gamma) + b on the reverse axis.
struct BoundLine {
  enum class Axis { kGamma, kReverse };
  Ratio a;
  Ratio b;
  Axis axis = Axis::kGamma;

  /// Right-hand side at a given gamma.
  [[nodiscard]] Ratio at(const Ratio& gamma, const Ratio& units = Ratio(5)) const {
    return axis == Axis::kGamma ? a * gamma + b : a * (units - gamma) + b;
  }
  /// Slope and intercept in gamma.
  [[nodiscard]] std::pair<Ratio, Ratio> in_gamma(const Ratio& units = Ratio(5)) const {
    if (axis == Axis::kGamma) return {a, b};
    return {-a, a * units + b};
  }
  /// T - (rhs) >= 0 over T and G.
  [[nodiscard]] LinIneq target(const Ratio& units = Ratio(5)) const {
    auto [slope, icpt] = in_gamma(units);
    LinIneq q("target");
    q.add(VarId::t(), 1).add(VarId::g(), -slope).add_constant(-icpt);
    return q;
  }
  [[nodiscard]] std::string str() const {
    std::string x = axis == Axis::kGamma ? "G" : "D";
    return "T >= " + a.str() + "*" + x + (b.sign() < 0 ? " - " + (-b).str() : " + " + b.str());
  }

  /// "a,b" with exact rationals, e.g. "96/7,-258/7".
  static BoundLine parse(std::string_view s, Axis axis = Axis::kGamma) {
    auto comma = s.find(',');
    if (comma == std::string_view::npos || s.find(',', comma + 1) != std::string_view::npos)
      throw std::invalid_argument("line must be 'a,b', got '" + std::string(s) + "'");
    return {Ratio::parse(s.substr(0, comma)), Ratio::parse(s.substr(comma + 1)), axis};
  }
  friend bool operator==(const BoundLine&, const BoundLine&) = default;
};

/// sum_i multipliers[i] * system[i] + slack == target, coefficient-wise.
struct Certificate {
  std::vector<LinIneq> system;
  LinIneq target;
  std::vector<Ratio> multipliers;
  Ratio slack;
  std::optional<BoundLine> line;
  Ratio units{5};
};

enum class VerdictKind { kImplied, kRefuted, kInfeasibleSystem };

inline std::string_view to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::kImplied: return "implied";
    case VerdictKind::kRefuted: return "refuted";
    case VerdictKind::kInfeasibleSystem: return "infeasible-system";
  }
  return "unknown";
}

struct Verdict {
  VerdictKind kind = VerdictKind::kInfeasibleSystem;
  std::optional<Certificate> certificate;  // kImplied
  std::optional<Point> witness;            // kRefuted: satisfies the system, violates the target
};

struct OptResult {
  LpStatus status = LpStatus::kInfeasible;
  Ratio value;
  Point point;
};

namespace detail {

inline std::vector<VarId> collect_vars(const std::vector<LinIneq>& sys, const LinIneq* extra = nullptr) {
  std::set<VarId> vs;
  for (const auto& q : sys)
    for (const auto& [v, c] : q.coeffs()) vs.insert(v);
  if (extra)
    for (const auto& [v, c] : extra->coeffs()) vs.insert(v);
  return {vs.begin(), vs.end()};
}

}  // namespace detail

/// Minimizes objective (its coefficients plus constant) over the system,
/// with every variable free. Columns are x = p - n plus one surplus per row.
inline OptResult minimize(const std::vector<LinIneq>& sys, const LinIneq& objective) {
  auto vars = detail::collect_vars(sys, &objective);
  const std::size_t nv = vars.size(), m = sys.size(), n = 2 * nv + m;
  std::vector<std::vector<Ratio>> a(m, std::vector<Ratio>(n));
  std::vector<Ratio> b(m), c(n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < nv; ++j) {
      Ratio k = sys[i].coeff(vars[j]);
      a[i][j] = k;
      a[i][nv + j] = -k;
    }
    a[i][2 * nv + i] = Ratio(-1);
    b[i] = -sys[i].constant();
  }
  for (std::size_t j = 0; j < nv; ++j) {
    c[j] = objective.coeff(vars[j]);
    c[nv + j] = -c[j];
  }
  auto res = solve_lp(std::move(a), std::move(b), std::move(c));
  OptResult out{res.status, {}, {}};
  if (res.status == LpStatus::kOptimal) {
    out.value = res.value + objective.constant();
    for (std::size_t j = 0; j < nv; ++j) out.point[vars[j]] = res.x[j] - res.x[nv + j];
  }
  return out;
}

inline bool feasible(const std::vector<LinIneq>& sys) { return minimize(sys, LinIneq()).status != LpStatus::kInfeasible; }

/// Any point of the system, if there is one.
inline std::optional<Point> find_point(const std::vector<LinIneq>& sys) {
  auto r = minimize(sys, LinIneq());
  if (r.status != LpStatus::kOptimal) return std::nullopt;
  return r.point;
}

/// Checks a certificate without any LP: nonnegative multipliers, exact
/// coefficient-wise reproduction of the target, and the stated slack.
inline bool verify_certificate(const Certificate& cert) {
  if (cert.multipliers.size() != cert.system.size()) return false;
  LinIneq sum;
  for (std::size_t i = 0; i < cert.system.size(); ++i) {
    const Ratio& l = cert.multipliers[i];
    if (l.sign() < 0) return false;
    if (l.is_zero()) continue;
    for (const auto& [v, c] : cert.system[i].coeffs()) sum.add(v, l * c);
    sum.add_constant(l * cert.system[i].constant());
  }
  if (sum.coeffs() != cert.target.coeffs()) return false;
  if (cert.slack.sign() < 0) return false;
  if (sum.constant() + cert.slack != cert.target.constant()) return false;
  if (cert.line) {
    // the target must be the line it claims to be
    auto [slope, icpt] = cert.line->in_gamma(cert.units);
    LinIneq want;
    want.add(VarId::t(), 1).add(VarId::g(), -slope).add_constant(-icpt);
    if (!(want == cert.target)) return false;
  }
  return true;
}

/// Decides whether system ∪ extra implies target >= 0 everywhere.
inline Verdict implies(const std::vector<LinIneq>& system, const LinIneq& target,
                       const std::vector<LinIneq>& extra = {}) {
  if (system.empty()) throw std::invalid_argument("implies: empty system");
  std::vector<LinIneq> sys = system;
  sys.insert(sys.end(), extra.begin(), extra.end());

  auto primal = minimize(sys, target);
  if (primal.status == LpStatus::kInfeasible) return {VerdictKind::kInfeasibleSystem, {}, {}};
  if (primal.status == LpStatus::kUnbounded) {
    LinIneq below = target.scaled(Ratio(-1));
    below.add_constant(Ratio(-1));
    auto with = sys;
    with.push_back(below);
    return {VerdictKind::kRefuted, {}, find_point(with)};
  }
  if (primal.value.sign() < 0) return {VerdictKind::kRefuted, {}, primal.point};

  // Dual: lambda >= 0, sum lambda_i a_i = target coefficients, minimize sum lambda_i c_i.
  auto vars = detail::collect_vars(sys, &target);
  const std::size_t m = sys.size();
  std::vector<std::vector<Ratio>> a(vars.size(), std::vector<Ratio>(m));
  std::vector<Ratio> b(vars.size()), c(m);
  for (std::size_t r = 0; r < vars.size(); ++r) {
    for (std::size_t i = 0; i < m; ++i) a[r][i] = sys[i].coeff(vars[r]);
    b[r] = target.coeff(vars[r]);
  }
  for (std::size_t i = 0; i < m; ++i) c[i] = sys[i].constant();
  auto dual = solve_lp(std::move(a), std::move(b), std::move(c));
  if (dual.status != LpStatus::kOptimal) throw std::logic_error("implies: dual LP failed although the primal is bounded");

  Certificate cert{sys, target, dual.x, target.constant() - dual.value, std::nullopt, Ratio(5)};
  if (!verify_certificate(cert)) throw std::logic_error("implies: certificate failed verification");
  return {VerdictKind::kImplied, std::move(cert), {}};
}

inline Verdict implies(const std::vector<LinIneq>& system, const BoundLine& line, const std::vector<LinIneq>& extra = {},
                       const Ratio& units = Ratio(5)) {
  auto v = implies(system, line.target(units), extra);
  if (v.certificate) {
    v.certificate->line = line;
    v.certificate->units = units;
  }
  return v;
}

struct MinT {
  LpStatus status = LpStatus::kInfeasible;
  Ratio value;
};

/// Minimum of T over the system with G fixed.
inline MinT min_t(const std::vector<LinIneq>& system, const Ratio& gamma) {
  if (system.empty()) throw std::invalid_argument("min_t: empty system");
  std::vector<LinIneq> sys;
  sys.reserve(system.size());
  for (const auto& q : system) sys.push_back(q.substituted(VarId::g(), gamma));
  LinIneq obj;
  obj.add(VarId::t(), 1);
  auto r = minimize(sys, obj);
  return {r.status, r.value};
}

/// Minimizes f(gamma) = gamma + max_A line(gamma) + max_B line(gamma) over [0, U].
/// Part C walks gamma units. Ties go to the smallest gamma.
inline std::pair<Ratio, Ratio> compose_total(const std::vector<BoundLine>& part_a, const std::vector<BoundLine>& part_b,
                                             const Ratio& units = Ratio(5)) {
  if (part_a.empty() || part_b.empty()) throw std::invalid_argument("compose_total: empty line list");
  auto envelope = [&](const std::vector<BoundLine>& ls, const Ratio& g) {
    Ratio best = ls.front().at(g, units);
    for (const auto& l : ls) best = max(best, l.at(g, units));
    return best;
  };
  auto f = [&](const Ratio& g) { return g + envelope(part_a, g) + envelope(part_b, g); };

  std::set<Ratio> candidates{Ratio(0), units};
  for (const auto* ls : {&part_a, &part_b})
    for (std::size_t i = 0; i < ls->size(); ++i)
      for (std::size_t j = i + 1; j < ls->size(); ++j) {
        auto [s1, c1] = (*ls)[i].in_gamma(units);
        auto [s2, c2] = (*ls)[j].in_gamma(units);
        if (s1 == s2) continue;
        Ratio g = (c2 - c1) / (s1 - s2);
        if (g.sign() >= 0 && g <= units) candidates.insert(g);
      }
  std::optional<std::pair<Ratio, Ratio>> best;
  for (const auto& g : candidates) {  // ascending, so strict < keeps the smallest gamma
    Ratio v = f(g);
    if (!best || v < best->second) best = {g, v};
  }
  return *best;
}

/// Two round trips covering the circuit from both sides: line(gamma) + line(U - gamma).
inline Ratio roundtrip_total(const BoundLine& line, const Ratio& gamma, const Ratio& units = Ratio(5)) {
  return line.at(gamma, units) + line.at(units - gamma, units);
}

/// (gamma, min_t) samples on [lo, hi] with `steps` equal intervals.
inline std::vector<std::pair<Ratio, MinT>> envelope(const std::vector<LinIneq>& system, const Ratio& lo, const Ratio& hi,
                                                    int steps) {
  if (steps < 1) throw std::invalid_argument("envelope: steps must be >= 1");
  std::vector<std::pair<Ratio, MinT>> out;
  for (int i = 0; i <= steps; ++i) {
    Ratio g = lo + (hi - lo) * Ratio(i, steps);
    out.emplace_back(g, min_t(system, g));
  }
  return out;
}

}  // namespace circuit
