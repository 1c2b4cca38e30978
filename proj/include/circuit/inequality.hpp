#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "circuit/ratio.hpp"

namespace circuit {

/// Variable of the bound systems: T (time), G (gamma), R (r) and E1, E2, ...
struct VarId {
  enum class Kind { kT, kG, kR, kE };
  Kind kind = Kind::kT;
  int index = 0;  // only meaningful for kE, >= 1

  static VarId t() { return {Kind::kT, 0}; }
  static VarId g() { return {Kind::kG, 0}; }
  static VarId r() { return {Kind::kR, 0}; }
  static VarId e(int i) {
    if (i < 1) throw std::invalid_argument("E index must be >= 1");
    return {Kind::kE, i};
  }

  [[nodiscard]] std::string name() const {
    switch (kind) {
      case Kind::kT: return "T";
      case Kind::kG: return "G";
      case Kind::kR: return "R";
      case Kind::kE: return "E" + std::to_string(index);
    }
    return "?";
  }

  static VarId parse(std::string_view s) {
    if (s == "T") return t();
    if (s == "G") return g();
    if (s == "R") return r();
    if (s.size() >= 2 && s[0] == 'E') {
      int v = 0;
      for (char c : s.substr(1)) {
        if (c < '0' || c > '9' || v > 100000) throw std::invalid_argument("bad variable id '" + std::string(s) + "'");
        v = v * 10 + (c - '0');
      }
      return e(v);
    }
    throw std::invalid_argument("bad variable id '" + std::string(s) + "'");
  }

  friend bool operator==(const VarId&, const VarId&) = default;
  friend auto operator<=>(const VarId&, const VarId&) = default;
};

using Point = std::map<VarId, Ratio>;

/// Linear inequality in normal form: sum(coeff * var) + constant >= 0.
/// Zero coefficients are never stored.
class LinIneq {
 public:
  LinIneq() = default;
  explicit LinIneq(std::string label) : label_(std::move(label)) {}

  LinIneq& add(VarId v, const Ratio& c) {
    if (c.is_zero()) return *this;
    auto [it, fresh] = coeffs_.try_emplace(v, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
    return *this;
  }
  LinIneq& add_constant(const Ratio& c) {
    constant_ += c;
    return *this;
  }

  [[nodiscard]] const std::map<VarId, Ratio>& coeffs() const { return coeffs_; }
  [[nodiscard]] const Ratio& constant() const { return constant_; }
  [[nodiscard]] const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }

  [[nodiscard]] Ratio coeff(VarId v) const {
    auto it = coeffs_.find(v);
    return it == coeffs_.end() ? Ratio(0) : it->second;
  }

  /// Left-hand value at `x`; variables missing from `x` count as 0.
  [[nodiscard]] Ratio value(const Point& x) const {
    Ratio s = constant_;
    for (const auto& [v, c] : coeffs_) {
      auto it = x.find(v);
      if (it != x.end()) s += c * it->second;
    }
    return s;
  }
  [[nodiscard]] bool holds(const Point& x) const { return value(x).sign() >= 0; }

  [[nodiscard]] LinIneq scaled(const Ratio& k) const {
    LinIneq out(label_);
    for (const auto& [v, c] : coeffs_) out.add(v, c * k);
    out.constant_ = constant_ * k;
    return out;
  }

  /// Replaces v by the given value.
  [[nodiscard]] LinIneq substituted(VarId v, const Ratio& value) const {
    LinIneq out = *this;
    auto it = out.coeffs_.find(v);
    if (it != out.coeffs_.end()) {
      out.constant_ += it->second * value;
      out.coeffs_.erase(it);
    }
    return out;
  }

  [[nodiscard]] int max_e_index() const {
    int m = 0;
    for (const auto& [v, c] : coeffs_)
      if (v.kind == VarId::Kind::kE) m = std::max(m, v.index);
    return m;
  }

  /// Human form, e.g. "1/2*T - 2*G + 1 >= 0".
  [[nodiscard]] std::string str() const {
    std::string s;
    for (const auto& [v, c] : coeffs_) {
      if (s.empty()) {
        s += c.str();
      } else {
        s += c.sign() < 0 ? " - " + (-c).str() : " + " + c.str();
      }
      s += "*" + v.name();
    }
    if (s.empty()) {
      s = constant_.str();
    } else if (!constant_.is_zero()) {
      s += constant_.sign() < 0 ? " - " + (-constant_).str() : " + " + constant_.str();
    }
    return s + " >= 0";
  }

  friend bool operator==(const LinIneq& a, const LinIneq& b) {
    return a.coeffs_ == b.coeffs_ && a.constant_ == b.constant_;
  }

 private:
  std::map<VarId, Ratio> coeffs_;
  Ratio constant_;
  std::string label_;
};

inline int max_e_index(const std::vector<LinIneq>& sys) {
  int m = 0;
  for (const auto& q : sys) m = std::max(m, q.max_e_index());
  return m;
}

}  // namespace circuit
