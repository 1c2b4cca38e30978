#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "circuit/inequality.hpp"
#include "circuit/ratio.hpp"

namespace circuit {

// Inequality families over (t, gamma, r, e_1, e_2, ...). Positions are in
// days of walking, measured from the base. The abbreviation
// d_i = e_i/2 + e_{i+1}/2 + 1/2 is expanded in place, with e_0 = r.

inline constexpr int kMaxFamilyIndex = 32;

enum class PartAKind { kGamm, kSiC, kSiAB, kSd };
enum class PartBKind { kCbd, kCbsi };
enum class RoundTripKind { kRtd0, kRtd1, kRtd2, kRtsi, kRtsiPrinted };

namespace detail {

inline VarId e_or_r(int i) { return i == 0 ? VarId::r() : VarId::e(i); }

/// Adds sign * sum_{i=lo}^{hi} d_i.
inline void add_d_sum(LinIneq& q, int lo, int hi, const Ratio& sign) {
  const Ratio half(1, 2);
  for (int i = lo; i <= hi; ++i) {
    q.add(e_or_r(i), sign * half);
    q.add(VarId::e(i + 1), sign * half);
    q.add_constant(sign * half);
  }
}

/// Adds sign * sum_{i=lo}^{hi} e_i.
inline void add_e_sum(LinIneq& q, int lo, int hi, const Ratio& sign) {
  for (int i = lo; i <= hi; ++i) q.add(VarId::e(i), sign);
}

inline void check_index(int k, int lo, std::string_view family) {
  if (k < lo || k > kMaxFamilyIndex)
    throw std::out_of_range(std::string(family) + ": k = " + std::to_string(k) + " outside [" + std::to_string(lo) +
                            ", " + std::to_string(kMaxFamilyIndex) + "]");
}

inline std::string labelled(std::string_view name, int k) { return std::string(name) + "(" + std::to_string(k) + ")"; }

}  // namespace detail

/// Part A (pre-placing the caches for the final march).
inline LinIneq gen_partA(PartAKind kind, int k = 0) {
  using detail::add_d_sum;
  using detail::add_e_sum;
  const Ratio half(1, 2);
  switch (kind) {
    case PartAKind::kGamm: {
      // gamma <= e1/2 + r/2 + 1/2
      LinIneq q("gamm");
      q.add(VarId::e(1), half).add(VarId::r(), half).add_constant(half).add(VarId::g(), -1);
      return q;
    }
    case PartAKind::kSiC: {
      // 2 gamma - 1 + r + sum_{1..k} e_i <= t/2
      detail::check_index(k, 0, "siC");
      LinIneq q(detail::labelled("siC", k));
      q.add(VarId::t(), half).add(VarId::g(), -2).add_constant(1).add(VarId::r(), -1);
      add_e_sum(q, 1, k, -1);
      return q;
    }
    case PartAKind::kSiAB: {
      // 2 gamma - 1 + r + (r - 1)/2 + sum_{1..k} e_i <= t/2
      detail::check_index(k, 0, "siAB");
      LinIneq q(detail::labelled("siAB", k));
      q.add(VarId::t(), half).add(VarId::g(), -2).add_constant(Ratio(3, 2)).add(VarId::r(), Ratio(-3, 2));
      add_e_sum(q, 1, k, -1);
      return q;
    }
    case PartAKind::kSd: {
      // gamma + r + 2 sum_{1..k} e_i <= sum_{0..2k+1} d_i
      detail::check_index(k, 0, "sd");
      LinIneq q(detail::labelled("sd", k));
      q.add(VarId::g(), -1).add(VarId::r(), -1);
      add_e_sum(q, 1, k, -2);
      add_d_sum(q, 0, 2 * k + 1, 1);
      return q;
    }
  }
  throw std::invalid_argument("gen_partA: unknown kind");
}

/// Part B (one-way trip), with e_1 the farthest unsealing before reaching the caches.
inline LinIneq gen_partB(PartBKind kind, int k) {
  detail::check_index(k, 1, kind == PartBKind::kCbd ? "cbd" : "cbsi");
  LinIneq q(detail::labelled(kind == PartBKind::kCbd ? "cbd" : "cbsi", k));
  q.add(VarId::e(1), -1);
  detail::add_e_sum(q, 2, k, -2);
  if (kind == PartBKind::kCbd) {
    // e1 + 2 sum_{2..k} e_i <= sum_{1..2k-1} d_i
    detail::add_d_sum(q, 1, 2 * k - 1, 1);
  } else {
    // e1 + 2 sum_{2..k} e_i <= t - 1
    q.add(VarId::t(), 1).add_constant(-1);
  }
  return q;
}

/// Round trip to gamma. `kRtsi` counts each carried box once in the forward
/// distance; `kRtsiPrinted` is the variant with the doubled sum.
inline LinIneq gen_roundtrip(RoundTripKind kind, int k = 2) {
  const Ratio half(1, 2);
  // (e2 + r + 2)/2 on the larger side
  auto add_head = [&](LinIneq& q) { q.add(VarId::e(2), half).add(VarId::r(), half).add_constant(1); };
  switch (kind) {
    case RoundTripKind::kRtd0: {
      LinIneq q("rtd0");
      add_head(q);
      q.add(VarId::g(), -1);
      return q;
    }
    case RoundTripKind::kRtd1: {
      // gamma + r + 2 sum_{2..k} e_i <= head + sum_{2..2k} d_i
      detail::check_index(k, 2, "rtd1");
      LinIneq q(detail::labelled("rtd1", k));
      q.add(VarId::g(), -1).add(VarId::r(), -1);
      detail::add_e_sum(q, 2, k, -2);
      add_head(q);
      detail::add_d_sum(q, 2, 2 * k, 1);
      return q;
    }
    case RoundTripKind::kRtd2: {
      // gamma + r + (r - 1) + 2 sum_{2..k} e_i <= head + sum_{2..2k+1} d_i
      detail::check_index(k, 2, "rtd2");
      LinIneq q(detail::labelled("rtd2", k));
      q.add(VarId::g(), -1).add(VarId::r(), -2).add_constant(1);
      detail::add_e_sum(q, 2, k, -2);
      add_head(q);
      detail::add_d_sum(q, 2, 2 * k + 1, 1);
      return q;
    }
    case RoundTripKind::kRtsi:
    case RoundTripKind::kRtsiPrinted: {
      // gamma + r + (r - 1) + w * sum_{2..k} e_i <= t/2
      bool printed = kind == RoundTripKind::kRtsiPrinted;
      detail::check_index(k, 2, printed ? "rtsi_printed" : "rtsi");
      LinIneq q(detail::labelled(printed ? "rtsi_printed" : "rtsi", k));
      q.add(VarId::t(), half).add(VarId::g(), -1).add(VarId::r(), -2).add_constant(1);
      detail::add_e_sum(q, 2, k, printed ? Ratio(-2) : Ratio(-1));
      return q;
    }
  }
  throw std::invalid_argument("gen_roundtrip: unknown kind");
}

/// e1 >= e2 >= ... >= e_kmax >= 0, r >= 0, gamma >= 0, t >= 0.
inline std::vector<LinIneq> ordering(int kmax) {
  if (kmax < 1) throw std::out_of_range("ordering: kmax must be >= 1");
  std::vector<LinIneq> out;
  for (int i = 1; i < kmax; ++i) {
    LinIneq q("E" + std::to_string(i) + ">=E" + std::to_string(i + 1));
    q.add(VarId::e(i), 1).add(VarId::e(i + 1), -1);
    out.push_back(std::move(q));
  }
  LinIneq last("E" + std::to_string(kmax) + ">=0");
  last.add(VarId::e(kmax), 1);
  out.push_back(std::move(last));
  for (VarId v : {VarId::r(), VarId::g(), VarId::t()}) {
    LinIneq q(v.name() + ">=0");
    q.add(v, 1);
    out.push_back(std::move(q));
  }
  return out;
}

/// gamma >= r + 1
inline LinIneq gamma_beyond_r() {
  LinIneq q("G>=R+1");
  q.add(VarId::g(), 1).add(VarId::r(), -1).add_constant(-1);
  return q;
}

/// e1 + 1 = circuit_units - gamma, as a pair of inequalities.
inline std::vector<LinIneq> pin_far_side(const Ratio& circuit_units = Ratio(5)) {
  LinIneq lo("E1+1>=U-G"), hi("E1+1<=U-G");
  lo.add(VarId::e(1), 1).add(VarId::g(), 1).add_constant(Ratio(1) - circuit_units);
  hi.add(VarId::e(1), -1).add(VarId::g(), -1).add_constant(circuit_units - Ratio(1));
  return {lo, hi};
}

/// Prepends the ordering chain over every E variable used by `sys`.
inline std::vector<LinIneq> with_ordering(std::vector<LinIneq> sys) {
  auto out = ordering(std::max(1, max_e_index(sys)));
  out.insert(out.end(), sys.begin(), sys.end());
  return out;
}

/// Parses a comma-separated family list such as "gamm,siC:2-4,sd:0-1".
/// Names: gamm siC siAB sd cbd cbsi rtd0 rtd1 rtd2 rtsi rtsi_printed gr1 pin.
inline std::vector<LinIneq> parse_families(std::string_view spec, const Ratio& circuit_units = Ratio(5)) {
  std::vector<LinIneq> out;
  auto parse_int = [&](std::string_view s) {
    if (s.empty() || s.size() > 4) throw std::invalid_argument("bad family index in '" + std::string(spec) + "'");
    int v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad family index in '" + std::string(spec) + "'");
      v = v * 10 + (c - '0');
    }
    return v;
  };
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t comma = spec.find(',', pos);
    std::string_view item = spec.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    pos = comma == std::string_view::npos ? spec.size() + 1 : comma + 1;
    if (item.empty()) continue;
    std::string_view name = item.substr(0, item.find(':'));
    int lo = -1, hi = -1;
    if (auto colon = item.find(':'); colon != std::string_view::npos) {
      std::string_view range = item.substr(colon + 1);
      auto dash = range.find('-');
      lo = parse_int(range.substr(0, dash));
      hi = dash == std::string_view::npos ? lo : parse_int(range.substr(dash + 1));
      if (hi < lo) throw std::invalid_argument("empty range in '" + std::string(item) + "'");
    }
    auto need_range = [&] {
      if (lo < 0) throw std::invalid_argument("family '" + std::string(name) + "' needs an index range, e.g. " +
                                              std::string(name) + ":2-4");
    };
    auto each = [&](auto&& gen) {
      need_range();
      for (int k = lo; k <= hi; ++k) out.push_back(gen(k));
    };
    if (name == "gamm") {
      out.push_back(gen_partA(PartAKind::kGamm));
    } else if (name == "siC") {
      each([](int k) { return gen_partA(PartAKind::kSiC, k); });
    } else if (name == "siAB") {
      each([](int k) { return gen_partA(PartAKind::kSiAB, k); });
    } else if (name == "sd") {
      each([](int k) { return gen_partA(PartAKind::kSd, k); });
    } else if (name == "cbd") {
      each([](int k) { return gen_partB(PartBKind::kCbd, k); });
    } else if (name == "cbsi") {
      each([](int k) { return gen_partB(PartBKind::kCbsi, k); });
    } else if (name == "rtd0") {
      out.push_back(gen_roundtrip(RoundTripKind::kRtd0));
    } else if (name == "rtd1") {
      each([](int k) { return gen_roundtrip(RoundTripKind::kRtd1, k); });
    } else if (name == "rtd2") {
      each([](int k) { return gen_roundtrip(RoundTripKind::kRtd2, k); });
    } else if (name == "rtsi") {
      each([](int k) { return gen_roundtrip(RoundTripKind::kRtsi, k); });
    } else if (name == "rtsi_printed") {
      each([](int k) { return gen_roundtrip(RoundTripKind::kRtsiPrinted, k); });
    } else if (name == "gr1") {
      out.push_back(gamma_beyond_r());
    } else if (name == "pin") {
      for (auto& q : pin_far_side(circuit_units)) out.push_back(std::move(q));
    } else {
      throw std::invalid_argument("unknown inequality family '" + std::string(name) + "'");
    }
  }
  return out;
}

// The systems used for the published bound lines.

/// Part A with siC (variant_ab = false) or siAB (true) for k = 2..4 and sd for k = 0, 1.
inline std::vector<LinIneq> part_a_system(bool variant_ab) {
  return with_ordering(parse_families(variant_ab ? "gamm,siAB:2-4,sd:0-1" : "gamm,siC:2-4,sd:0-1"));
}

/// Part B: cbd for k = 1..n, cbsi for k = n+1..2n, and e1 + 1 = U - gamma.
inline std::vector<LinIneq> part_b_system(int n, const Ratio& circuit_units = Ratio(5)) {
  std::vector<LinIneq> sys;
  for (int k = 1; k <= n; ++k) sys.push_back(gen_partB(PartBKind::kCbd, k));
  for (int k = n + 1; k <= 2 * n; ++k) sys.push_back(gen_partB(PartBKind::kCbsi, k));
  for (auto& q : pin_far_side(circuit_units)) sys.push_back(std::move(q));
  return with_ordering(std::move(sys));
}

/// Round trip: rtd0, rtd1 for k = 2..4, rtd2 for k = 4..8, rtsi for k = 9..18.
inline std::vector<LinIneq> roundtrip_system(bool printed_rtsi = false) {
  return with_ordering(
      parse_families(printed_rtsi ? "rtd0,rtd1:2-4,rtd2:4-8,rtsi_printed:9-18" : "rtd0,rtd1:2-4,rtd2:4-8,rtsi:9-18"));
}

}  // namespace circuit
