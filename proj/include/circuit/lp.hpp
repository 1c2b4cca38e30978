#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "circuit/ratio.hpp"

namespace circuit {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Ratio value;            // optimum of c.x when kOptimal
  std::vector<Ratio> x;   // optimal vertex when kOptimal
};

/// Dense exact LP in standard form: minimize c.x subject to A x = b, x >= 0.
/// Two-phase simplex with Bland's rule, so it terminates on degenerate input.
class SimplexLp {
 public:
  SimplexLp(std::vector<std::vector<Ratio>> a, std::vector<Ratio> b, std::vector<Ratio> c)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (a_.size() != b_.size()) throw std::invalid_argument("lp: row count mismatch");
    for (const auto& row : a_)
      if (row.size() != c_.size()) throw std::invalid_argument("lp: column count mismatch");
  }

  LpResult solve() {
    const std::size_t m = a_.size(), n = c_.size();
    // tableau columns: n structural, m artificial, then rhs
    width_ = n + m;
    t_.assign(m, std::vector<Ratio>(width_ + 1));
    basis_.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      bool flip = b_[i].sign() < 0;
      for (std::size_t j = 0; j < n; ++j) t_[i][j] = flip ? -a_[i][j] : a_[i][j];
      t_[i][n + i] = Ratio(1);
      t_[i][width_] = flip ? -b_[i] : b_[i];
      basis_[i] = n + i;
    }
    allowed_.assign(width_, true);

    // phase 1: minimize the sum of artificials
    std::vector<Ratio> c1(width_);
    for (std::size_t j = n; j < width_; ++j) c1[j] = Ratio(1);
    run(c1);
    Ratio infeas;
    for (std::size_t i = 0; i < t_.size(); ++i)
      if (basis_[i] >= n) infeas += t_[i][width_];
    if (infeas.sign() > 0) return {LpStatus::kInfeasible, {}, {}};

    // drive zero-valued artificials out of the basis; drop redundant rows
    for (std::size_t i = 0; i < t_.size();) {
      if (basis_[i] < n) {
        ++i;
        continue;
      }
      std::size_t col = width_;
      for (std::size_t j = 0; j < n; ++j)
        if (!t_[i][j].is_zero()) {
          col = j;
          break;
        }
      if (col == width_) {
        t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        pivot(i, col);
        ++i;
      }
    }
    for (std::size_t j = n; j < width_; ++j) allowed_[j] = false;

    std::vector<Ratio> c2(width_);
    for (std::size_t j = 0; j < n; ++j) c2[j] = c_[j];
    if (!run(c2)) return {LpStatus::kUnbounded, {}, {}};

    LpResult res{LpStatus::kOptimal, {}, std::vector<Ratio>(n)};
    for (std::size_t i = 0; i < t_.size(); ++i)
      if (basis_[i] < n) res.x[basis_[i]] = t_[i][width_];
    for (std::size_t j = 0; j < n; ++j) res.value += c_[j] * res.x[j];
    return res;
  }

 private:
  void pivot(std::size_t r, std::size_t col) {
    Ratio p = t_[r][col];
    for (auto& v : t_[r]) v /= p;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if (i == r || t_[i][col].is_zero()) continue;
      Ratio f = t_[i][col];
      for (std::size_t j = 0; j <= width_; ++j)
        if (!t_[r][j].is_zero()) t_[i][j] -= f * t_[r][j];
    }
    basis_[r] = col;
  }

  /// Minimizes cost over the current basis. Returns false when unbounded.
  bool run(const std::vector<Ratio>& cost) {
    for (;;) {
      // reduced cost of column j: cost_j - sum_i cost_{basis_i} t_ij
      std::size_t enter = width_;
      for (std::size_t j = 0; j < width_ && enter == width_; ++j) {
        if (!allowed_[j]) continue;
        Ratio rc = cost[j];
        for (std::size_t i = 0; i < t_.size(); ++i)
          if (!cost[basis_[i]].is_zero() && !t_[i][j].is_zero()) rc -= cost[basis_[i]] * t_[i][j];
        if (rc.sign() < 0) enter = j;
      }
      if (enter == width_) return true;
      std::optional<std::size_t> leave;
      Ratio best;
      for (std::size_t i = 0; i < t_.size(); ++i) {
        if (t_[i][enter].sign() <= 0) continue;
        Ratio ratio = t_[i][width_] / t_[i][enter];
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, enter);
    }
  }

  std::vector<std::vector<Ratio>> a_;
  std::vector<Ratio> b_;
  std::vector<Ratio> c_;
  std::vector<std::vector<Ratio>> t_;
  std::vector<std::size_t> basis_;
  std::vector<bool> allowed_;
  std::size_t width_ = 0;
};

inline LpResult solve_lp(std::vector<std::vector<Ratio>> a, std::vector<Ratio> b, std::vector<Ratio> c) {
  return SimplexLp(std::move(a), std::move(b), std::move(c)).solve();
}

}  // namespace circuit
