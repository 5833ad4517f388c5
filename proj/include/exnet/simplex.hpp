#pragma once

// Dense two-phase simplex for  min c'x  s.t.  Ax = b, x >= 0.
// Bland's rule throughout, so it terminates without cycling. With Rational
// scalars every pivot is exact and `tol` is ignored.

#include <optional>
#include <stdexcept>
#include <vector>

#include "exnet/rational.hpp"

namespace exnet {

enum class LpStatus { optimal, infeasible, unbounded };

template <class T>
struct LpResult {
  LpStatus status = LpStatus::infeasible;
  std::vector<T> x;
  T objective{};
  /// Phase-one optimum: the total artificial mass that could not be removed.
  T infeasibility{};
  /// Constraint row carrying the largest leftover artificial, when infeasible.
  std::optional<std::size_t> worst_row;
  std::size_t pivots = 0;
};

namespace detail {

inline bool positive(const Rational& x, double) { return sgn(x) > 0; }
inline bool positive(double x, double tol) { return x > tol; }
inline bool negative(const Rational& x, double) { return sgn(x) < 0; }
inline bool negative(double x, double tol) { return x < -tol; }

template <class T>
class Tableau {
 public:
  Tableau(const std::vector<std::vector<T>>& a, const std::vector<T>& b, double tol)
      : rows_(a.size()), cols_(a.empty() ? 0 : a.front().size()), tol_(tol) {
    width_ = cols_ + rows_;
    cells_.assign(rows_ * width_, T(0));
    rhs_.assign(rows_, T(0));
    basis_.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      if (a[i].size() != cols_) throw std::invalid_argument("ragged constraint matrix");
      const bool flip = negative(b[i], 0.0);
      for (std::size_t j = 0; j < cols_; ++j) at(i, j) = flip ? T(-a[i][j]) : a[i][j];
      rhs_[i] = flip ? T(-b[i]) : b[i];
      at(i, cols_ + i) = T(1);
      basis_[i] = cols_ + i;
    }
  }

  // Minimises cost' x over the current basis; columns with blocked[j] never enter.
  LpStatus optimise(const std::vector<T>& cost, const std::vector<bool>& blocked, std::size_t& pivots) {
    while (true) {
      std::vector<T> reduced = cost;
      for (std::size_t i = 0; i < rows_; ++i) {
        const T& cb = cost[basis_[i]];
        if (cb == T(0)) continue;
        for (std::size_t j = 0; j < width_; ++j) reduced[j] -= cb * at(i, j);
      }
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < width_ && !entering; ++j)
        if (!blocked[j] && negative(reduced[j], tol_)) entering = j;
      if (!entering) return LpStatus::optimal;

      std::optional<std::size_t> leaving;
      T best_ratio{};
      for (std::size_t i = 0; i < rows_; ++i) {
        if (!positive(at(i, *entering), tol_)) continue;
        const T ratio = rhs_[i] / at(i, *entering);
        if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (!leaving) return LpStatus::unbounded;
      pivot(*leaving, *entering);
      ++pivots;
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const T scale = at(r, c);
    for (std::size_t j = 0; j < width_; ++j) at(r, j) /= scale;
    rhs_[r] /= scale;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r) continue;
      const T factor = at(i, c);
      if (factor == T(0)) continue;
      for (std::size_t j = 0; j < width_; ++j) at(i, j) -= factor * at(r, j);
      rhs_[i] -= factor * rhs_[r];
    }
    basis_[r] = c;
  }

  T& at(std::size_t i, std::size_t j) { return cells_[i * width_ + j]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t width() const { return width_; }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const std::vector<T>& rhs() const { return rhs_; }
  double tol() const { return tol_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t width_ = 0;
  double tol_;
  std::vector<T> cells_;
  std::vector<T> rhs_;
  std::vector<std::size_t> basis_;
};

}  // namespace detail

/// Solves min c'x s.t. Ax = b, x >= 0. An empty `cost` asks for feasibility only.
template <class T>
LpResult<T> solve_lp(const std::vector<std::vector<T>>& a, const std::vector<T>& b, const std::vector<T>& cost = {},
                     double tol = 1e-9) {
  if (a.size() != b.size()) throw std::invalid_argument("constraint matrix and right-hand side disagree");
  detail::Tableau<T> tab(a, b, tol);
  const std::size_t n = tab.cols();
  const std::size_t m = tab.rows();
  if (!cost.empty() && cost.size() != n) throw std::invalid_argument("cost vector has the wrong length");

  LpResult<T> result;
  std::vector<T> phase_one(tab.width(), T(0));
  for (std::size_t i = 0; i < m; ++i) phase_one[n + i] = T(1);
  std::vector<bool> blocked(tab.width(), false);
  tab.optimise(phase_one, blocked, result.pivots);

  T leftover(0);
  T worst(0);
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis()[i] < n) continue;
    leftover += tab.rhs()[i];
    if (tab.rhs()[i] > worst) {
      worst = tab.rhs()[i];
      result.worst_row = tab.basis()[i] - n;
    }
  }
  result.infeasibility = leftover;
  if (detail::positive(leftover, tol)) {
    result.status = LpStatus::infeasible;
    return result;
  }
  result.worst_row.reset();

  // Drive zero-level artificials out of the basis where a structural column allows it.
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis()[i] < n) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (detail::positive(tab.at(i, j), tol) || detail::negative(tab.at(i, j), tol)) {
        tab.pivot(i, j);
        ++result.pivots;
        break;
      }
  }
  for (std::size_t j = n; j < tab.width(); ++j) blocked[j] = true;

  result.status = LpStatus::optimal;
  if (!cost.empty()) {
    std::vector<T> full(tab.width(), T(0));
    for (std::size_t j = 0; j < n; ++j) full[j] = cost[j];
    result.status = tab.optimise(full, blocked, result.pivots);
  }
  result.x.assign(n, T(0));
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis()[i] < n) result.x[tab.basis()[i]] = tab.rhs()[i];
  T objective(0);
  if (!cost.empty())
    for (std::size_t j = 0; j < n; ++j) objective += cost[j] * result.x[j];
  result.objective = objective;
  return result;
}

}  // namespace exnet
