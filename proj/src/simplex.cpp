#include "oscomp/simplex.hpp"

#include <algorithm>

#include "oscomp/errors.hpp"

namespace oscomp {

namespace {

const Rat kZero(0);

struct Tableau {
  std::size_t rows = 0, cols = 0;        // cols excludes the rhs
  std::vector<std::vector<Rat>> t;       // rows x (cols + 1), rhs last
  std::vector<std::size_t> basis;        // basic variable per row

  Rat& at(std::size_t i, std::size_t j) { return t[i][j]; }
  Rat& rhs(std::size_t i) { return t[i][cols]; }

  void pivot(std::size_t r, std::size_t c) {
    Rat p = t[r][c];
    for (auto& x : t[r]) x /= p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || t[i][c] == kZero) continue;
      Rat f = t[i][c];
      for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[r][j];
    }
    basis[r] = c;
  }
};

// Maximizes costs.x over the tableau with Bland's rule; only columns below
// max_enter may enter the basis. Returns false when unbounded. Reduced costs
// are recomputed each round; problem sizes are tiny.
bool simplex_run(Tableau& tb, const std::vector<Rat>& costs, std::size_t max_enter) {
  for (;;) {
    std::vector<Rat> dual(tb.rows);
    for (std::size_t i = 0; i < tb.rows; ++i) dual[i] = costs[tb.basis[i]];
    std::size_t enter = tb.cols;
    for (std::size_t j = 0; j < max_enter && enter == tb.cols; ++j) {
      Rat d = costs[j];
      for (std::size_t i = 0; i < tb.rows; ++i)
        if (tb.t[i][j] != kZero) d -= dual[i] * tb.t[i][j];
      if (d > kZero) enter = j;  // Bland: first improving column
    }
    if (enter == tb.cols) return true;
    std::size_t leave = tb.rows;
    Rat best(0);
    for (std::size_t i = 0; i < tb.rows; ++i) {
      if (tb.t[i][enter] <= kZero) continue;
      Rat ratio = tb.rhs(i) / tb.t[i][enter];
      if (leave == tb.rows || ratio < best ||
          (ratio == best && tb.basis[i] < tb.basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == tb.rows) return false;
    tb.pivot(leave, enter);
  }
}

}  // namespace

LpResult lp_maximize(const std::vector<Rat>& c, const std::vector<LpConstraint>& cons) {
  std::size_t n = c.size();
  for (const auto& row : cons)
    if (row.a.size() != n) fail(Errc::IncompatibleModels, "LP row arity mismatch");

  // Standard form: v_j = p_j - q_j with p, q >= 0; surplus s_i for Ge rows.
  std::size_t m = cons.size();
  std::size_t n_struct = 2 * n;
  std::vector<std::size_t> surplus_col(m, SIZE_MAX);
  for (std::size_t i = 0; i < m; ++i)
    if (cons[i].kind == LpConstraint::Kind::Ge) {
      surplus_col[i] = n_struct;
      ++n_struct;
    }
  std::size_t n_total = n_struct + m;  // one artificial per row

  Tableau tb;
  tb.rows = m;
  tb.cols = n_total;
  tb.t.assign(m, std::vector<Rat>(n_total + 1, kZero));
  tb.basis.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    bool flip = cons[i].b < kZero;
    Rat sign(flip ? -1 : 1);
    for (std::size_t j = 0; j < n; ++j) {
      tb.t[i][2 * j] = sign * cons[i].a[j];
      tb.t[i][2 * j + 1] = -sign * cons[i].a[j];
    }
    if (surplus_col[i] != SIZE_MAX) tb.t[i][surplus_col[i]] = sign * Rat(-1);
    tb.rhs(i) = sign * cons[i].b;
    tb.t[i][n_struct + i] = Rat(1);
    tb.basis[i] = n_struct + i;
  }

  // Phase 1: drive the artificials to zero.
  std::vector<Rat> phase1_costs(n_total, kZero);
  for (std::size_t i = 0; i < m; ++i) phase1_costs[n_struct + i] = Rat(-1);
  if (!simplex_run(tb, phase1_costs, n_total))
    fail(Errc::InternalLimit, "phase-1 LP reported unbounded");
  Rat art_sum(0);
  for (std::size_t i = 0; i < m; ++i)
    if (tb.basis[i] >= n_struct) art_sum += tb.rhs(i);
  if (art_sum != kZero) return {LpStatus::Infeasible, kZero, {}};

  // Pivot lingering zero-level artificials out; drop redundant rows.
  for (std::size_t i = 0; i < tb.rows;) {
    if (tb.basis[i] < n_struct) {
      ++i;
      continue;
    }
    std::size_t j = 0;
    while (j < n_struct && tb.t[i][j] == kZero) ++j;
    if (j < n_struct) {
      tb.pivot(i, j);
      ++i;
    } else {
      tb.t.erase(tb.t.begin() + static_cast<std::ptrdiff_t>(i));
      tb.basis.erase(tb.basis.begin() + static_cast<std::ptrdiff_t>(i));
      --tb.rows;
    }
  }

  // Phase 2 on the original objective; artificial columns may not re-enter
  // (none is basic at this point, so they are inert).
  std::vector<Rat> phase2_costs(n_total, kZero);
  for (std::size_t j = 0; j < n; ++j) {
    phase2_costs[2 * j] = c[j];
    phase2_costs[2 * j + 1] = -c[j];
  }
  if (!simplex_run(tb, phase2_costs, n_struct)) return {LpStatus::Unbounded, kZero, {}};

  std::vector<Rat> std_point(n_total, kZero);
  for (std::size_t i = 0; i < tb.rows; ++i) std_point[tb.basis[i]] = tb.rhs(i);
  std::vector<Rat> point(n, kZero);
  for (std::size_t j = 0; j < n; ++j) point[j] = std_point[2 * j] - std_point[2 * j + 1];
  Rat value(0);
  for (std::size_t j = 0; j < n; ++j) value += c[j] * point[j];
  return {LpStatus::Optimal, value, point};
}

}  // namespace oscomp
