#include "iklab/simplex.hpp"

#include <cassert>
#include <vector>

#include "iklab/errors.hpp"

namespace iklab::detail {
namespace {

enum class Status { basic, at_lower, at_upper };

}  // namespace

// Tableau simplex for  max c'x, Ax <= b, 0 <= x <= u  with slack variables
// s >= 0 (unbounded above). Nonbasic structural variables rest at either
// bound; rhs stores the current values of the basic variables, with nonbasic
// bound contributions already absorbed. Bland's rule plus exact arithmetic
// rules out cycling.
LpResult solve_bounded_lp(const BoundedLp& lp, long long max_pivots) {
  const int m = static_cast<int>(lp.a.size());
  const int n = static_cast<int>(lp.c.size());
  const int total = n + m;  // structurals then slacks

  std::vector<std::vector<Rat>> tab(m, std::vector<Rat>(total, Rat(0)));
  std::vector<Rat> rhs = lp.b;
  std::vector<Rat> reduced(total, Rat(0));
  std::vector<Status> status(total, Status::at_lower);
  std::vector<int> basis(m);

  for (int i = 0; i < m; ++i) {
    assert(lp.b[i] >= 0);
    for (int j = 0; j < n; ++j) tab[i][j] = lp.a[i][j];
    tab[i][n + i] = 1;
    basis[i] = n + i;
    status[n + i] = Status::basic;
  }
  for (int j = 0; j < n; ++j) reduced[j] = lp.c[j];

  auto upper_of = [&](int col) -> const Rat* {
    return col < n ? &lp.upper[col] : nullptr;  // slacks have no upper bound
  };

  LpResult result;
  for (;;) {
    if (result.pivots >= max_pivots)
      throw Error(Errc::lp_numerical_failure, "pivot limit exceeded");

    // Bland: lowest-index improving column.
    int enter = -1;
    for (int j = 0; j < total; ++j) {
      if ((status[j] == Status::at_lower && reduced[j] > 0) ||
          (status[j] == Status::at_upper && reduced[j] < 0)) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;  // optimal
    bool from_lower = status[enter] == Status::at_lower;
    int sign = from_lower ? 1 : -1;

    // Ratio test: entering moves t >= 0 away from its bound. Basic value i
    // changes by -sign * tab[i][enter] * t; a positive coefficient drives it
    // toward zero, a negative one toward its upper bound (structurals only).
    // Moving the full span u_enter flips the entering variable instead.
    Rat limit;
    bool limited = false;
    int leave_row = -1;
    bool leave_to_upper = false;
    if (const Rat* u = upper_of(enter)) {
      limit = *u;
      limited = true;
    }
    for (int i = 0; i < m; ++i) {
      Rat coef = sign > 0 ? tab[i][enter] : -tab[i][enter];
      if (coef > 0) {
        Rat bound = rhs[i] / coef;
        if (!limited || bound < limit ||
            (bound == limit && leave_row >= 0 && basis[i] < basis[leave_row])) {
          limit = bound;
          limited = true;
          leave_row = i;
          leave_to_upper = false;
        }
      } else if (coef < 0) {
        const Rat* ub = upper_of(basis[i]);
        if (ub == nullptr) continue;
        Rat bound = (*ub - rhs[i]) / -coef;
        if (!limited || bound < limit ||
            (bound == limit && leave_row >= 0 && basis[i] < basis[leave_row])) {
          limit = bound;
          limited = true;
          leave_row = i;
          leave_to_upper = true;
        }
      }
    }
    if (!limited) throw Error(Errc::lp_numerical_failure, "unbounded direction");
    ++result.pivots;

    Rat delta = Rat(sign) * limit;  // signed movement of the entering variable
    for (int i = 0; i < m; ++i)
      if (tab[i][enter] != 0) rhs[i] -= tab[i][enter] * delta;

    if (leave_row < 0) {
      status[enter] = from_lower ? Status::at_upper : Status::at_lower;
      continue;
    }

    int leave = basis[leave_row];
    Rat entering_value = (from_lower ? Rat(0) : *upper_of(enter)) + delta;
#ifndef NDEBUG
    Rat leave_value = leave_to_upper ? *upper_of(leave) : Rat(0);
    assert(rhs[leave_row] == leave_value);
#endif

    Rat pivot = tab[leave_row][enter];
    assert(pivot != 0);
    for (int j = 0; j < total; ++j)
      if (tab[leave_row][j] != 0) tab[leave_row][j] /= pivot;
    for (int i = 0; i < m; ++i) {
      if (i == leave_row) continue;
      Rat f = tab[i][enter];
      if (f == 0) continue;
      for (int j = 0; j < total; ++j)
        if (tab[leave_row][j] != 0) tab[i][j] -= f * tab[leave_row][j];
    }
    Rat rc = reduced[enter];
    if (rc != 0)
      for (int j = 0; j < total; ++j)
        if (tab[leave_row][j] != 0) reduced[j] -= rc * tab[leave_row][j];

    rhs[leave_row] = entering_value;
    basis[leave_row] = enter;
    status[enter] = Status::basic;
    status[leave] = leave_to_upper ? Status::at_upper : Status::at_lower;
  }

  result.x.assign(n, Rat(0));
  for (int j = 0; j < n; ++j)
    if (status[j] == Status::at_upper) result.x[j] = lp.upper[j];
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) result.x[basis[i]] = rhs[i];
  result.objective = 0;
  for (int j = 0; j < n; ++j)
    if (result.x[j] != 0) result.objective += lp.c[j] * result.x[j];
  return result;
}

}  // namespace iklab::detail
