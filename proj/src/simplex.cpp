#include "pcw/simplex.hpp"

#include "pcw/errors.hpp"

namespace pcw {

namespace {

// Dense tableau with rows = constraints, columns = structural + slack +
// artificial variables, last column = rhs. basis[r] is the column basic in
// row r. Bland's rule: entering = lowest eligible column, leaving = lowest
// basic index among minimal ratios.
struct Tableau {
  std::vector<std::vector<Rat>> t;  // m rows, each of width ncols+1
  std::vector<int> basis;
  int ncols;

  void pivot(int r, int c) {
    Rat inv = 1 / t[r][c];
    for (auto& v : t[r]) v *= inv;
    for (size_t k = 0; k < t.size(); ++k) {
      if ((int)k == r) continue;
      Rat f = t[k][c];
      if (f == 0) continue;
      for (int j = 0; j <= ncols; ++j) t[k][j] -= f * t[r][j];
    }
    basis[r] = c;
  }

  // minimize obj (a row of length ncols, cost coefficients); returns false
  // when unbounded. allowed[c] marks columns eligible to enter.
  bool run(std::vector<Rat>& z, const std::vector<char>& allowed) {
    for (;;) {
      int enter = -1;
      for (int c = 0; c < ncols; ++c)
        if (allowed[c] && z[c] < 0) {
          enter = c;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      Rat best;
      for (size_t r = 0; r < t.size(); ++r) {
        if (t[r][enter] <= 0) continue;
        Rat ratio = t[r][ncols] / t[r][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[r] < basis[leave]))
          leave = r, best = ratio;
      }
      if (leave < 0) return false;
      pivot(leave, enter);
      // update reduced costs
      Rat f = z[enter];
      for (int j = 0; j < ncols; ++j) z[j] -= f * t[leave][j];
      z.back() -= f * t[leave][ncols];
    }
  }
};

}  // namespace

LPResult solve_lp(const std::vector<std::vector<Rat>>& A,
                  const std::vector<Rat>& b, const std::vector<int>& rel,
                  const std::vector<Rat>& c) {
  size_t m = A.size(), n = c.size();
  if (b.size() != m || rel.size() != m)
    throw InputError("inconsistent linear program dimensions");
  // columns: n structural, then one slack per inequality row, then one
  // artificial per row needing it
  int nslack = 0;
  for (auto r : rel)
    if (r != 0) ++nslack;
  int ncols = n + nslack;
  std::vector<std::vector<Rat>> rows(m, std::vector<Rat>(ncols + 1, 0));
  std::vector<int> slack_col(m, -1);
  {
    int s = 0;
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = 0; j < n; ++j) rows[i][j] = A[i][j];
      if (rel[i] != 0) {
        slack_col[i] = n + s;
        rows[i][n + s] = rel[i] < 0 ? 1 : -1;
        ++s;
      }
      rows[i][ncols] = b[i];
      if (rows[i][ncols] < 0)
        for (auto& v : rows[i]) v = -v;
    }
  }
  // artificials where the slack cannot serve as an initial basic variable
  Tableau tab;
  tab.basis.assign(m, -1);
  std::vector<char> artificial;
  for (size_t i = 0; i < m; ++i) {
    if (slack_col[i] >= 0 && rows[i][slack_col[i]] > 0)
      tab.basis[i] = slack_col[i];
  }
  int nart = 0;
  for (size_t i = 0; i < m; ++i)
    if (tab.basis[i] < 0) ++nart;
  tab.ncols = ncols + nart;
  artificial.assign(tab.ncols, 0);
  tab.t.assign(m, std::vector<Rat>(tab.ncols + 1, 0));
  {
    int a = 0;
    for (size_t i = 0; i < m; ++i) {
      for (int j = 0; j < ncols; ++j) tab.t[i][j] = rows[i][j];
      tab.t[i][tab.ncols] = rows[i][ncols];
      if (tab.basis[i] < 0) {
        int col = ncols + a++;
        tab.t[i][col] = 1;
        tab.basis[i] = col;
        artificial[col] = 1;
      }
    }
  }
  std::vector<char> allow_all(tab.ncols, 1);
  // phase 1: minimize the sum of artificials
  if (nart > 0) {
    std::vector<Rat> z(tab.ncols + 1, 0);
    for (int j = 0; j < tab.ncols; ++j)
      if (artificial[j]) z[j] = 1;
    // make reduced costs consistent with the starting basis
    for (size_t r = 0; r < m; ++r) {
      if (!artificial[tab.basis[r]]) continue;
      for (int j = 0; j <= tab.ncols; ++j) z[j] -= tab.t[r][j];
    }
    if (!tab.run(z, allow_all))
      throw std::logic_error("phase-1 objective cannot be unbounded");
    if (z.back() != 0) return {LPStatus::Infeasible, {}, 0};
    // drive surviving artificials out of the basis
    for (size_t r = 0; r < m; ++r) {
      if (!artificial[tab.basis[r]]) continue;
      int enter = -1;
      for (int jc = 0; jc < ncols; ++jc)
        if (tab.t[r][jc] != 0) {
          enter = jc;
          break;
        }
      if (enter >= 0) tab.pivot(r, enter);
      // a fully zero row is redundant; its artificial stays basic at zero
    }
  }
  // phase 2
  std::vector<char> allowed(tab.ncols, 1);
  for (int j = 0; j < tab.ncols; ++j)
    if (artificial[j]) allowed[j] = 0;
  std::vector<Rat> z(tab.ncols + 1, 0);
  for (size_t j = 0; j < n; ++j) z[j] = c[j];
  for (size_t r = 0; r < m; ++r) {
    int bcol = tab.basis[r];
    if (bcol < (int)tab.ncols && z[bcol] != 0) {
      Rat f = z[bcol];
      for (int j = 0; j < tab.ncols; ++j) z[j] -= f * tab.t[r][j];
      z.back() -= f * tab.t[r][tab.ncols];
    }
  }
  if (!tab.run(z, allowed)) return {LPStatus::Unbounded, {}, 0};
  LPResult res;
  res.status = LPStatus::Optimal;
  res.x.assign(n, 0);
  for (size_t r = 0; r < m; ++r)
    if (tab.basis[r] < (int)n) res.x[tab.basis[r]] = tab.t[r][tab.ncols];
  res.objective = 0;
  for (size_t j = 0; j < n; ++j) res.objective += c[j] * res.x[j];
  return res;
}

}  // namespace pcw
