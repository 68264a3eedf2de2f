#include "pcw/irreducible.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "pcw/cone.hpp"
#include "pcw/errors.hpp"

namespace pcw {

namespace {

// DFS over variable values 0..cap with per-check pruning. A check is tested
// the moment its last neighbor gets a value; partially assigned checks prune
// when even the cap on the remaining neighbors cannot restore the edge
// inequality.
struct BoxEnumerator {
  const TannerGraph& g;
  int cap;
  std::vector<int> last_var;  // per check: largest neighbor index
  std::vector<long long> val;
  std::vector<std::vector<long long>> out;
  unsigned long long budget;

  BoxEnumerator(const TannerGraph& g_, int cap_, unsigned long long budget_)
      : g(g_), cap(cap_), val(g_.n, 0), budget(budget_) {
    last_var.resize(g.m, -1);
    for (int j = 0; j < g.m; ++j)
      for (int i : g.chk[j]) last_var[j] = std::max(last_var[j], i);
  }

  bool feasible_after(int idx) {
    // idx just received a value; examine checks touching idx
    for (int j : g.var[idx]) {
      long long sum = 0, mx = 0, rest = 0;
      for (int i : g.chk[j]) {
        if (i <= idx) {
          sum += val[i];
          mx = std::max(mx, val[i]);
        } else {
          ++rest;
        }
      }
      if (rest == 0) {
        if (sum % 2 || 2 * mx > sum) return false;
      } else {
        if (2 * mx > sum + cap * rest) return false;
      }
    }
    return true;
  }

  void run(int idx) {
    if (budget-- == 0)
      throw LimitError("irreducible enumeration exceeded its step budget");
    if (idx == g.n) {
      if (std::any_of(val.begin(), val.end(), [](long long x) { return x; }))
        out.push_back(val);
      return;
    }
    for (int v = 0; v <= cap; ++v) {
      val[idx] = v;
      if (feasible_after(idx)) run(idx + 1);
    }
    val[idx] = 0;
  }
};

std::vector<std::vector<long long>> realizable_box(const TannerGraph& g,
                                                   int cap) {
  BoxEnumerator be(g, cap, 400'000'000ull);
  be.run(0);
  return be.out;
}

bool leq(const std::vector<long long>& a, const std::vector<long long>& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::vector<std::vector<long long>> sift_irreducible(
    const TannerGraph& g, std::vector<std::vector<long long>> cands) {
  std::sort(cands.begin(), cands.end(),
            [](const std::vector<long long>& a, const std::vector<long long>& b) {
              long long sa = std::accumulate(a.begin(), a.end(), 0ll);
              long long sb = std::accumulate(b.begin(), b.end(), 0ll);
              if (sa != sb) return sa < sb;
              return a < b;
            });
  std::vector<std::vector<long long>> irr;
  std::vector<long long> diff(g.n);
  for (auto& p : cands) {
    bool reducible = false;
    for (auto& a : irr) {
      if (!leq(a, p) || a == p) continue;
      for (int i = 0; i < g.n; ++i) diff[i] = p[i] - a[i];
      if (is_lift_realizable(g, diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) irr.push_back(p);
  }
  return irr;
}

// Fraction-free (Bareiss) elimination keeps every intermediate entry an
// integer minor of the input. Inputs here are sparse 0/+-1 rows, so minors
// stay far below the guard; the guard turns a hypothetical overflow into an
// error instead of a wrong rank.
void guard_magnitude(long long x) {
  if (x > 2'000'000'000ll || x < -2'000'000'000ll)
    throw LimitError("integer overflow risk in exact elimination");
}

int int_rank(std::vector<std::vector<long long>> a) {
  size_t rows = a.size();
  if (rows == 0) return 0;
  size_t cols = a[0].size();
  size_t r = 0;
  long long prev = 1;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    guard_magnitude(a[r][c]);
    for (size_t k = r + 1; k < rows; ++k) {
      guard_magnitude(a[k][c]);
      for (size_t j = c + 1; j < cols; ++j) {
        guard_magnitude(a[k][j]);
        guard_magnitude(a[r][j]);
        a[k][j] = (a[r][c] * a[k][j] - a[k][c] * a[r][j]) / prev;
      }
      a[k][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return (int)r;
}

std::vector<std::vector<long long>> tight_constraints(
    const TannerGraph& g, const std::vector<long long>& p) {
  std::vector<std::vector<long long>> rows;
  for (int i = 0; i < g.n; ++i)
    if (p[i] == 0) {
      std::vector<long long> row(g.n, 0);
      row[i] = 1;
      rows.push_back(row);
    }
  for (auto& c : g.chk) {
    long long sum = 0;
    for (int i : c) sum += p[i];
    for (int i : c) {
      if (sum - 2 * p[i] == 0) {
        std::vector<long long> row(g.n, 0);
        for (int h : c) row[h] = 1;
        row[i] = -1;
        rows.push_back(row);
      }
    }
  }
  return rows;
}

long long det_bareiss(std::vector<std::vector<long long>> a) {
  size_t n = a.size();
  long long prev = 1;
  long long sign = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[c], a[piv]);
      sign = -sign;
    }
    guard_magnitude(a[c][c]);
    for (size_t k = c + 1; k < n; ++k) {
      guard_magnitude(a[k][c]);
      for (size_t j = c + 1; j < n; ++j) {
        guard_magnitude(a[k][j]);
        guard_magnitude(a[c][j]);
        a[k][j] = (a[c][c] * a[k][j] - a[k][c] * a[c][j]) / prev;
      }
      a[k][c] = 0;
    }
    prev = a[c][c];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

IrreducibleSet enumerate_irreducible(const TannerGraph& g, int initial_cap,
                                     int max_cap) {
  if (g.n > 20) throw LimitError("irreducible enumeration requires n <= 20");
  if (g.n == 0) return {};
  for (int cap = std::max(initial_cap, 1); cap <= max_cap; ++cap) {
    auto irr = sift_irreducible(g, realizable_box(g, cap));
    int t = 0;
    for (auto& p : irr)
      for (auto x : p) t = std::max(t, (int)x);
    if (t <= cap - 1) {
      IrreducibleSet set;
      set.elems = std::move(irr);
      std::sort(set.elems.begin(), set.elems.end());
      set.max_component = t;
      set.cap_used = cap;
      set.ray_flag.resize(set.elems.size());
      for (size_t k = 0; k < set.elems.size(); ++k)
        set.ray_flag[k] = is_extreme_ray_point(g, set.elems[k]);
      return set;
    }
  }
  throw LimitError("irreducible set did not stabilize below the cap limit");
}

int t_value(const TannerGraph& g) {
  return enumerate_irreducible(g).max_component;
}

bool is_irreducible(const TannerGraph& g, const std::vector<long long>& p,
                    unsigned long long max_splits) {
  if (!is_lift_realizable(g, p))
    throw InputError("is_irreducible requires a lift-realizable vector");
  if (std::all_of(p.begin(), p.end(), [](long long x) { return x == 0; }))
    return false;
  unsigned long long combos = 1;
  for (auto x : p) {
    combos *= (unsigned long long)(x + 1);
    if (combos > max_splits)
      throw LimitError("split search too large for this vector");
  }
  std::vector<long long> a(p.size(), 0), b(p);
  // odometer over all a <= p
  while (true) {
    size_t i = 0;
    while (i < p.size() && a[i] == p[i]) {
      a[i] = 0;
      b[i] = p[i];
      ++i;
    }
    if (i == p.size()) break;
    ++a[i];
    --b[i];
    bool a_zero = std::all_of(a.begin(), a.end(), [](long long x) { return !x; });
    bool b_zero = std::all_of(b.begin(), b.end(), [](long long x) { return !x; });
    if (a_zero || b_zero) continue;
    if (is_lift_realizable(g, a) && is_lift_realizable(g, b)) return false;
  }
  return true;
}

bool is_extreme_ray_point(const TannerGraph& g, const std::vector<long long>& p) {
  if ((int)p.size() != g.n)
    throw InputError("vector length does not match variable count");
  if (std::all_of(p.begin(), p.end(), [](long long x) { return x == 0; }))
    return false;
  if (!check_cone_inequalities(g, p)) return false;
  return int_rank(tight_constraints(g, p)) == g.n - 1;
}

std::vector<std::vector<long long>> enumerate_extreme_rays(
    const TannerGraph& g, unsigned long long max_subsets) {
  if (g.n > 20) throw LimitError("ray enumeration requires n <= 20");
  // Constraint rows: one per (check, neighbor) inequality plus one per
  // nonnegativity bound.
  std::vector<std::vector<long long>> rows;
  for (auto& c : g.chk)
    for (int i : c) {
      std::vector<long long> row(g.n, 0);
      for (int h : c) row[h] = 1;
      row[i] = -1;
      rows.push_back(row);
    }
  for (int i = 0; i < g.n; ++i) {
    std::vector<long long> row(g.n, 0);
    row[i] = 1;
    rows.push_back(row);
  }
  size_t R = rows.size();
  int k = g.n - 1;
  if (k <= 0) return {};
  // subset count C(R, k) guard
  {
    unsigned long long c = 1;
    for (int i = 0; i < k; ++i) {
      c = c * (R - i) / (i + 1);
      if (c > max_subsets)
        throw LimitError("too many constraint subsets for ray enumeration");
    }
  }
  std::set<std::vector<long long>> found;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::vector<long long>> sub(k, std::vector<long long>(g.n));
  while (true) {
    for (int r = 0; r < k; ++r) sub[r] = rows[idx[r]];
    // kernel direction by signed maximal minors
    std::vector<long long> v(g.n, 0);
    bool nonzero = false;
    for (int drop = 0; drop < g.n; ++drop) {
      std::vector<std::vector<long long>> mm(k, std::vector<long long>(k));
      for (int r = 0; r < k; ++r) {
        int cc = 0;
        for (int c = 0; c < g.n; ++c)
          if (c != drop) mm[r][cc++] = sub[r][c];
      }
      long long d = det_bareiss(mm);
      v[drop] = (drop % 2 ? -d : d);
      if (d) nonzero = true;
    }
    if (nonzero) {
      // orient, make primitive, keep only cone members
      int sgn = 0;
      bool mixed = false;
      for (auto x : v) {
        if (x == 0) continue;
        int s = x > 0 ? 1 : -1;
        if (sgn == 0)
          sgn = s;
        else if (s != sgn)
          mixed = true;
      }
      if (!mixed && sgn != 0) {
        if (sgn < 0)
          for (auto& x : v) x = -x;
        long long gg = 0;
        for (auto x : v) gg = std::gcd(gg, x);
        for (auto& x : v) x /= gg;
        if (check_cone_inequalities(g, v)) {
          if (!check_even_parity(g, v))
            for (auto& x : v) x *= 2;
          found.insert(v);
        }
      }
    }
    // next combination
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == (int)R - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
  return {found.begin(), found.end()};
}

}  // namespace pcw
