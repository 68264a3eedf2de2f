#include "pcw/lifts.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "pcw/cone.hpp"
#include "pcw/errors.hpp"

namespace pcw {

namespace {

void check_perms_shape(const TannerGraph& g, int degree,
                       const std::vector<std::vector<std::vector<int>>>& perms) {
  if (degree < 1) throw InputError("cover degree must be >= 1");
  if ((int)perms.size() != g.m)
    throw InputError("permutation table must have one row per check");
  std::vector<int> seen(degree);
  for (int j = 0; j < g.m; ++j) {
    if (perms[j].size() != g.chk[j].size())
      throw InputError("permutation table row does not match check degree");
    for (auto& pm : perms[j]) {
      if ((int)pm.size() != degree)
        throw InputError("edge permutation has wrong length");
      std::fill(seen.begin(), seen.end(), 0);
      for (int b : pm) {
        if (b < 0 || b >= degree || seen[b]++)
          throw InputError("edge permutation is not a bijection");
      }
    }
  }
}

// Even row weights for L rows totalling `total`, as equal as possible,
// descending. Gale-Ryser feasibility is monotone under majorization and
// every even split majorizes this one, so if any even split of the total
// admits a matrix, this one does.
std::vector<long long> balanced_even_weights(long long total, int L) {
  long long pairs = total / 2, base = pairs / L, extra = pairs % L;
  std::vector<long long> r(L);
  for (int k = 0; k < L; ++k) r[k] = 2 * (base + (k < extra ? 1 : 0));
  return r;
}

// Whether some L x s 0/1 matrix has column sums v and all row sums even.
// Gale-Ryser on the balanced even weights: every prefix of the row sums
// must fit under sum_i min(v_i, k).
bool rows_feasible(const std::vector<long long>& v, int L) {
  int s = (int)v.size();
  long long emax = 2 * (s / 2);
  long long total = std::accumulate(v.begin(), v.end(), 0LL);
  if (total % 2) return false;
  if (total == 0) return true;
  long long mx = *std::max_element(v.begin(), v.end());
  if (mx > L || total > emax * L) return false;
  std::vector<long long> r = balanced_even_weights(total, L);
  std::vector<long long> vs(v);
  std::sort(vs.begin(), vs.end(), std::greater<>());
  long long lhs = 0;
  for (int k = 1; k <= L; ++k) {
    if (r[k - 1] == 0) break;
    lhs += r[k - 1];
    long long rhs = 0;
    for (long long x : vs) rhs += std::min<long long>(x, k);
    if (lhs > rhs) return false;
  }
  return true;
}

// Writes v as exactly L even-weight 0/1 rows (zero rows allowed), column
// sums v; empty when no such matrix exists. Construction: balanced even
// row capacities, then each column in descending order sends its ones to
// the rows with the most room left (bipartite Havel-Hakimi, which always
// completes a feasible pair).
std::vector<std::vector<char>> make_even_rows(const std::vector<long long>& v,
                                              int L) {
  int s = (int)v.size();
  if (!rows_feasible(v, L)) return {};
  std::vector<std::vector<char>> rows(L, std::vector<char>(s, 0));
  long long total = std::accumulate(v.begin(), v.end(), 0LL);
  if (total == 0) return rows;
  std::vector<long long> cap = balanced_even_weights(total, L);
  std::vector<int> cols(s), order(L);
  std::iota(cols.begin(), cols.end(), 0);
  std::sort(cols.begin(), cols.end(),
            [&](int a, int b) { return v[a] != v[b] ? v[a] > v[b] : a < b; });
  std::iota(order.begin(), order.end(), 0);
  for (int i : cols) {
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return cap[a] != cap[b] ? cap[a] > cap[b] : a < b;
    });
    for (long long t = 0; t < v[i]; ++t) {
      if (cap[order[t]] == 0)
        throw std::logic_error("row split ran dry on a feasible instance");
      rows[order[t]][i] = 1;
      --cap[order[t]];
    }
  }
  return rows;
}

// Fewest even-weight 0/1 rows with column sums v. Walks up from the
// peak/mass bound to the first feasible count; any v with 2*max <= total
// and even total splits into weight-two rows, so total/2 always stops it.
int minrows(const std::vector<long long>& v) {
  int s = (int)v.size();
  long long emax = 2 * (s / 2);
  long long total = std::accumulate(v.begin(), v.end(), 0LL);
  if (total == 0) return 0;
  long long mx = *std::max_element(v.begin(), v.end());
  long long lo = std::max(mx, emax ? (total + emax - 1) / emax : total);
  for (long long L = lo; L <= total; ++L)
    if (rows_feasible(v, (int)L)) return (int)L;
  throw std::logic_error("no even-row split below the trivial count");
}

}  // namespace

LiftGraph build_lift(const TannerGraph& g, int degree,
                     const std::vector<std::vector<std::vector<int>>>& perms) {
  check_perms_shape(g, degree, perms);
  LiftGraph lift;
  lift.base = g;
  lift.degree = degree;
  lift.perms = perms;
  std::vector<std::vector<int>> checks((size_t)g.m * degree);
  for (int j = 0; j < g.m; ++j)
    for (size_t k = 0; k < g.chk[j].size(); ++k) {
      int i = g.chk[j][k];
      for (int a = 0; a < degree; ++a)
        checks[(size_t)j * degree + perms[j][k][a]].push_back(i * degree + a);
    }
  lift.flat = graph_from_checks(g.n * degree, checks);
  return lift;
}

LiftGraph random_lift(const TannerGraph& g, int degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::vector<int>>> perms(g.m);
  for (int j = 0; j < g.m; ++j) {
    perms[j].resize(g.chk[j].size());
    for (auto& pm : perms[j]) {
      pm.resize(degree);
      std::iota(pm.begin(), pm.end(), 0);
      std::shuffle(pm.begin(), pm.end(), rng);
    }
  }
  return build_lift(g, degree, perms);
}

std::vector<long long> reduce_lift_codeword(const LiftGraph& lift,
                                            const std::vector<int>& bits) {
  if ((int)bits.size() != lift.flat.n)
    throw InputError("assignment length does not match the cover");
  for (int x : bits)
    if (x != 0 && x != 1) throw InputError("assignment must be 0/1");
  for (int jj = 0; jj < lift.flat.m; ++jj) {
    int par = 0;
    for (int ii : lift.flat.chk[jj]) par ^= bits[ii];
    if (par) throw InputError("assignment fails parity in the cover");
  }
  std::vector<long long> p(lift.base.n, 0);
  for (int i = 0; i < lift.base.n; ++i)
    for (int a = 0; a < lift.degree; ++a)
      p[i] += bits[i * lift.degree + a];
  return p;
}

int min_lift_degree(const TannerGraph& g, const std::vector<long long>& p) {
  if (!is_lift_realizable(g, p))
    throw InputError("vector is not realizable in any cover");
  int best = 1;
  std::vector<long long> v;
  for (int j = 0; j < g.m; ++j) {
    v.clear();
    for (int i : g.chk[j]) v.push_back(p[i]);
    best = std::max(best, minrows(v));
  }
  return best;
}

long long lift_degree_bound(const TannerGraph& g,
                            const std::vector<long long>& p) {
  if (p.empty()) throw InputError("empty vector");
  long long mx = *std::max_element(p.begin(), p.end());
  long long d = 0;
  for (auto& row : g.chk) d = std::max<long long>(d, row.size());
  return (mx * d + 1) / 2;
}

RealizeResult realize_pseudocodeword(const TannerGraph& g,
                                     const std::vector<long long>& p,
                                     int degree) {
  if ((int)p.size() != g.n)
    throw InputError("vector length does not match the graph");
  for (auto x : p)
    if (x < 0) throw InputError("entries must be nonnegative");
  if (!check_cone_inequalities(g, p))
    throw InputError("vector violates a neighborhood inequality");
  RealizeResult res;
  if (!check_even_parity(g, p)) {
    res.reason =
        "some check has an odd neighborhood sum, so no cover of any degree "
        "carries a codeword with these column sums";
    return res;
  }
  int floor_deg = min_lift_degree(g, p);
  if (degree > 0 && degree < floor_deg) {
    res.reason = "requested degree " + std::to_string(degree) +
                 " is below the minimum " + std::to_string(floor_deg);
    return res;
  }
  // Row splits exist per check at every L >= floor_deg, and the per-check
  // matrices wire together independently, so one pass suffices.
  int L = degree > 0 ? degree : floor_deg;
  std::vector<std::vector<std::vector<char>>> all_rows(g.m);
  std::vector<long long> v;
  for (int j = 0; j < g.m; ++j) {
    v.clear();
    for (int i : g.chk[j]) v.push_back(p[i]);
    all_rows[j] = make_even_rows(v, L);
    if (all_rows[j].empty())
      throw std::logic_error("row split failed at or above the minimum");
  }
  // Wire copy a of variable i at check j: hot copies (a < p_i) take the
  // rows containing column i, cold copies take the rest.
  std::vector<std::vector<std::vector<int>>> perms(g.m);
  for (int j = 0; j < g.m; ++j) {
    perms[j].resize(g.chk[j].size());
    for (size_t k = 0; k < g.chk[j].size(); ++k) {
      std::vector<int> with, without;
      for (int b = 0; b < L; ++b)
        (all_rows[j][b][k] ? with : without).push_back(b);
      auto& pm = perms[j][k];
      pm.insert(pm.end(), with.begin(), with.end());
      pm.insert(pm.end(), without.begin(), without.end());
    }
  }
  res.found = true;
  res.degree = L;
  res.lift = build_lift(g, L, perms);
  res.bits.assign((size_t)g.n * L, 0);
  for (int i = 0; i < g.n; ++i)
    for (int a = 0; a < p[i]; ++a) res.bits[(size_t)i * L + a] = 1;
  auto back = reduce_lift_codeword(res.lift, res.bits);
  if (back != p)
    throw std::logic_error("cover construction does not reduce to input");
  return res;
}

}  // namespace pcw
