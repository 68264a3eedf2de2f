#include "pcw/classify.hpp"

#include <algorithm>
#include <bit>

#include "pcw/cone.hpp"
#include "pcw/errors.hpp"
#include "pcw/simplex.hpp"
#include "pcw/weights.hpp"

namespace pcw {

namespace {

void require_match(const Codebook& cb, const std::vector<long long>& p) {
  if ((int)p.size() != cb.n)
    throw InputError("vector length does not match the codebook");
  for (auto x : p)
    if (x < 0) throw InputError("pseudocodeword entries must be nonnegative");
}

Rat word_cost(std::uint64_t c, const std::vector<Rat>& w) {
  Rat s = 0;
  for (size_t i = 0; i < w.size(); ++i)
    if (c >> i & 1) s += w[i];
  return s;
}

}  // namespace

bool verify_bad_witness(const Codebook& cb, const std::vector<long long>& p,
                        const std::vector<Rat>& w) {
  if (w.size() != p.size() || (int)p.size() != cb.n) return false;
  if (dot(p, w) >= 0) return false;
  for (auto c : cb.words)
    if (c && word_cost(c, w) < 0) return false;
  return true;
}

DomainResult is_bad_awgn(const Codebook& cb, const std::vector<long long>& p) {
  require_match(cb, p);
  int n = cb.n;
  // w = u - v with u, v >= 0; feasibility of: every nonzero codeword cost
  // >= 0, p-cost <= -1 (scaling makes strict negativity equivalent)
  std::vector<std::vector<Rat>> A;
  std::vector<Rat> b;
  std::vector<int> rel;
  for (auto c : cb.words) {
    if (!c) continue;
    std::vector<Rat> row(2 * n, 0);
    for (int i = 0; i < n; ++i)
      if (c >> i & 1) {
        row[i] = 1;
        row[n + i] = -1;
      }
    A.push_back(row);
    b.push_back(0);
    rel.push_back(+1);
  }
  {
    std::vector<Rat> row(2 * n, 0);
    for (int i = 0; i < n; ++i) {
      row[i] = p[i];
      row[n + i] = -p[i];
    }
    A.push_back(row);
    b.push_back(-1);
    rel.push_back(-1);
  }
  auto lp = solve_lp(A, b, rel, std::vector<Rat>(2 * n, 0));
  DomainResult r;
  if (lp.status == LPStatus::Optimal) {
    r.bad = true;
    r.witness.resize(n);
    for (int i = 0; i < n; ++i) r.witness[i] = lp.x[i] - lp.x[n + i];
    if (!verify_bad_witness(cb, p, r.witness))
      throw std::logic_error("cost-function witness failed re-verification");
  }
  return r;
}

DomainResult is_bad_tawgn(const Codebook& cb, const std::vector<long long>& p,
                          const Rat& L) {
  require_match(cb, p);
  if (L <= 0) throw InputError("truncation level must be positive");
  int n = cb.n;
  // z = w + L in [0, 2L]; minimize p.z; bad iff the minimum of p.w is < 0
  std::vector<std::vector<Rat>> A;
  std::vector<Rat> b;
  std::vector<int> rel;
  for (auto c : cb.words) {
    if (!c) continue;
    std::vector<Rat> row(n, 0);
    int wt = 0;
    for (int i = 0; i < n; ++i)
      if (c >> i & 1) {
        row[i] = 1;
        ++wt;
      }
    A.push_back(row);
    b.push_back(L * wt);
    rel.push_back(+1);
  }
  for (int i = 0; i < n; ++i) {
    std::vector<Rat> row(n, 0);
    row[i] = 1;
    A.push_back(row);
    b.push_back(2 * L);
    rel.push_back(-1);
  }
  std::vector<Rat> c(n);
  for (int i = 0; i < n; ++i) c[i] = Rat(p[i]);
  auto lp = solve_lp(A, b, rel, c);
  if (lp.status != LPStatus::Optimal)
    throw std::logic_error("box-constrained program must have an optimum");
  Rat psum = 0;
  for (auto x : p) psum += x;
  Rat value = lp.objective - L * psum;  // = min p.w over the domain
  DomainResult r;
  if (value < 0) {
    r.bad = true;
    r.witness.resize(n);
    for (int i = 0; i < n; ++i) r.witness[i] = lp.x[i] - L;
    if (!verify_bad_witness(cb, p, r.witness))
      throw std::logic_error("cost-function witness failed re-verification");
  }
  return r;
}

DomainResult is_bad_bsc(const Codebook& cb, const std::vector<long long>& p) {
  require_match(cb, p);
  if (cb.n > 20) throw LimitError("sign-vector search requires n <= 20");
  int n = cb.n;
  DomainResult r;
  for (std::uint64_t sgn = 0; sgn < (1ull << n); ++sgn) {
    // bit set = -1 entry
    long long pcost = 0;
    for (int i = 0; i < n; ++i) pcost += (sgn >> i & 1) ? -p[i] : p[i];
    if (pcost >= 0) continue;
    bool ok = true;
    for (auto c : cb.words) {
      if (!c) continue;
      int cost = std::popcount(c) - 2 * std::popcount(c & sgn);
      if (cost < 0) {
        ok = false;
        break;
      }
    }
    if (ok) {
      r.bad = true;
      r.witness.resize(n);
      for (int i = 0; i < n; ++i) r.witness[i] = (sgn >> i & 1) ? -1 : 1;
      if (!verify_bad_witness(cb, p, r.witness))
        throw std::logic_error("sign witness failed re-verification");
      return r;
    }
  }
  return r;
}

SufficientChecks sufficient_bad_checks(const TannerGraph& g, const Codebook& cb,
                                       const std::vector<long long>& p,
                                       bool is_irr) {
  require_match(cb, p);
  auto wr = weight_report(p);
  SufficientChecks out;
  out.weight_below_dmin =
      cb.d_min > 0 && (Rat(wr.bsc) < cb.d_min || wr.awgn < cb.d_min);
  out.support_below_dmin = cb.d_min > 0 && wr.bec < cb.d_min;
  if (out.support_below_dmin) {
    // -1 on the support leaves every codeword cost untouched or walled off
    std::uint64_t supp = support_mask(p);
    std::vector<Rat> w(p.size(), 0);
    for (int i = 0; i < cb.n; ++i)
      if (supp >> i & 1) w[i] = -1;
    Rat wall = 1;
    for (int i = 0; i < cb.n; ++i)
      if (supp >> i & 1) wall += 1;
    for (int i = 0; i < cb.n; ++i)
      if (!(supp >> i & 1)) w[i] = wall;
    if (verify_bad_witness(cb, p, w)) out.witness = w;
  }
  // third condition: irreducible non-codeword whose support outsizes the
  // inside codeword count
  std::uint64_t supp = support_mask(p);
  std::vector<std::uint64_t> inside;
  for (auto c : cb.words)
    if (c && (c & ~supp) == 0) inside.push_back(c);
  out.inside_codewords = inside.size();
  bool zero_one = std::all_of(p.begin(), p.end(),
                              [](long long x) { return x <= 1; });
  bool is_cw = zero_one && std::binary_search(cb.words.begin(), cb.words.end(),
                                              supp);
  if (is_irr && !is_cw) {
    int s = wr.bec;
    if (s >= out.inside_codewords + 1) {
      out.support_exceeds_inside_codewords_applicable = true;
      // solve: each inside codeword costs +1, p costs -2, unknowns on the
      // support only; free unknowns pinned to zero
      std::vector<int> cols;
      for (int i = 0; i < cb.n; ++i)
        if (supp >> i & 1) cols.push_back(i);
      size_t rows = inside.size() + 1, ncol = cols.size();
      std::vector<std::vector<Rat>> M(rows, std::vector<Rat>(ncol + 1, 0));
      for (size_t r = 0; r < inside.size(); ++r) {
        for (size_t j = 0; j < ncol; ++j)
          if (inside[r] >> cols[j] & 1) M[r][j] = 1;
        M[r][ncol] = 1;
      }
      for (size_t j = 0; j < ncol; ++j) M[rows - 1][j] = Rat(p[cols[j]]);
      M[rows - 1][ncol] = -2;
      // rational elimination
      size_t rr = 0;
      std::vector<int> pivot_of_row;
      for (size_t c = 0; c < ncol && rr < rows; ++c) {
        size_t piv = rr;
        while (piv < rows && M[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(M[rr], M[piv]);
        Rat inv = 1 / M[rr][c];
        for (auto& v : M[rr]) v *= inv;
        for (size_t k = 0; k < rows; ++k) {
          if (k == rr) continue;
          Rat f = M[k][c];
          if (f == 0) continue;
          for (size_t j = 0; j <= ncol; ++j) M[k][j] -= f * M[rr][j];
        }
        pivot_of_row.push_back(c);
        ++rr;
      }
      bool inconsistent = false;
      for (size_t k = rr; k < rows; ++k)
        if (M[k][ncol] != 0) inconsistent = true;
      if (inconsistent) {
        out.construction_failed = true;
      } else {
        std::vector<Rat> w(cb.n, 0);
        for (size_t r2 = 0; r2 < pivot_of_row.size(); ++r2)
          w[cols[pivot_of_row[r2]]] = M[r2][ncol];
        Rat wall = 1;
        for (int i : cols) wall += abs(w[i]);
        for (int i = 0; i < cb.n; ++i)
          if (!(supp >> i & 1)) w[i] = wall;
        if (verify_bad_witness(cb, p, w)) {
          out.support_exceeds_inside_codewords = true;
          out.witness = w;
        } else {
          out.construction_failed = true;
        }
      }
      if (out.construction_failed) {
        auto lp = is_bad_awgn(cb, p);
        if (lp.bad) {
          out.support_exceeds_inside_codewords = true;
          out.witness = lp.witness;
        }
      }
    }
  }
  (void)g;
  return out;
}

Classification classify_all(const TannerGraph& g, const Codebook& cb) {
  auto set = enumerate_irreducible(g);
  Classification out;
  for (auto& p : set.elems) {
    ClassifiedElement e;
    e.p = p;
    long long mx = *std::max_element(p.begin(), p.end());
    std::uint64_t supp = support_mask(p);
    e.codeword_multiple =
        std::binary_search(cb.words.begin(), cb.words.end(), supp) &&
        std::all_of(p.begin(), p.end(),
                    [&](long long x) { return x == 0 || x == mx; });
    e.awgn = is_bad_awgn(cb, p);
    e.tawgn1 = is_bad_tawgn(cb, p, 1);
    e.bsc = is_bad_bsc(cb, p);
    // discrete witnesses live in the truncated box, and box witnesses are
    // unrestricted witnesses
    if ((e.bsc.bad && !e.tawgn1.bad) || (e.tawgn1.bad && !e.awgn.bad))
      throw std::logic_error("domain inclusion chain violated");
    if (e.awgn.bad) ++out.bad_count;
    out.elems.push_back(std::move(e));
  }
  return out;
}

}  // namespace pcw
