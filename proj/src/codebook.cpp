#include "pcw/codebook.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "pcw/errors.hpp"

namespace pcw {

namespace {

std::uint64_t row_mask(const TannerGraph& g, int j) {
  std::uint64_t r = 0;
  for (int i : g.chk[j]) r |= 1ull << i;
  return r;
}

void require_small(const TannerGraph& g) {
  if (g.n > 62) throw LimitError("bitmask codebook operations require n <= 62");
}

}  // namespace

int gf2_rank(std::vector<std::uint64_t> rows) {
  int rank = 0;
  for (int bit = 63; bit >= 0; --bit) {
    size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot] >> bit & 1)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (size_t r = 0; r < rows.size(); ++r)
      if (r != (size_t)rank && (rows[r] >> bit & 1)) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

bool is_codeword(const TannerGraph& g, std::uint64_t word) {
  require_small(g);
  for (int j = 0; j < g.m; ++j)
    if (std::popcount(word & row_mask(g, j)) % 2) return false;
  return true;
}

Codebook enumerate_codewords(const TannerGraph& g) {
  require_small(g);
  std::vector<std::uint64_t> rows(g.m);
  for (int j = 0; j < g.m; ++j) rows[j] = row_mask(g, j);
  // Incremental reduced echelon form: each surviving row keeps a private
  // pivot column that no other surviving row touches.
  std::vector<std::uint64_t> red;
  std::vector<int> pivot_col;
  for (std::uint64_t r : rows) {
    for (size_t k = 0; k < red.size(); ++k)
      if (r >> pivot_col[k] & 1) r ^= red[k];
    if (!r) continue;
    int bit = std::countr_zero(r);
    for (size_t k = 0; k < red.size(); ++k)
      if (red[k] >> bit & 1) red[k] ^= r;
    red.push_back(r);
    pivot_col.push_back(bit);
  }
  int rank = red.size();
  int dim = g.n - rank;
  if (dim > 22) throw LimitError("code has more than 2^22 words");
  std::vector<char> is_pivot(g.n, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  std::vector<int> free_cols;
  for (int i = 0; i < g.n; ++i)
    if (!is_pivot[i]) free_cols.push_back(i);
  // kernel basis: one vector per free column
  std::vector<std::uint64_t> basis;
  for (int f : free_cols) {
    std::uint64_t v = 1ull << f;
    for (int r = 0; r < rank; ++r)
      if (red[r] >> f & 1) v |= 1ull << pivot_col[r];
    basis.push_back(v);
  }
  Codebook cb;
  cb.n = g.n;
  cb.dimension = dim;
  cb.words.resize(1ull << dim);
  for (std::uint64_t x = 0; x < (1ull << dim); ++x) {
    std::uint64_t w = 0;
    for (int b = 0; b < dim; ++b)
      if (x >> b & 1) w ^= basis[b];
    cb.words[x] = w;
  }
  std::sort(cb.words.begin(), cb.words.end());
  cb.d_min = 0;
  for (auto w : cb.words)
    if (w && (cb.d_min == 0 || std::popcount(w) < cb.d_min))
      cb.d_min = std::popcount(w);
  return cb;
}

TannerGraph add_redundant_checks(const TannerGraph& g, int order, int max_rows) {
  require_small(g);
  if (order < 1) throw InputError("combination order must be >= 1");
  std::vector<std::uint64_t> rows(g.m);
  for (int j = 0; j < g.m; ++j) rows[j] = row_mask(g, j);
  std::set<std::uint64_t> have(rows.begin(), rows.end());
  std::vector<std::vector<int>> checks = g.chk;
  // Enumerate subsets of size 2..order by recursive choice; sizes stay tiny
  // in practice because order is small.
  std::vector<int> pick;
  auto emit = [&](std::uint64_t sum) {
    if (sum == 0 || have.count(sum)) return;
    have.insert(sum);
    std::vector<int> c;
    for (int i = 0; i < g.n; ++i)
      if (sum >> i & 1) c.push_back(i);
    checks.push_back(c);
    if ((int)checks.size() > max_rows)
      throw LimitError("redundant-check expansion exceeds row cap");
  };
  auto rec = [&](auto&& self, int start, int left, std::uint64_t sum) -> void {
    if (left == 0) {
      emit(sum);
      return;
    }
    for (int j = start; j + left <= g.m; ++j)
      self(self, j + 1, left - 1, sum ^ rows[j]);
  };
  for (int size = 2; size <= order && size <= g.m; ++size)
    rec(rec, 0, size, 0);
  return graph_from_checks(g.n, checks);
}

std::uint64_t support_mask(const std::vector<long long>& p) {
  std::uint64_t s = 0;
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i]) s |= 1ull << i;
  return s;
}

int word_weight(std::uint64_t word) { return std::popcount(word); }

std::vector<long long> word_to_vec(std::uint64_t word, int n) {
  std::vector<long long> v(n, 0);
  for (int i = 0; i < n; ++i) v[i] = word >> i & 1;
  return v;
}

std::uint64_t bits_to_word(const std::vector<std::uint8_t>& bits) {
  std::uint64_t w = 0;
  for (size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) w |= 1ull << i;
  return w;
}

}  // namespace pcw
