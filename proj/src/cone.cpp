#include "pcw/cone.hpp"

#include <algorithm>

#include "pcw/errors.hpp"

namespace pcw {

namespace {

void require_size(const TannerGraph& g, size_t sz) {
  if ((int)sz != g.n)
    throw InputError("vector length does not match variable count");
}

}  // namespace

bool check_cone_inequalities(const TannerGraph& g,
                             const std::vector<long long>& p) {
  require_size(g, p.size());
  for (auto x : p)
    if (x < 0) return false;
  for (auto& c : g.chk) {
    long long sum = 0, mx = 0;
    for (int i : c) {
      sum += p[i];
      mx = std::max(mx, p[i]);
    }
    if (2 * mx > sum) return false;
  }
  return true;
}

bool check_cone_inequalities(const TannerGraph& g, const std::vector<Rat>& p) {
  require_size(g, p.size());
  for (auto& x : p)
    if (x < 0) return false;
  for (auto& c : g.chk) {
    Rat sum = 0, mx = 0;
    for (int i : c) {
      sum += p[i];
      if (p[i] > mx) mx = p[i];
    }
    if (2 * mx > sum) return false;
  }
  return true;
}

bool check_even_parity(const TannerGraph& g, const std::vector<long long>& p) {
  require_size(g, p.size());
  for (auto& c : g.chk) {
    long long sum = 0;
    for (int i : c) sum += p[i];
    if (sum % 2) return false;
  }
  return true;
}

bool is_lift_realizable(const TannerGraph& g, const std::vector<long long>& p) {
  return check_cone_inequalities(g, p) && check_even_parity(g, p);
}

std::vector<std::uint8_t> mod2_reduce(const TannerGraph& g,
                                      const std::vector<long long>& p) {
  if (!is_lift_realizable(g, p))
    throw InputError("mod2_reduce requires a lift-realizable vector");
  std::vector<std::uint8_t> bits(p.size());
  for (size_t i = 0; i < p.size(); ++i) bits[i] = p[i] & 1;
  // Parity of each check neighborhood is even, so the reduction is a codeword.
  if (!is_codeword(g, bits_to_word(bits)))
    throw std::logic_error("mod-2 reduction failed to be a codeword");
  return bits;
}

Decomposition decompose(const TannerGraph& g, const Codebook& cb,
                        std::vector<long long> p, DecompOrder order) {
  if (!is_lift_realizable(g, p))
    throw InputError("decompose requires a lift-realizable vector");
  // Candidate codewords sorted once by the requested preference.
  std::vector<std::uint64_t> cands;
  for (auto w : cb.words)
    if (w) cands.push_back(w);
  std::sort(cands.begin(), cands.end(), [&](std::uint64_t a, std::uint64_t b) {
    int wa = word_weight(a), wb = word_weight(b);
    if (wa != wb)
      return order == DecompOrder::WeightDesc ? wa > wb : wa < wb;
    return a < b;
  });
  Decomposition d;
  d.residual = std::move(p);
  bool progress = true;
  while (progress) {
    progress = false;
    std::uint64_t supp = support_mask(d.residual);
    for (auto c : cands) {
      if ((c & ~supp) == 0) {
        for (int i = 0; i < cb.n; ++i)
          if (c >> i & 1) --d.residual[i];
        d.codewords.push_back(c);
        progress = true;
        break;
      }
    }
  }
  d.residual_zero =
      std::all_of(d.residual.begin(), d.residual.end(),
                  [](long long x) { return x == 0; });
  d.residual_all_even =
      std::all_of(d.residual.begin(), d.residual.end(),
                  [](long long x) { return x % 2 == 0; });
  if (!d.residual_all_even)
    throw std::logic_error("terminal residual has an odd component");
  return d;
}

}  // namespace pcw
