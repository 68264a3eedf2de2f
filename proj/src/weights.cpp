#include "pcw/weights.hpp"

#include <algorithm>
#include <numeric>

#include "pcw/codebook.hpp"
#include "pcw/errors.hpp"

namespace pcw {

WeightReport weight_report(const std::vector<long long>& p) {
  long long sum = 0;
  for (auto x : p) {
    if (x < 0) throw InputError("weights are defined for nonnegative vectors");
    sum += x;
  }
  if (sum == 0) throw InputError("weights are undefined for the zero vector");
  WeightReport r;
  long long mx = 0;
  BigInt sumsq = 0;
  for (auto x : p) {
    if (x) ++r.bec;
    mx = std::max(mx, x);
    sumsq += BigInt(x) * x;
  }
  r.awgn = Rat(BigInt(sum) * sum, sumsq);
  r.max_fraction = Rat(BigInt(sum), BigInt(mx));
  // sort the entries large-to-small and find the smallest prefix holding at
  // least half the mass; hitting half exactly costs the even weight 2e
  std::vector<long long> s(p);
  std::sort(s.begin(), s.end(), std::greater<>());
  long long run = 0;
  for (size_t e = 0; e < s.size(); ++e) {
    run += s[e];
    if (2 * run >= sum) {
      r.bsc = 2 * (long long)(e + 1) - (2 * run == sum ? 0 : 1);
      break;
    }
  }
  return r;
}

Rat weight(const std::vector<long long>& p, Channel ch) {
  auto r = weight_report(p);
  switch (ch) {
    case Channel::BEC:
      return Rat(r.bec);
    case Channel::BSC:
      return Rat(r.bsc);
    default:
      return r.awgn;
  }
}

Rat w_min(const TannerGraph& g, Channel ch) {
  auto set = enumerate_irreducible(g);
  if (set.elems.empty())
    throw InputError("the graph has no nonzero pseudocodewords");
  Rat best;
  bool first = true;
  for (auto& p : set.elems) {
    Rat w = weight(p, ch);
    if (first || w < best) {
      best = w;
      first = false;
    }
  }
  return best;
}

namespace {

long long ipow(long long b, long long e) {
  long long r = 1;
  while (e-- > 0) {
    if (r > (1ll << 60) / std::max(b, 1ll))
      throw LimitError("bound overflows 64 bits");
    r *= b;
  }
  return r;
}

}  // namespace

long long tree_bound(int d, int g) { return tree_bound_generalized(d, g, 1); }

long long tree_bound_generalized(int d, int g, long long x) {
  if (d < 2) throw InputError("tree bound requires degree >= 2");
  if (g < 6 || g % 2) throw InputError("tree bound requires even girth >= 6");
  if (x < 1) throw InputError("tree bound parameter must be >= 1");
  long long total = 1;
  if ((g / 2) % 2) {
    // g = 6, 10, 14, ...: levels i = 0..(g-6)/4 contribute d(d-1)^i x^(i+1)
    for (int i = 0; i <= (g - 6) / 4; ++i)
      total += d * ipow(d - 1, i) * ipow(x, i + 1);
  } else {
    // g = 8, 12, ...: one truncated final level (d-1)^((g-4)/4) x^(g/4)
    for (int i = 0; i <= (g - 8) / 4; ++i)
      total += d * ipow(d - 1, i) * ipow(x, i + 1);
    total += ipow(d - 1, (g - 4) / 4) * ipow(x, g / 4);
  }
  return total;
}

long long feldman_bound(int deg_left_min, int g) {
  if (deg_left_min < 3)
    throw InputError("this bound requires min variable degree >= 3");
  if (g <= 4) throw InputError("this bound requires girth > 4");
  return ipow(deg_left_min - 1, (g + 3) / 4 - 1);
}

SupportBounds t_support_bounds(long long t, long long support_size) {
  if (t < 1 || support_size < 1)
    throw InputError("bounds require positive max component and support");
  SupportBounds b;
  b.bsc = Rat(BigInt(support_size), BigInt(t));
  if (t == 1) {
    b.awgn = Rat(support_size);
  } else {
    BigInt num = BigInt(2) * t * t * support_size;
    BigInt den = (BigInt(1) + BigInt(t) * t) * (t - 1) + 2 * t;
    b.awgn = Rat(num, den);
  }
  return b;
}

std::map<Rat, long long> weight_histogram(const TannerGraph& g, Channel ch) {
  return weight_histogram(g, enumerate_codewords(g), enumerate_irreducible(g),
                          ch);
}

std::map<Rat, long long> weight_histogram(const TannerGraph& g,
                                          const Codebook& cb,
                                          const IrreducibleSet& set,
                                          Channel ch) {
  std::vector<std::vector<long long>> pop;
  for (auto& p : set.elems) {
    auto bits = std::vector<std::uint8_t>(p.size());
    bool zero_one = true;
    for (size_t i = 0; i < p.size(); ++i) {
      bits[i] = p[i] ? 1 : 0;
      if (p[i] > 1) zero_one = false;
    }
    bool codeword = zero_one && is_codeword(g, bits_to_word(bits));
    if (!codeword) pop.push_back(p);
  }
  for (auto c : cb.words) {
    if (!c) continue;
    for (long long k = 1; k <= 3; ++k) {
      auto v = word_to_vec(c, g.n);
      for (auto& x : v) x *= k;
      pop.push_back(v);
    }
  }
  std::map<Rat, long long> bins;
  for (auto& p : pop) {
    Rat w = weight(p, ch);
    // lower bin edge at multiples of 1/2
    BigInt twice = numerator(w) * 2 / denominator(w);
    bins[Rat(twice, 2)] += 1;
  }
  return bins;
}

}  // namespace pcw
