#include "pcw/decode.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <thread>

#include "pcw/errors.hpp"
#include "pcw/stopping.hpp"

namespace pcw {

namespace {

double clip(double x) { return std::clamp(x, -kMsgClip, kMsgClip); }

std::vector<int> hard_decision(const TannerGraph& g,
                               const std::vector<double>& llr,
                               const std::vector<std::vector<double>>& c2v) {
  std::vector<int> bits(g.n);
  for (int i = 0; i < g.n; ++i) {
    double total = llr[i];
    for (size_t t = 0; t < g.var[i].size(); ++t) total += c2v[i][t];
    bits[i] = total < 0;
  }
  return bits;
}

bool syndrome_zero(const TannerGraph& g, const std::vector<int>& bits) {
  for (auto& row : g.chk) {
    int par = 0;
    for (int i : row) par ^= bits[i];
    if (par) return false;
  }
  return true;
}

// Flooding schedule shared by both update rules. c2v is indexed by
// (variable, incident-check slot).
template <class CheckRule>
DecodeResult iterate(const TannerGraph& g, const std::vector<double>& llr,
                     int max_iters, CheckRule rule) {
  if ((int)llr.size() != g.n)
    throw InputError("llr length does not match the graph");
  // slot of check j in var[i], aligned with chk[j] entries
  std::vector<std::vector<int>> slot(g.m);
  {
    std::vector<size_t> pos(g.n, 0);
    for (int j = 0; j < g.m; ++j) {
      slot[j].resize(g.chk[j].size());
      for (size_t k = 0; k < g.chk[j].size(); ++k) {
        int i = g.chk[j][k];
        // var[i] is sorted, find j by scan from the cached position
        while (g.var[i][pos[i]] != j) ++pos[i];
        slot[j][k] = (int)pos[i];
      }
    }
  }
  std::vector<std::vector<double>> c2v(g.n), v2c_by_chk(g.m);
  for (int i = 0; i < g.n; ++i) c2v[i].assign(g.var[i].size(), 0.0);
  for (int j = 0; j < g.m; ++j) v2c_by_chk[j].assign(g.chk[j].size(), 0.0);
  {
    auto bits = hard_decision(g, llr, c2v);
    if (syndrome_zero(g, bits)) return {bits, DecodeStatus::Converged, 0};
  }
  for (int it = 1; it <= max_iters; ++it) {
    for (int j = 0; j < g.m; ++j)
      for (size_t k = 0; k < g.chk[j].size(); ++k) {
        int i = g.chk[j][k];
        double total = llr[i];
        for (size_t t = 0; t < g.var[i].size(); ++t)
          if ((int)t != slot[j][k]) total += c2v[i][t];
        v2c_by_chk[j][k] = clip(total);
      }
    for (int j = 0; j < g.m; ++j)
      for (size_t k = 0; k < g.chk[j].size(); ++k)
        c2v[g.chk[j][k]][slot[j][k]] = clip(rule(v2c_by_chk[j], k));
    auto bits = hard_decision(g, llr, c2v);
    if (syndrome_zero(g, bits)) return {bits, DecodeStatus::Converged, it};
  }
  return {hard_decision(g, llr, c2v), DecodeStatus::Detected, max_iters};
}

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

DecodeResult min_sum_decode(const TannerGraph& g,
                            const std::vector<double>& llr, int max_iters) {
  return iterate(g, llr, max_iters,
                 [](const std::vector<double>& in, size_t skip) {
                   double sign = 1.0, mn = kMsgClip;
                   for (size_t t = 0; t < in.size(); ++t) {
                     if (t == skip) continue;
                     if (in[t] < 0) sign = -sign;
                     mn = std::min(mn, std::abs(in[t]));
                   }
                   return sign * mn;  // degree-1 check pushes hard toward 0
                 });
}

DecodeResult sum_product_decode(const TannerGraph& g,
                                const std::vector<double>& llr,
                                int max_iters) {
  return iterate(g, llr, max_iters,
                 [](const std::vector<double>& in, size_t skip) {
                   double prod = 1.0;
                   for (size_t t = 0; t < in.size(); ++t)
                     if (t != skip) prod *= std::tanh(in[t] / 2);
                   prod = std::clamp(prod, -1.0 + 1e-12, 1.0 - 1e-12);
                   return 2 * std::atanh(prod);
                 });
}

MLResult ml_decode(const Codebook& cb, const std::vector<double>& llr) {
  if ((int)llr.size() != cb.n)
    throw InputError("llr length does not match the codebook");
  MLResult best;
  bool have = false;
  for (auto c : cb.words) {
    double cost = 0;
    for (int i = 0; i < cb.n; ++i)
      if (c >> i & 1) cost += llr[i];
    if (!have) {
      best.word = c;
      best.cost = cost;
      have = true;
    } else if (cost < best.cost - 1e-9) {
      best.word = c;
      best.cost = cost;
      best.tie = false;
    } else if (cost < best.cost + 1e-9) {
      best.tie = true;  // words are scanned in mask order, keep the first
    }
  }
  best.bits.resize(cb.n);
  for (int i = 0; i < cb.n; ++i) best.bits[i] = best.word >> i & 1;
  return best;
}

PeelResult bec_peel(const TannerGraph& g, const std::vector<int>& received) {
  if ((int)received.size() != g.n)
    throw InputError("received length does not match the graph");
  for (int x : received)
    if (x != 0 && x != 1 && x != -1)
      throw InputError("received symbols must be 0, 1, or -1");
  PeelResult r;
  r.bits = received;
  std::vector<int> erased_count(g.m, 0);
  for (int j = 0; j < g.m; ++j)
    for (int i : g.chk[j])
      if (r.bits[i] < 0) ++erased_count[j];
  std::vector<int> queue;
  for (int j = 0; j < g.m; ++j)
    if (erased_count[j] == 1) queue.push_back(j);
  while (!queue.empty()) {
    int j = queue.back();
    queue.pop_back();
    if (erased_count[j] != 1) continue;
    int target = -1, par = 0;
    for (int i : g.chk[j]) {
      if (r.bits[i] < 0)
        target = i;
      else
        par ^= r.bits[i];
    }
    r.bits[target] = par;
    for (int j2 : g.var[target])
      if (--erased_count[j2] == 1) queue.push_back(j2);
  }
  for (int j = 0; j < g.m; ++j) {
    if (erased_count[j]) continue;
    int par = 0;
    for (int i : g.chk[j]) par ^= r.bits[i];
    if (par)
      throw InputError("received word conflicts with a fully known check");
  }
  for (int i = 0; i < g.n; ++i)
    if (r.bits[i] < 0) r.stall_set.push_back(i);
  r.resolved = r.stall_set.empty();
  if (!r.resolved) {
    std::uint64_t mask = 0;
    for (int i : r.stall_set) mask |= 1ull << i;
    if (g.n <= 62 && !is_stopping_set(g, mask))
      throw std::logic_error("peeling stalled on a non-stopping set");
  }
  return r;
}

std::vector<SweepRow> exhaustive_bsc_sweep(const TannerGraph& g,
                                           const Codebook& cb, int max_weight,
                                           int max_iters) {
  if (g.n > 30) throw LimitError("exhaustive sweep requires n <= 30");
  if (max_weight < 0 || max_weight > g.n)
    throw InputError("sweep weight out of range");
  std::vector<SweepRow> rows;
  for (int w = 0; w <= max_weight; ++w) {
    SweepRow row;
    row.weight = w;
    long long bit_errs = 0;
    std::uint64_t pat = (1ull << w) - 1;
    std::uint64_t end = w ? pat << (g.n - w) : 0;
    while (true) {
      ++row.patterns;
      std::vector<double> llr(g.n);
      for (int i = 0; i < g.n; ++i) llr[i] = (pat >> i & 1) ? -1.0 : 1.0;
      auto ms = min_sum_decode(g, llr, max_iters);
      std::uint64_t ms_word = 0;
      for (int i = 0; i < g.n; ++i)
        if (ms.bits[i]) ms_word |= 1ull << i;
      bool ms_conv = ms.status == DecodeStatus::Converged;
      if (ms_conv && ms_word == 0)
        ++row.ms_corrected;
      else if (ms_conv)
        ++row.ms_undetected;
      else
        ++row.ms_detected;
      for (int b : ms.bits) bit_errs += b;
      auto ml = ml_decode(cb, llr);
      if (ml.word == 0 && !ml.tie) ++row.ml_correct;
      if (ml.tie) {
        ++row.ml_ties;
        double ms_cost = 0;
        for (int i = 0; i < g.n; ++i)
          if (ms_word >> i & 1) ms_cost += llr[i];
        bool optimal = ms_conv &&
                       std::binary_search(cb.words.begin(), cb.words.end(),
                                          ms_word) &&
                       ms_cost < ml.cost + 1e-9;
        if (optimal || !ms_conv) ++row.ms_ok_on_ml_ties;
      } else if (ms_conv && ms_word == ml.word) {
        ++row.ms_matches_unique_ml;
      }
      if (w == 0 || pat == end) break;
      // next subset of the same popcount
      std::uint64_t c = pat & -pat, r2 = pat + c;
      pat = (((r2 ^ pat) >> 2) / c) | r2;
    }
    row.avg_bit_errors = (double)bit_errs / (double)row.patterns;
    rows.push_back(row);
  }
  return rows;
}

McResult monte_carlo(const TannerGraph& g, const McConfig& cfg) {
  if (cfg.trials <= 0) throw InputError("trial count must be positive");
  if (cfg.threads < 1) throw InputError("thread count must be positive");
  if (cfg.channel == McChannel::Bsc &&
      (cfg.param < 0 || cfg.param >= 0.5))
    throw InputError("flip probability must lie in [0, 0.5)");
  if (cfg.channel == McChannel::Bec && (cfg.param < 0 || cfg.param >= 1))
    throw InputError("erasure probability must lie in [0, 1)");
  if (cfg.channel == McChannel::Biawgn && cfg.rate <= 0)
    throw InputError("code rate must be positive");
  double sigma2 = 0, llr_mag = 0;
  if (cfg.channel == McChannel::Biawgn)
    sigma2 = 1.0 / (2.0 * cfg.rate * std::pow(10.0, cfg.param / 10.0));
  else if (cfg.channel == McChannel::Bsc)
    llr_mag = cfg.param == 0 ? 709.0  // largest finite log
                             : std::log((1.0 - cfg.param) / cfg.param);

  auto run_range = [&](long long lo, long long hi, McResult& acc) {
    std::vector<double> llr(g.n);
    std::vector<int> received(g.n);
    for (long long t = lo; t < hi; ++t) {
      std::mt19937_64 rng(splitmix64(cfg.seed + 0x9e3779b97f4a7c15ull *
                                                    (std::uint64_t)(t + 1)));
      if (cfg.channel == McChannel::Bec) {
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int i = 0; i < g.n; ++i)
          received[i] = u(rng) < cfg.param ? -1 : 0;
        auto pr = bec_peel(g, received);
        if (pr.resolved)
          ++acc.correct;
        else {
          ++acc.detected;
          acc.bit_errors += (long long)pr.stall_set.size();
        }
        continue;
      }
      if (cfg.channel == McChannel::Bsc) {
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (int i = 0; i < g.n; ++i) {
          int y = u(rng) < cfg.param;
          llr[i] = (1 - 2 * y) * llr_mag;
        }
      } else {
        std::normal_distribution<double> nd(0.0, 1.0);
        for (int i = 0; i < g.n; ++i) {
          double y = 1.0 + std::sqrt(sigma2) * nd(rng);
          llr[i] = 2.0 * y / sigma2;
        }
      }
      auto dr = cfg.decoder == DecoderKind::MinSum
                    ? min_sum_decode(g, llr, cfg.max_iters)
                    : sum_product_decode(g, llr, cfg.max_iters);
      bool zero = std::all_of(dr.bits.begin(), dr.bits.end(),
                              [](int b) { return b == 0; });
      if (dr.status == DecodeStatus::Converged && zero)
        ++acc.correct;
      else if (dr.status == DecodeStatus::Converged)
        ++acc.undetected;
      else
        ++acc.detected;
      for (int b : dr.bits) acc.bit_errors += b;
    }
  };

  McResult total;
  total.trials = cfg.trials;
  int nthreads = std::min<long long>(cfg.threads, cfg.trials);
  if (nthreads <= 1) {
    run_range(0, cfg.trials, total);
  } else {
    std::vector<McResult> parts(nthreads);
    std::vector<std::thread> pool;
    long long chunk = (cfg.trials + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
      long long lo = t * chunk, hi = std::min<long long>(cfg.trials, lo + chunk);
      pool.emplace_back(run_range, lo, hi, std::ref(parts[t]));
    }
    for (auto& th : pool) th.join();
    for (auto& p : parts) {
      total.correct += p.correct;
      total.detected += p.detected;
      total.undetected += p.undetected;
      total.bit_errors += p.bit_errors;
    }
  }
  total.ber = (double)total.bit_errors / ((double)cfg.trials * g.n);
  total.fer = (double)(total.detected + total.undetected) / (double)cfg.trials;
  return total;
}

}  // namespace pcw
