#pragma once

#include <cstdint>
#include <vector>

#include "pcw/codebook.hpp"
#include "pcw/tanner_graph.hpp"

namespace pcw {

// Positive LLR favors bit 0. Messages are clipped to +/-50.
inline constexpr double kMsgClip = 50.0;

enum class DecodeStatus { Converged, Detected };

struct DecodeResult {
  std::vector<int> bits;
  DecodeStatus status = DecodeStatus::Detected;
  int iters = 0;  // completed iterations when the syndrome first vanished
};

DecodeResult min_sum_decode(const TannerGraph& g,
                            const std::vector<double>& llr,
                            int max_iters = 100);

DecodeResult sum_product_decode(const TannerGraph& g,
                                const std::vector<double>& llr,
                                int max_iters = 100);

struct MLResult {
  std::vector<int> bits;
  std::uint64_t word = 0;
  double cost = 0;  // sum of llr over the set bits, minimized
  bool tie = false; // several codewords within tolerance of the optimum
};

// Exhaustive search over the codebook; ties resolve to the smallest mask.
MLResult ml_decode(const Codebook& cb, const std::vector<double>& llr);

struct PeelResult {
  std::vector<int> bits;       // -1 entries remain where peeling stalled
  bool resolved = false;
  std::vector<int> stall_set;  // always a stopping set
};

// received: 0/1 known, -1 erased.
PeelResult bec_peel(const TannerGraph& g, const std::vector<int>& received);

struct SweepRow {
  int weight = 0;
  long long patterns = 0;
  long long ms_corrected = 0;
  long long ms_detected = 0;
  long long ms_undetected = 0;
  long long ml_correct = 0;
  long long ml_ties = 0;
  // over patterns where ML is unique: min-sum converged to that codeword
  long long ms_matches_unique_ml = 0;
  // over tie patterns: min-sum reached some optimal codeword or reported
  // failure instead of converging elsewhere
  long long ms_ok_on_ml_ties = 0;
  double avg_bit_errors = 0;
};

// All-zero word over BSC error patterns of each weight up to max_weight,
// decoded with min-sum on +/-1 LLRs and compared against ML.
std::vector<SweepRow> exhaustive_bsc_sweep(const TannerGraph& g,
                                           const Codebook& cb, int max_weight,
                                           int max_iters = 100);

enum class McChannel { Bsc, Bec, Biawgn };
enum class DecoderKind { MinSum, SumProduct };

struct McConfig {
  McChannel channel = McChannel::Bsc;
  double param = 0;   // flip probability, erasure probability, or Eb/N0 in dB
  double rate = 0.5;  // code rate, used by the AWGN noise scale
  long long trials = 0;
  std::uint64_t seed = 0;
  int threads = 1;
  DecoderKind decoder = DecoderKind::MinSum;
  int max_iters = 100;
};

struct McResult {
  long long trials = 0;
  long long correct = 0;
  long long detected = 0;
  long long undetected = 0;
  long long bit_errors = 0;
  double ber = 0;
  double fer = 0;
};

// All-zero codeword transmission. Per-trial generators are derived from
// (seed, trial index), so results do not depend on the thread count.
McResult monte_carlo(const TannerGraph& g, const McConfig& cfg);

}  // namespace pcw
