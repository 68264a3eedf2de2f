#pragma once

#include <map>
#include <vector>

#include "pcw/codebook.hpp"
#include "pcw/irreducible.hpp"
#include "pcw/rational.hpp"
#include "pcw/tanner_graph.hpp"

namespace pcw {

enum class Channel { BEC, BSC, AWGN };

struct WeightReport {
  long long bec = 0;   // support size
  long long bsc = 0;   // 2e or 2e-1 from the median split of sorted entries
  Rat awgn;            // (sum)^2 / sum of squares
  Rat max_fraction;    // sum / max entry; lower-bounds the channel weights
};

// Weights of a nonzero nonnegative vector. The zero vector is rejected.
WeightReport weight_report(const std::vector<long long>& p);
Rat weight(const std::vector<long long>& p, Channel ch);

// Smallest channel weight over the irreducible set; every pseudocodeword
// weight is a sum of irreducible ones, so this is the graph's minimum weight.
Rat w_min(const TannerGraph& g, Channel ch);

// Minimum-weight lower bound from the girth-g breadth of a (d,*)-regular
// graph; requires d >= 2 and even g >= 6.
long long tree_bound(int d, int g);

// Same bound with free parameter x >= 1 replacing the unit contribution of
// each level (x = epsilon*k - 1 in the usual parametrization).
long long tree_bound_generalized(int d, int g, long long x);

// (min left degree - 1)^(ceil(g/4) - 1); requires min left degree >= 3 and
// girth > 4.
long long feldman_bound(int deg_left_min, int g);

// For a pseudocodeword with max component t and support size s:
// AWGN: 2t^2 s / ((1+t^2)(t-1) + 2t), collapsing to s at t = 1; BSC: s / t.
struct SupportBounds {
  Rat awgn;
  Rat bsc;
};
SupportBounds t_support_bounds(long long t, long long support_size);

// Histogram population: weights of all irreducible non-codeword elements
// together with the 1x/2x/3x multiples of every nonzero codeword, in bins of
// width 1/2 keyed by their lower edge.
std::map<Rat, long long> weight_histogram(const TannerGraph& g, Channel ch);
std::map<Rat, long long> weight_histogram(const TannerGraph& g,
                                          const Codebook& cb,
                                          const IrreducibleSet& set,
                                          Channel ch);

}  // namespace pcw
