#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pcw/tanner_graph.hpp"

namespace pcw {

// Degree-L cover of a base graph. Variable copy (i,a) is flat node i*L+a,
// check copy (j,b) is flat check j*L+b. perms[j][k][a] = b wires copy a of
// the k-th neighbor of check j to check copy b; each perms[j][k] is a
// permutation of 0..L-1.
struct LiftGraph {
  TannerGraph base;
  int degree = 0;
  std::vector<std::vector<std::vector<int>>> perms;
  TannerGraph flat;
};

LiftGraph build_lift(const TannerGraph& g, int degree,
                     const std::vector<std::vector<std::vector<int>>>& perms);

LiftGraph random_lift(const TannerGraph& g, int degree, std::uint64_t seed);

// Column sums of a lift codeword, one per base variable. Rejects vectors
// that fail parity in the cover.
std::vector<long long> reduce_lift_codeword(const LiftGraph& lift,
                                            const std::vector<int>& bits);

// Smallest cover degree admitting a realization of p: the largest over
// checks of the fewest even-weight 0/1 rows with column sums p restricted
// to the check (exact, via the Gale-Ryser condition; per-check splits at a
// common degree always wire together).
int min_lift_degree(const TannerGraph& g, const std::vector<long long>& p);

// Coarse upper bound: ceil(max_i p_i * max check degree / 2).
long long lift_degree_bound(const TannerGraph& g,
                            const std::vector<long long>& p);

struct RealizeResult {
  bool found = false;
  std::string reason;
  int degree = 0;
  LiftGraph lift;
  std::vector<int> bits;  // codeword in lift.flat with column sums p
};

// Builds a cover together with a codeword whose column sums equal p.
// Requires the cone inequalities; a vector with an odd neighborhood sum at
// some check is reported unrealizable rather than rejected. degree = 0
// picks the smallest feasible cover.
RealizeResult realize_pseudocodeword(const TannerGraph& g,
                                     const std::vector<long long>& p,
                                     int degree = 0);

}  // namespace pcw
