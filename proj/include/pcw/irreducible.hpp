#pragma once

#include <cstdint>
#include <vector>

#include "pcw/tanner_graph.hpp"

namespace pcw {

struct IrreducibleSet {
  std::vector<std::vector<long long>> elems;  // lexicographically sorted
  std::vector<std::uint8_t> ray_flag;         // elems[k] spans an extreme ray
  int max_component = 0;                      // the graph's t value
  int cap_used = 0;                           // enumeration stabilized below this
};

// Every nonzero lift-realizable vector that is not the sum of two nonzero
// lift-realizable vectors. Enumerates the box {0..cap}^n with a growing cap
// until no irreducible element touches the cap; greedy subtraction of earlier
// irreducibles decides reducibility exactly, because summands of a sum are
// componentwise below it. Requires n <= 20.
IrreducibleSet enumerate_irreducible(const TannerGraph& g, int initial_cap = 4,
                                     int max_cap = 12);

// Largest component over the irreducible set.
int t_value(const TannerGraph& g);

// Exact split search for a single vector: reducible iff some componentwise
// piece and its complement are both nonzero and lift-realizable. The number
// of candidate pieces is the product of (p_i + 1); beyond max_splits a
// LimitError is raised.
bool is_irreducible(const TannerGraph& g, const std::vector<long long>& p,
                    unsigned long long max_splits = 200'000'000ull);

// p spans an extreme ray iff its tight constraints (edge inequalities met with
// equality plus zero coordinates) have rank n - 1.
bool is_extreme_ray_point(const TannerGraph& g, const std::vector<long long>& p);

// Smallest lift-realizable integer point on each extreme ray: the primitive
// generator, doubled when some check neighborhood sums odd. Enumerates
// (n-1)-subsets of the constraint rows; max_subsets guards the blowup.
std::vector<std::vector<long long>> enumerate_extreme_rays(
    const TannerGraph& g, unsigned long long max_subsets = 5'000'000ull);

}  // namespace pcw
