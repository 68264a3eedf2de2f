#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcw/codebook.hpp"
#include "pcw/rational.hpp"
#include "pcw/tanner_graph.hpp"

namespace pcw {

// Variable subsets are bitmasks (bit i = variable i), n <= 62. A stopping set
// is a nonempty subset leaving no check with exactly one member.
bool is_stopping_set(const TannerGraph& g, std::uint64_t members);

// All nonempty stopping sets; by default subsets containing a degree-0
// variable are excluded (any such variable joins every stopping set freely).
// Requires n <= 22.
std::vector<std::uint64_t> enumerate_stopping_sets(
    const TannerGraph& g, bool include_degree_zero = false);

// Stopping sets with no proper stopping subset, optionally capped by size.
std::vector<std::uint64_t> enumerate_minimal_stopping_sets(
    const TannerGraph& g, int max_size = -1, bool include_degree_zero = false);

// Size of the smallest nonempty stopping set; 0 when none exists.
int s_min(const TannerGraph& g);

// Partition of a stopping set: members are joined whenever a check has
// exactly two neighbors inside the set. The set has the splitting property
// when two or more classes remain.
std::vector<std::vector<int>> theta_classes(const TannerGraph& g,
                                            std::uint64_t members);
bool has_property_theta(const TannerGraph& g, std::uint64_t members);

// Variables v lying in some non-minimal stopping set none of whose proper
// stopping subsets contains v.
std::vector<int> find_problematic_nodes(const TannerGraph& g);

enum class StoppingCase {
  NoCodewordInside,       // no nonzero codeword support fits in the set
  MinimalCodeword,        // minimal; the set itself is the unique codeword support
  NonMinimalProblematic,  // non-minimal with a node in no proper stopping subset
  NonMinimalCovered,      // non-minimal, every node in a minimal stopping subset
};

struct StoppingClassification {
  StoppingCase label;
  bool theta = false;          // splitting property of the set itself
  bool exists_bad_nc = false;  // a bad non-codeword pseudocodeword with this support
  bool decided = true;         // false when no construction or LP settled existence
  std::optional<std::vector<long long>> witness_p;
  std::optional<std::vector<Rat>> witness_w;  // verified cost-function witness
  std::string conclusion;
};

// Case analysis of a stopping set with constructed, re-verified witnesses.
StoppingClassification classify_stopping_set(const TannerGraph& g,
                                             const Codebook& cb,
                                             std::uint64_t members);

// For a minimal stopping set without the splitting property, the largest
// component over pseudocodewords supported exactly on it: 1 when the set is a
// codeword support, otherwise 2. Violating the precondition is an error.
int t_s_bound(const TannerGraph& g, const Codebook& cb, std::uint64_t members);

}  // namespace pcw
