#pragma once

#include <cstdint>
#include <vector>

#include "pcw/codebook.hpp"
#include "pcw/rational.hpp"
#include "pcw/tanner_graph.hpp"

namespace pcw {

// Edge inequalities: at every check, each neighbor's value is at most the sum
// of the check's other neighbors. Entries must be nonnegative.
bool check_cone_inequalities(const TannerGraph& g, const std::vector<long long>& p);
bool check_cone_inequalities(const TannerGraph& g, const std::vector<Rat>& p);

// Every check neighborhood sums to an even number.
bool check_even_parity(const TannerGraph& g, const std::vector<long long>& p);

// A nonnegative integer vector arises as the copy-count reduction of some
// lift codeword exactly when it passes both the inequalities and the parity
// condition; each check's neighborhood then splits into even-weight rows that
// independent edge permutations assemble into a lift.
bool is_lift_realizable(const TannerGraph& g, const std::vector<long long>& p);

// Componentwise mod-2 reduction. Requires lift-realizability; the result is
// then guaranteed (and asserted) to be a codeword.
std::vector<std::uint8_t> mod2_reduce(const TannerGraph& g,
                                      const std::vector<long long>& p);

enum class DecompOrder { WeightDesc, WeightAsc };

struct Decomposition {
  std::vector<std::uint64_t> codewords;  // subtracted in order, with multiplicity
  std::vector<long long> residual;
  bool residual_zero = false;
  bool residual_all_even = false;
};

// Greedily subtracts codewords whose support lies inside the residual's
// support until none fits, preferring large (WeightDesc) or small (WeightAsc)
// Hamming weight, ties to the lexicographically smaller mask. Requires p
// lift-realizable; the terminal residual then has all-even components and its
// support contains no nonzero codeword's support.
Decomposition decompose(const TannerGraph& g, const Codebook& cb,
                        std::vector<long long> p,
                        DecompOrder order = DecompOrder::WeightDesc);

}  // namespace pcw
