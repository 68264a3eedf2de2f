#pragma once

#include <cstdint>
#include <vector>

#include "pcw/tanner_graph.hpp"

namespace pcw {

// Codewords are bitmasks with bit i (1ull << i) standing for variable i.
// All codebook operations require n <= 62.
struct Codebook {
  int n = 0;
  std::vector<std::uint64_t> words;  // ascending; always contains 0
  int d_min = 0;                     // min weight of a nonzero word; 0 if code == {0}
  int dimension = 0;                 // n - rank(H)
};

int gf2_rank(std::vector<std::uint64_t> rows);

bool is_codeword(const TannerGraph& g, std::uint64_t word);

// Kernel of the check matrix via GF(2) elimination. Refuses when the code has
// more than 2^22 words.
Codebook enumerate_codewords(const TannerGraph& g);

// Appends the XOR of every set of 2..order distinct original rows, skipping
// sums equal to an existing or earlier-added row. order == 1 returns the graph
// unchanged. The dependent (all-zero) sums are skipped too. max_rows caps the
// result size.
TannerGraph add_redundant_checks(const TannerGraph& g, int order,
                                 int max_rows = 4096);

std::uint64_t support_mask(const std::vector<long long>& p);
int word_weight(std::uint64_t word);
std::vector<long long> word_to_vec(std::uint64_t word, int n);
std::uint64_t bits_to_word(const std::vector<std::uint8_t>& bits);

}  // namespace pcw
