#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "pcw/cone.hpp"
#include "pcw/errors.hpp"
#include "pcw/fixtures.hpp"
#include "pcw/irreducible.hpp"
#include "oracle.hpp"

using namespace pcw;
using VecLL = std::vector<long long>;

TEST_CASE("membership on the long two-cycle graph") {
  TannerGraph g = fixture("two_cycle");
  VecLL p{1, 0, 1, 1, 1, 1, 3, 0, 0, 1, 1, 1, 1, 0};
  CHECK(check_cone_inequalities(g, p));
  CHECK(check_even_parity(g, p));
  CHECK(is_lift_realizable(g, p));
  CHECK(oracle::lift_realizable(g, p));

  // Bumping the large component breaks an edge inequality.
  VecLL q = p;
  q[6] = 5;
  CHECK(!check_cone_inequalities(g, q));
  CHECK(!is_lift_realizable(g, q));
  CHECK(!oracle::lift_realizable(g, q));

  // Shrinking the large component keeps every inequality (its only check
  // sees (1,1,1,2), and 4 <= 5) but leaves that neighborhood sum odd.
  VecLL r = p;
  r[6] = 2;
  CHECK(check_cone_inequalities(g, r));
  CHECK(!check_even_parity(g, r));
  CHECK(!is_lift_realizable(g, r));
  CHECK(!oracle::lift_realizable(g, r));
}

TEST_CASE("parity without inequalities and vice versa") {
  TannerGraph g = fixture("tri_spc");
  CHECK(!check_even_parity(g, VecLL{1, 1, 1}));     // degree-2 checks sum odd
  CHECK(is_lift_realizable(g, VecLL{2, 2, 2}));
  CHECK(!is_lift_realizable(g, VecLL{2, 2, 0}));    // 2 <= 0 fails at a pair check
  CHECK(is_lift_realizable(g, VecLL{0, 0, 0}));
}

TEST_CASE("library realizability matches the oracle on a box") {
  for (const char* name : {"tri_spc", "triangle3", "rep4", "rep4_aug", "ex3_m3"}) {
    TannerGraph g = fixture(name);
    CAPTURE(name);
    VecLL p(g.n, 0);
    while (true) {
      CHECK(is_lift_realizable(g, p) == oracle::lift_realizable(g, p));
      int i = 0;
      while (i < g.n && p[i] == 3) p[i++] = 0;
      if (i == g.n) break;
      ++p[i];
    }
  }
}

TEST_CASE("inequalities are scale invariant in the rational overload") {
  TannerGraph g = fixture("two_cycle");
  VecLL p{1, 0, 1, 1, 1, 1, 3, 0, 0, 1, 1, 1, 1, 0};
  std::vector<Rat> half, third;
  for (long long v : p) {
    half.push_back(Rat(v) / 2);
    third.push_back(Rat(v) / 3);
  }
  CHECK(check_cone_inequalities(g, half));
  CHECK(check_cone_inequalities(g, third));
}

TEST_CASE("vector length mismatch is rejected") {
  TannerGraph g = fixture("rep4");
  CHECK_THROWS_AS(is_lift_realizable(g, VecLL{1, 1, 1}), InputError);
}

TEST_CASE("mod-2 reduction of realizable vectors is a codeword") {
  TannerGraph g = fixture("hamming7_a");
  Codebook cb = enumerate_codewords(g);
  IrreducibleSet set = enumerate_irreducible(g);
  for (const auto& p : set.elems) {
    auto bits = mod2_reduce(g, p);
    std::uint64_t w = bits_to_word(bits);
    CHECK(std::binary_search(cb.words.begin(), cb.words.end(), w));
    std::vector<long long> as_ll(bits.begin(), bits.end());
    CHECK(oracle::mod2_is_codeword(g, as_ll));
  }
  CHECK_THROWS_AS(mod2_reduce(g, VecLL{1, 0, 0, 0, 0, 0, 0}), InputError);
}

TEST_CASE("greedy codeword peeling reconstructs the input") {
  TannerGraph g = fixture("hamming7_a");
  Codebook cb = enumerate_codewords(g);
  IrreducibleSet set = enumerate_irreducible(g);
  for (DecompOrder ord : {DecompOrder::WeightDesc, DecompOrder::WeightAsc}) {
    for (const auto& p : set.elems) {
      Decomposition d = decompose(g, cb, p, ord);
      CHECK(d.residual_all_even);
      VecLL sum = d.residual;
      for (std::uint64_t w : d.codewords) {
        auto v = word_to_vec(w, g.n);
        for (int i = 0; i < g.n; ++i) sum[i] += v[i];
      }
      CHECK(sum == p);
      // No nonzero codeword support fits inside the residual support.
      std::uint64_t rsup = support_mask(d.residual);
      for (std::uint64_t w : cb.words)
        if (w != 0) CHECK((w & ~rsup) != 0);
      bool zero = std::all_of(d.residual.begin(), d.residual.end(),
                              [](long long v) { return v == 0; });
      CHECK(d.residual_zero == zero);
      for (long long v : d.residual) CHECK(v % 2 == 0);
    }
  }
  CHECK_THROWS_AS(decompose(g, cb, VecLL{1, 0, 0, 0, 0, 0, 0}), InputError);
}

TEST_CASE("descending order prefers heavy codewords") {
  // (3,1,1,1) on the three-check four-variable graph peels the full-support
  // codeword first in descending order, then nothing else fits.
  TannerGraph g = fixture("ex3_m3");
  Codebook cb = enumerate_codewords(g);
  VecLL p{3, 1, 1, 1};
  Decomposition d = decompose(g, cb, p, DecompOrder::WeightDesc);
  REQUIRE(!d.codewords.empty());
  CHECK(word_weight(d.codewords.front()) == 4);
  CHECK(d.residual == VecLL{2, 0, 0, 0});
  CHECK(!d.residual_zero);
  CHECK(d.residual_all_even);
}

TEST_CASE("sums of realizable vectors stay realizable") {
  TannerGraph g = fixture("theta6");
  IrreducibleSet set = enumerate_irreducible(g);
  REQUIRE(set.elems.size() == 3);
  for (const auto& a : set.elems)
    for (const auto& b : set.elems) {
      VecLL s(g.n);
      for (int i = 0; i < g.n; ++i) s[i] = a[i] + b[i];
      CHECK(is_lift_realizable(g, s));
      CHECK(oracle::lift_realizable(g, s));
    }
}
