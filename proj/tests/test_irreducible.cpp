#include "doctest.h"

#include <algorithm>
#include <vector>

#include "pcw/cone.hpp"
#include "pcw/errors.hpp"
#include "pcw/fixtures.hpp"
#include "pcw/irreducible.hpp"
#include "oracle.hpp"

using namespace pcw;
using VecLL = std::vector<long long>;
using SetLL = std::vector<VecLL>;

TEST_CASE("irreducible sets of the small fixtures, frozen") {
  CHECK(enumerate_irreducible(fixture("rep4")).elems == SetLL{{1, 1, 1, 1}});
  CHECK(enumerate_irreducible(fixture("rep4_aug")).elems == SetLL{{1, 1, 1, 1}});
  CHECK(enumerate_irreducible(fixture("triangle3")).elems == SetLL{{1, 1, 1}});
  CHECK(enumerate_irreducible(fixture("path3")).elems == SetLL{{1, 1, 1}});
  CHECK(enumerate_irreducible(fixture("tri_spc")).elems == SetLL{{2, 2, 2}});
  CHECK(enumerate_irreducible(fixture("ex3_m3")).elems ==
        SetLL{{0, 2, 2, 2}, {1, 1, 1, 1}, {3, 1, 1, 1}});
  CHECK(enumerate_irreducible(fixture("theta6")).elems ==
        SetLL{{1, 1, 1, 1, 1, 1}, {1, 1, 1, 3, 3, 3}, {3, 3, 3, 1, 1, 1}});
}

TEST_CASE("t values") {
  CHECK(t_value(fixture("rep4")) == 1);
  CHECK(t_value(fixture("tri_spc")) == 2);
  CHECK(t_value(fixture("ex3_m3")) == 3);
  CHECK(t_value(fixture("theta6")) == 3);
  CHECK(t_value(fixture("hamming7_a")) == 3);
  CHECK(t_value(fixture("hamming7_b")) == 1);
  CHECK(t_value(fixture("hamming7_c")) == 2);
  CHECK(t_value(fixture("fano")) == 2);
}

TEST_CASE("Hamming graph counts, frozen") {
  TannerGraph a = fixture("hamming7_a");
  Codebook cb = enumerate_codewords(a);
  IrreducibleSet sa = enumerate_irreducible(a);
  CHECK(sa.elems.size() == 45);
  int nc = 0;
  for (const auto& p : sa.elems) {
    bool codeword = true;
    for (long long v : p)
      if (v != 0 && v != 1) codeword = false;
    if (codeword &&
        !std::binary_search(cb.words.begin(), cb.words.end(), support_mask(p)))
      codeword = false;
    if (!codeword) ++nc;
  }
  CHECK(nc == 31);

  CHECK(enumerate_irreducible(fixture("hamming7_b")).elems.size() == 14);
  CHECK(enumerate_irreducible(fixture("hamming7_c")).elems.size() == 26);
  CHECK(enumerate_irreducible(fixture("fano")).elems.size() == 14);
}

TEST_CASE("redundant rows keep only 0/1 irreducible vectors") {
  // With all 7 dual rows present, every irreducible vector is a codeword.
  TannerGraph b = fixture("hamming7_b");
  Codebook cb = enumerate_codewords(b);
  IrreducibleSet sb = enumerate_irreducible(b);
  for (const auto& p : sb.elems) {
    for (long long v : p) CHECK((v == 0 || v == 1));
    CHECK(std::binary_search(cb.words.begin(), cb.words.end(), support_mask(p)));
  }
}

TEST_CASE("independent enumeration agrees") {
  for (const char* name : {"rep4", "rep4_aug", "triangle3", "path3", "tri_spc",
                           "ex3_m3", "theta6", "hamming7_a", "hamming7_b",
                           "hamming7_c", "fano"}) {
    CAPTURE(name);
    TannerGraph g = fixture(name);
    CHECK(enumerate_irreducible(g).elems == oracle::irreducible_set(g));
  }
}

TEST_CASE("enumeration is cap independent once stabilized") {
  TannerGraph a = fixture("hamming7_a");
  IrreducibleSet s4 = enumerate_irreducible(a, 4, 12);
  IrreducibleSet s6 = enumerate_irreducible(a, 6, 12);
  CHECK(s4.elems == s6.elems);
  CHECK(s4.max_component == 3);
  CHECK(s4.cap_used == 4);
}

TEST_CASE("component levels can skip: a set jumping from 2 to 4") {
  // The max components over this set are {2, 4} with nothing at 3, so any
  // scan that stops at a cap no irreducible element touches must open with
  // a box big enough to see past the empty level.
  TannerGraph g = graph_from_checks(
      4, {{0, 1}, {0, 1, 3}, {1, 3}, {1, 2, 3}, {0, 2, 3}});
  IrreducibleSet s = enumerate_irreducible(g, 4, 12);
  CHECK(s.elems == std::vector<VecLL>{{2, 2, 0, 2}, {2, 2, 2, 2}, {2, 2, 4, 2}});
  CHECK(s.max_component == 4);
  CHECK(s.cap_used == 5);
  CHECK(is_irreducible(g, VecLL{2, 2, 4, 2}));
  bool any3 = false;
  for (const auto& p : s.elems)
    any3 |= *std::max_element(p.begin(), p.end()) == 3;
  CHECK(!any3);
  CHECK(oracle::irreducible_set(g) == s.elems);
}

TEST_CASE("single vector split search") {
  TannerGraph rep = fixture("rep4");
  CHECK(is_irreducible(rep, VecLL{1, 1, 1, 1}));
  CHECK(!is_irreducible(rep, VecLL{2, 2, 2, 2}));
  CHECK(!is_irreducible(rep, VecLL{3, 3, 3, 3}));
  TannerGraph tri = fixture("tri_spc");
  CHECK(is_irreducible(tri, VecLL{2, 2, 2}));
  CHECK(!is_irreducible(tri, VecLL{4, 4, 4}));
  CHECK_THROWS_AS(is_irreducible(rep, VecLL{1, 0, 0, 0}), InputError);
  CHECK_THROWS_AS(is_irreducible(rep, VecLL{2, 2, 2, 2}, 3), LimitError);
}

TEST_CASE("extreme rays") {
  CHECK(enumerate_extreme_rays(fixture("rep4")) == SetLL{{1, 1, 1, 1}});
  CHECK(enumerate_extreme_rays(fixture("tri_spc")) == SetLL{{2, 2, 2}});
  CHECK(enumerate_extreme_rays(fixture("triangle3")) == SetLL{{1, 1, 1}});

  // Minimal ray points are irreducible and irreducible ray-flagged elements
  // are minimal ray points, so the two enumerations agree as sets.
  for (const char* name :
       {"rep4", "tri_spc", "triangle3", "ex3_m3", "theta6"}) {
    CAPTURE(name);
    TannerGraph g = fixture(name);
    IrreducibleSet s = enumerate_irreducible(g);
    SetLL flagged;
    for (std::size_t k = 0; k < s.elems.size(); ++k) {
      CHECK(bool(s.ray_flag[k]) == is_extreme_ray_point(g, s.elems[k]));
      if (s.ray_flag[k]) flagged.push_back(s.elems[k]);
    }
    SetLL rays = enumerate_extreme_rays(g);
    std::sort(rays.begin(), rays.end());
    std::sort(flagged.begin(), flagged.end());
    CHECK(rays == flagged);
  }
}

TEST_CASE("ray flags on the Hamming graph are consistent") {
  TannerGraph a = fixture("hamming7_a");
  IrreducibleSet s = enumerate_irreducible(a);
  for (std::size_t k = 0; k < s.elems.size(); ++k)
    CHECK(bool(s.ray_flag[k]) == is_extreme_ray_point(a, s.elems[k]));
}

TEST_CASE("size guard") {
  std::vector<std::vector<int>> checks;
  for (int i = 0; i + 1 < 21; ++i) checks.push_back({i, i + 1});
  TannerGraph g = graph_from_checks(21, checks);
  CHECK_THROWS_AS(enumerate_irreducible(g), LimitError);
}
