#include "pcw/fixtures.hpp"

#include "pcw/codebook.hpp"
#include "pcw/errors.hpp"

namespace pcw {

namespace {

TannerGraph hamming7_a() {
  // Three independent parity checks of the [7,4,3] Hamming code.
  return graph_from_checks(7, {{0, 1, 2, 4}, {1, 2, 3, 5}, {0, 1, 3, 6}});
}

TannerGraph hamming15_a() {
  // [15,11,3] Hamming: column i+1 written in binary across four rows.
  std::vector<std::vector<int>> checks(4);
  for (int i = 0; i < 15; ++i)
    for (int b = 0; b < 4; ++b)
      if ((i + 1) >> b & 1) checks[b].push_back(i);
  return graph_from_checks(15, checks);
}

TannerGraph two_cycle_code() {
  // Cycle-code style graph on 14 variables whose two generator codewords
  // overlap on {v3,v4,v10,v11}; v7 sits on three degree-2 checks of one
  // generator, which makes it the unique problematic variable.
  std::vector<std::vector<int>> checks1 = {
      {1, 5},  {5, 6},  {6, 12}, {12, 13}, {1, 5, 6, 7}, {3, 4},
      {4, 10}, {10, 11}, {2, 8}, {8, 9},   {9, 14},      {1, 2, 3}};
  std::vector<std::vector<int>> checks;
  for (auto& c : checks1) {
    std::vector<int> z;
    for (int i : c) z.push_back(i - 1);
    checks.push_back(z);
  }
  return graph_from_checks(14, checks);
}

TannerGraph fano() {
  // Point-line incidence of the projective plane of order 2: points are the
  // nonzero vectors of GF(2)^3, lines are the triples summing to zero.
  std::vector<std::vector<int>> checks;
  for (int a = 1; a <= 7; ++a)
    for (int b = a + 1; b <= 7; ++b) {
      int c = a ^ b;
      if (c > b) checks.push_back({a - 1, b - 1, c - 1});
    }
  return graph_from_checks(7, checks);
}

}  // namespace

TannerGraph fixture(const std::string& name) {
  if (name == "hamming7_a") return hamming7_a();
  if (name == "hamming7_b") return add_redundant_checks(hamming7_a(), 3);
  if (name == "hamming7_c")  // A plus the sum of all three rows
    return graph_from_checks(7, {{0, 1, 2, 4}, {1, 2, 3, 5}, {0, 1, 3, 6},
                                 {1, 4, 5, 6}});
  if (name == "hamming15_a") return hamming15_a();
  if (name == "hamming15_b") return add_redundant_checks(hamming15_a(), 2);
  if (name == "rep4")
    return graph_from_checks(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  if (name == "rep4_aug")
    return graph_from_checks(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 1, 2, 3}});
  if (name == "triangle3")
    return graph_from_checks(3, {{0, 1}, {1, 2}, {0, 2}});
  if (name == "tri_spc")
    return graph_from_checks(3, {{0, 1}, {1, 2}, {0, 2}, {0, 1, 2}});
  if (name == "ex3_m3")
    return graph_from_checks(4, {{0, 1, 2, 3}, {1, 2}, {2, 3}, {1, 3}});
  if (name == "theta6")
    return graph_from_checks(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3, 4, 5},
                                 {0, 1, 2, 3}});
  if (name == "fano") return fano();
  if (name == "two_cycle") return two_cycle_code();
  if (name == "path3")
    return graph_from_checks(3, {{0, 1}, {1, 2}});
  throw InputError("unknown fixture: " + name);
}

std::vector<std::string> fixture_names() {
  return {"hamming7_a", "hamming7_b", "hamming7_c", "hamming15_a",
          "hamming15_b", "rep4",      "rep4_aug",   "triangle3",
          "tri_spc",    "ex3_m3",     "theta6",     "fano",
          "two_cycle",  "path3"};
}

}  // namespace pcw
