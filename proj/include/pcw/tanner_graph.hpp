#pragma once

#include <string>
#include <vector>

namespace pcw {

// Bipartite incidence structure between variable nodes 0..n-1 and check nodes
// 0..m-1. Each check's neighbor list is sorted and duplicate-free; variable
// adjacency is derived from it. Variables of degree 0 are legal.
struct TannerGraph {
  int n = 0;
  int m = 0;
  std::vector<std::vector<int>> chk;  // chk[j]: variables of check j, ascending
  std::vector<std::vector<int>> var;  // var[i]: checks containing variable i

  int check_degree_max() const;
  int check_degree_min() const;  // 0 when m == 0
  int var_degree_max() const;
  int var_degree_min() const;
};

// Validates and normalizes a raw check list: sorts neighbors, rejects
// out-of-range or repeated indices within a check, and drops rows that
// duplicate an earlier row exactly (one warning per drop).
TannerGraph graph_from_checks(int n, std::vector<std::vector<int>> checks,
                              std::vector<std::string>* warnings = nullptr);

// alist layout: "n m", "max_var_degree max_check_degree", n variable degrees,
// m check degrees, then n per-variable check lists and m per-check variable
// lists, all 1-indexed. Zero padding is accepted on input and emitted on
// output. Truncated or inconsistent data raises InputError.
TannerGraph parse_alist(const std::string& text,
                        std::vector<std::string>* warnings = nullptr);
std::string emit_alist(const TannerGraph& g);

// dense layout: "m n" then m rows of n space-separated 0/1 entries.
TannerGraph parse_dense(const std::string& text,
                        std::vector<std::string>* warnings = nullptr);
std::string emit_dense(const TannerGraph& g);

TannerGraph read_graph_file(const std::string& path, const std::string& format,
                            std::vector<std::string>* warnings = nullptr);

// Length of the shortest cycle in the bipartite graph; always even; 0 when
// the graph is acyclic.
int girth(const TannerGraph& g);

inline bool is_forest(const TannerGraph& g) { return girth(g) == 0; }

bool is_connected(const TannerGraph& g);  // over all variable and check nodes

bool graphs_equal(const TannerGraph& a, const TannerGraph& b);

}  // namespace pcw
