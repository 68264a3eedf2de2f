#pragma once

#include <string>
#include <vector>

#include "pcw/rational.hpp"
#include "pcw/tanner_graph.hpp"

namespace pcw {

struct TreeNode {
  int base_id = 0;  // index into the base graph (variable or check side)
  bool is_check = false;
  int parent = -1;  // tree node index
  std::vector<int> kids;
  int layer = 0;  // variable layers count from 1 at the root
};

// Unrolled message-passing tree: a node expands into copies of all base
// neighbors except the one it came from. depth = number of variable layers
// including the root, so depth d places d-1 check layers.
struct ComputationTree {
  TannerGraph base;
  int root = 0;
  int depth = 0;
  std::vector<TreeNode> nodes;
  std::vector<int> var_nodes;  // tree indices of variable copies, creation order
  int var_copies = 0;
  int chk_copies = 0;
};

ComputationTree build_tree(const TannerGraph& g, int root, int depth,
                           int node_cap = 100000);

// All 0/1 labelings of the variable copies (indexed as in var_nodes) that
// satisfy every check copy. Throws past the cap.
std::vector<std::vector<int>> enumerate_valid_assignments(
    const ComputationTree& t, long long cap = 1 << 20);

struct ConsistencyReport {
  bool consistent = false;
  // Per base variable: copy-averaged value seen by its check copies, when
  // all checks agree. Variables untouched by any check copy read 0.
  std::vector<Rat> averages;
  std::vector<long long> scaled;  // integer multiple of averages
  bool cone_member = false;       // scaled passes the neighborhood inequalities
};

ConsistencyReport consistency_check(const ComputationTree& t,
                                    const std::vector<int>& bits);

struct StructureFlags {
  bool forest = false;
  bool cycle_code = false;  // every check has degree 2
  // Repeatedly joining variables that share a degree-2 check links all of
  // them into a single class.
  bool spanning_pair_class = false;
};

StructureFlags structure_flags(const TannerGraph& g);

std::string to_dot(const ComputationTree& t);

}  // namespace pcw
