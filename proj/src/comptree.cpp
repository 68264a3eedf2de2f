#include "pcw/comptree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "pcw/cone.hpp"
#include "pcw/errors.hpp"

namespace pcw {

ComputationTree build_tree(const TannerGraph& g, int root, int depth,
                           int node_cap) {
  if (root < 0 || root >= g.n) throw InputError("root variable out of range");
  if (depth < 1) throw InputError("depth must be >= 1");
  ComputationTree t;
  t.base = g;
  t.root = root;
  t.depth = depth;
  t.nodes.push_back({root, false, -1, {}, 1});
  // nodes are appended in BFS order, so indices only grow ahead of the scan
  for (size_t cur = 0; cur < t.nodes.size(); ++cur) {
    if ((int)t.nodes.size() > node_cap)
      throw LimitError("computation tree exceeds the node cap");
    if (!t.nodes[cur].is_check) {
      int i = t.nodes[cur].base_id;
      int layer = t.nodes[cur].layer;
      if (layer == depth) continue;
      int from = t.nodes[cur].parent < 0
                     ? -1
                     : t.nodes[t.nodes[cur].parent].base_id;
      for (int j : g.var[i]) {
        if (j == from) continue;
        t.nodes.push_back({j, true, (int)cur, {}, layer});
        t.nodes[cur].kids.push_back((int)t.nodes.size() - 1);
      }
    } else {
      int j = t.nodes[cur].base_id;
      int layer = t.nodes[cur].layer;
      int from = t.nodes[t.nodes[cur].parent].base_id;
      for (int i : g.chk[j]) {
        if (i == from) continue;
        t.nodes.push_back({i, false, (int)cur, {}, layer + 1});
        t.nodes[cur].kids.push_back((int)t.nodes.size() - 1);
      }
    }
  }
  for (size_t k = 0; k < t.nodes.size(); ++k) {
    if (t.nodes[k].is_check)
      ++t.chk_copies;
    else {
      t.var_nodes.push_back((int)k);
      ++t.var_copies;
    }
  }
  return t;
}

std::vector<std::vector<int>> enumerate_valid_assignments(
    const ComputationTree& t, long long cap) {
  // var copy index per tree node
  std::vector<int> vid(t.nodes.size(), -1);
  for (int k = 0; k < t.var_copies; ++k) vid[t.var_nodes[k]] = k;
  // per check copy: adjacent var copies
  std::vector<std::vector<int>> adj;
  std::vector<int> chk_of;  // parallel to adj, tree index
  for (size_t k = 0; k < t.nodes.size(); ++k) {
    if (!t.nodes[k].is_check) continue;
    std::vector<int> a{vid[t.nodes[k].parent]};
    for (int kid : t.nodes[k].kids) a.push_back(vid[kid]);
    adj.push_back(std::move(a));
    chk_of.push_back((int)k);
  }
  // checks watching each var copy, with per-check countdown + parity
  std::vector<std::vector<int>> watch(t.var_copies);
  std::vector<int> pending(adj.size());
  std::vector<int> parity(adj.size(), 0);
  for (size_t c = 0; c < adj.size(); ++c) {
    pending[c] = (int)adj[c].size();
    for (int v : adj[c]) watch[v].push_back((int)c);
  }
  std::vector<std::vector<int>> out;
  std::vector<int> bits(t.var_copies, 0);
  long long steps = 0;
  // iterative DFS over variable copies in creation order
  std::vector<int> choice(t.var_copies + 1, 0);
  int v = 0;
  auto place = [&](int vv, int b) {
    bits[vv] = b;
    bool ok = true;
    for (int c : watch[vv]) {
      parity[c] ^= b;
      if (--pending[c] == 0 && parity[c]) ok = false;
    }
    return ok;
  };
  auto unplace = [&](int vv) {
    for (int c : watch[vv]) {
      parity[c] ^= bits[vv];
      ++pending[c];
    }
  };
  while (true) {
    if (++steps > 50'000'000)
      throw LimitError("assignment search exceeds the step budget");
    if (v == t.var_copies) {
      out.push_back(bits);
      if ((long long)out.size() > cap)
        throw LimitError("assignment count exceeds the cap");
      --v;
      unplace(v);
      ++choice[v];
    } else if (choice[v] > 1) {
      choice[v] = 0;
      if (v == 0) break;
      --v;
      unplace(v);
      ++choice[v];
    } else {
      bool ok = place(v, choice[v]);
      if (ok) {
        ++v;
      } else {
        unplace(v);
        ++choice[v];
      }
    }
  }
  return out;
}

ConsistencyReport consistency_check(const ComputationTree& t,
                                    const std::vector<int>& bits) {
  if ((int)bits.size() != t.var_copies)
    throw InputError("assignment length does not match the tree");
  for (int b : bits)
    if (b != 0 && b != 1) throw InputError("assignment must be 0/1");
  std::vector<int> vid(t.nodes.size(), -1);
  for (int k = 0; k < t.var_copies; ++k) vid[t.var_nodes[k]] = k;
  const TannerGraph& g = t.base;
  // sums[j][k], counts[j]: copy totals for position k of check j
  std::vector<std::vector<long long>> sums(g.m);
  std::vector<long long> counts(g.m, 0);
  for (int j = 0; j < g.m; ++j) sums[j].assign(g.chk[j].size(), 0);
  for (size_t c = 0; c < t.nodes.size(); ++c) {
    if (!t.nodes[c].is_check) continue;
    int j = t.nodes[c].base_id;
    int from = t.nodes[t.nodes[c].parent].base_id;
    size_t kid_at = 0;
    for (size_t k = 0; k < g.chk[j].size(); ++k) {
      int node = g.chk[j][k] == from ? t.nodes[c].parent
                                     : t.nodes[c].kids[kid_at++];
      sums[j][k] += bits[vid[node]];
    }
    ++counts[j];
  }
  ConsistencyReport rep;
  rep.consistent = true;
  rep.averages.assign(g.n, Rat(0));
  std::vector<char> seen(g.n, 0);
  for (int j = 0; j < g.m && rep.consistent; ++j) {
    if (!counts[j]) continue;
    for (size_t k = 0; k < g.chk[j].size(); ++k) {
      int i = g.chk[j][k];
      Rat a = Rat(sums[j][k]) / counts[j];
      if (!seen[i]) {
        seen[i] = 1;
        rep.averages[i] = a;
      } else if (rep.averages[i] != a) {
        rep.consistent = false;
        break;
      }
    }
  }
  if (!rep.consistent) {
    rep.averages.clear();
    return rep;
  }
  BigInt lcm = 1;
  for (auto& a : rep.averages)
    lcm = boost::multiprecision::lcm(lcm, denominator(a));
  rep.scaled.resize(g.n);
  for (int i = 0; i < g.n; ++i) {
    BigInt v = numerator(rep.averages[i]) * (lcm / denominator(rep.averages[i]));
    rep.scaled[i] = v.convert_to<long long>();
  }
  rep.cone_member = check_cone_inequalities(g, rep.scaled);
  return rep;
}

StructureFlags structure_flags(const TannerGraph& g) {
  StructureFlags f;
  f.forest = is_forest(g);
  f.cycle_code = true;
  for (auto& row : g.chk)
    if (row.size() != 2) f.cycle_code = false;
  std::vector<int> uf(g.n);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (auto& row : g.chk)
    if (row.size() == 2) uf[find(row[0])] = find(row[1]);
  int classes = 0;
  for (int i = 0; i < g.n; ++i)
    if (find(i) == i) ++classes;
  f.spanning_pair_class = classes == 1;
  return f;
}

std::string to_dot(const ComputationTree& t) {
  std::ostringstream os;
  os << "digraph comptree {\n  rankdir=TB;\n";
  for (size_t k = 0; k < t.nodes.size(); ++k) {
    if (t.nodes[k].is_check)
      os << "  n" << k << " [shape=box,label=\"c" << t.nodes[k].base_id
         << "\"];\n";
    else
      os << "  n" << k << " [shape=ellipse,label=\"v" << t.nodes[k].base_id
         << "\"];\n";
  }
  for (size_t k = 0; k < t.nodes.size(); ++k)
    if (t.nodes[k].parent >= 0) os << "  n" << t.nodes[k].parent << " -> n" << k << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace pcw
