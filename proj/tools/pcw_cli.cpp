#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <boost/uuid/detail/sha1.hpp>

#include "CLI11.hpp"
#include "json.hpp"
#include "pcw/classify.hpp"
#include "pcw/codebook.hpp"
#include "pcw/comptree.hpp"
#include "pcw/cone.hpp"
#include "pcw/decode.hpp"
#include "pcw/errors.hpp"
#include "pcw/fixtures.hpp"
#include "pcw/irreducible.hpp"
#include "pcw/lifts.hpp"
#include "pcw/stopping.hpp"
#include "pcw/tanner_graph.hpp"
#include "pcw/weights.hpp"

using nlohmann::json;

namespace {

std::string git_blob_sha1(const std::string& content) {
  std::string blob = "blob " + std::to_string(content.size());
  blob.push_back('\0');
  blob += content;
  boost::uuids::detail::sha1 h;
  h.process_bytes(blob.data(), blob.size());
  unsigned int d[5];
  h.get_digest(d);
  char buf[41];
  std::snprintf(buf, sizeof buf, "%08x%08x%08x%08x%08x", d[0], d[1], d[2],
                d[3], d[4]);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw pcw::InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw pcw::InputError("cannot write " + path);
  out << text;
}

struct InputOpts {
  std::string path;
  std::string fixture;
  std::string format;  // empty = by extension, default alist
};

struct Input {
  pcw::TannerGraph g;
  std::string source;
  std::string format;
  std::string sha1;
  std::vector<std::string> warnings;
};

Input load_input(const InputOpts& o) {
  Input in;
  if (!o.fixture.empty() && !o.path.empty())
    throw pcw::InputError("--input and --fixture are mutually exclusive");
  if (o.fixture.empty() && o.path.empty())
    throw pcw::InputError("one of --input or --fixture is required");
  if (!o.fixture.empty()) {
    in.g = pcw::fixture(o.fixture);
    in.source = "fixture:" + o.fixture;
    in.format = "alist";
    in.sha1 = git_blob_sha1(pcw::emit_alist(in.g));
    return in;
  }
  std::string fmt = o.format;
  if (fmt.empty())
    fmt = o.path.size() >= 6 && o.path.substr(o.path.size() - 6) == ".dense"
              ? "dense"
              : "alist";
  std::string raw = read_file(o.path);
  in.g = fmt == "alist" ? pcw::parse_alist(raw, &in.warnings)
                        : pcw::parse_dense(raw, &in.warnings);
  in.source = o.path;
  in.format = fmt;
  in.sha1 = git_blob_sha1(raw);
  return in;
}

json input_json(const Input& in) {
  json j{{"source", in.source}, {"format", in.format}, {"sha1", in.sha1}};
  if (!in.warnings.empty()) j["warnings"] = in.warnings;
  return j;
}

json rat_j(const pcw::Rat& r) { return pcw::rat_str(r); }

json weights_json(const pcw::WeightReport& w) {
  return json{{"bec", w.bec},
              {"bsc", w.bsc},
              {"awgn", rat_j(w.awgn)},
              {"max_fraction", rat_j(w.max_fraction)}};
}

json histogram_json(const std::map<pcw::Rat, long long>& h) {
  json arr = json::array();
  for (auto& [bin, count] : h)
    arr.push_back(json{{"bin", rat_j(bin)}, {"count", count}});
  return arr;
}

json witness_json(const std::vector<pcw::Rat>& w) {
  json arr = json::array();
  for (auto& x : w) arr.push_back(rat_j(x));
  return arr;
}

pcw::Channel parse_channel(const std::string& s) {
  if (s == "bec") return pcw::Channel::BEC;
  if (s == "bsc") return pcw::Channel::BSC;
  if (s == "awgn") return pcw::Channel::AWGN;
  throw pcw::InputError("unknown channel: " + s);
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    size_t used = 0;
    double v = std::stod(tok, &used);
    if (used != tok.size()) throw pcw::InputError("bad number: " + tok);
    out.push_back(v);
  }
  if (out.empty()) throw pcw::InputError("empty list: " + s);
  return out;
}

std::vector<long long> parse_vec(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    size_t used = 0;
    long long v = std::stoll(tok, &used, 10);
    if (used != tok.size()) throw pcw::InputError("bad integer: " + tok);
    out.push_back(v);
  }
  return out;
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeOpts {
  InputOpts in;
  std::string out;
  int max_cap = 12;
  bool histogram = false;
  std::string channel = "awgn";
};

void run_analyze(const AnalyzeOpts& o) {
  Input in = load_input(o.in);
  const pcw::TannerGraph& g = in.g;
  if (g.n > 20)
    throw pcw::InputError(
        "analysis enumerates pseudocodewords exactly and requires n <= 20");
  json rep;
  rep["command"] = "analyze";
  rep["config"] = json{{"max_cap", o.max_cap},
                       {"histogram", o.histogram},
                       {"channel", o.channel}};
  rep["input"] = input_json(in);
  int gi = pcw::girth(g);
  bool var_regular = g.var_degree_min() == g.var_degree_max();
  rep["graph"] = json{
      {"n", g.n},
      {"m", g.m},
      {"girth", gi},
      {"connected", pcw::is_connected(g)},
      {"var_degree_min", g.var_degree_min()},
      {"var_degree_max", g.var_degree_max()},
      {"check_degree_min", g.check_degree_min()},
      {"check_degree_max", g.check_degree_max()},
  };
  auto cb = pcw::enumerate_codewords(g);
  rep["code"] = json{{"dimension", cb.dimension},
                     {"codewords", cb.words.size()},
                     {"d_min", cb.d_min}};
  auto stops = pcw::enumerate_stopping_sets(g);
  auto minstops = pcw::enumerate_minimal_stopping_sets(g);
  rep["stopping"] = json{{"s_min", pcw::s_min(g)},
                         {"stopping_sets", stops.size()},
                         {"minimal_stopping_sets", minstops.size()},
                         {"problematic_nodes", pcw::find_problematic_nodes(g)}};
  auto set = pcw::enumerate_irreducible(g, 4, o.max_cap);
  long long nc = 0;
  pcw::Rat wmin[3];
  bool first = true;
  for (auto& p : set.elems) {
    std::uint64_t supp = pcw::support_mask(p);
    long long mx = *std::max_element(p.begin(), p.end());
    bool cwm = std::binary_search(cb.words.begin(), cb.words.end(), supp) &&
               std::all_of(p.begin(), p.end(),
                           [&](long long x) { return x == 0 || x == mx; });
    if (!cwm) ++nc;
    auto wr = pcw::weight_report(p);
    pcw::Rat w3[3] = {pcw::Rat(wr.bec), pcw::Rat(wr.bsc), wr.awgn};
    for (int c = 0; c < 3; ++c)
      if (first || w3[c] < wmin[c]) wmin[c] = w3[c];
    first = false;
  }
  rep["pseudocodewords"] =
      json{{"count", set.elems.size()},
           {"non_codeword_multiples", nc},
           {"t_value", set.max_component},
           {"cap_used", set.cap_used},
           {"w_min", json{{"bec", rat_j(wmin[0])},
                          {"bsc", rat_j(wmin[1])},
                          {"awgn", rat_j(wmin[2])}}}};
  if (o.histogram) {
    auto h = pcw::weight_histogram(g, cb, set, parse_channel(o.channel));
    rep["histogram"] = json{{"channel", o.channel}, {"bins", histogram_json(h)}};
  }
  json bounds = json::array();
  {
    json row{{"name", "degree_girth_tree"}};
    if (var_regular && g.var_degree_min() >= 2 && gi >= 6) {
      long long v = pcw::tree_bound(g.var_degree_min(), gi);
      row["applicable"] = true;
      row["value"] = v;
      row["slack_bsc"] = rat_j(wmin[1] - v);
      row["slack_awgn"] = rat_j(wmin[2] - v);
    } else {
      row["applicable"] = false;
    }
    bounds.push_back(row);
  }
  {
    json row{{"name", "min_degree_girth_product"}};
    if (g.var_degree_min() >= 3 && gi > 4) {
      long long v = pcw::feldman_bound(g.var_degree_min(), gi);
      row["applicable"] = true;
      row["value"] = v;
      row["slack_bsc"] = rat_j(wmin[1] - v);
      row["slack_awgn"] = rat_j(wmin[2] - v);
    } else {
      row["applicable"] = false;
    }
    bounds.push_back(row);
  }
  {
    json row{{"name", "component_support"}};
    int smin = pcw::s_min(g);
    if (set.max_component >= 1 && smin >= 1) {
      auto b = pcw::t_support_bounds(set.max_component, smin);
      row["applicable"] = true;
      row["t"] = set.max_component;
      row["s_min"] = smin;
      row["value_bsc"] = rat_j(b.bsc);
      row["value_awgn"] = rat_j(b.awgn);
      row["slack_bsc"] = rat_j(wmin[1] - b.bsc);
      row["slack_awgn"] = rat_j(wmin[2] - b.awgn);
    } else {
      row["applicable"] = false;
    }
    bounds.push_back(row);
  }
  rep["bounds"] = bounds;
  write_text(o.out, rep.dump(2) + "\n");
}

// -------------------------------------------------------------- enumerate

struct EnumerateOpts {
  InputOpts in;
  std::string out;
  int max_cap = 12;
  bool classify = true;
};

void run_enumerate(const EnumerateOpts& o) {
  Input in = load_input(o.in);
  const pcw::TannerGraph& g = in.g;
  json rep;
  rep["command"] = "enumerate";
  rep["config"] = json{{"max_cap", o.max_cap}, {"classify", o.classify}};
  rep["input"] = input_json(in);
  auto cb = pcw::enumerate_codewords(g);
  auto set = pcw::enumerate_irreducible(g, 4, o.max_cap);
  json elems = json::array();
  long long nc = 0, bad = 0;
  for (size_t k = 0; k < set.elems.size(); ++k) {
    auto& p = set.elems[k];
    std::uint64_t supp = pcw::support_mask(p);
    long long mx = *std::max_element(p.begin(), p.end());
    bool cwm = std::binary_search(cb.words.begin(), cb.words.end(), supp) &&
               std::all_of(p.begin(), p.end(),
                           [&](long long x) { return x == 0 || x == mx; });
    if (!cwm) ++nc;
    json e{{"p", p},
           {"codeword_multiple", cwm},
           {"extreme_ray", (bool)set.ray_flag[k]},
           {"weights", weights_json(pcw::weight_report(p))}};
    if (o.classify) {
      auto a = pcw::is_bad_awgn(cb, p);
      auto t1 = pcw::is_bad_tawgn(cb, p, 1);
      auto b = pcw::is_bad_bsc(cb, p);
      if (a.bad) ++bad;
      e["bad"] = json{{"awgn", a.bad}, {"tawgn1", t1.bad}, {"bsc", b.bad}};
      if (a.bad) e["awgn_witness"] = witness_json(a.witness);
      if (t1.bad) e["tawgn1_witness"] = witness_json(t1.witness);
      if (b.bad) e["bsc_witness"] = witness_json(b.witness);
    }
    elems.push_back(std::move(e));
  }
  rep["count"] = set.elems.size();
  rep["t_value"] = set.max_component;
  rep["non_codeword_multiples"] = nc;
  if (o.classify) rep["bad_awgn_count"] = bad;
  if (nc == 0) rep["note"] = "codeword multiples only";
  rep["elements"] = elems;
  write_text(o.out, rep.dump(2) + "\n");
}

// --------------------------------------------------------------- simulate

struct SimulateOpts {
  InputOpts in;
  std::string out;
  std::string channel;
  std::string snr_list;
  std::string param_list;
  long long trials = 100000;
  std::uint64_t seed = 12345;
  int threads = 0;
  std::string decoder = "minsum";
  int max_iters = 100;
  double rate = 0;
};

void run_simulate(const SimulateOpts& o) {
  Input in = load_input(o.in);
  const pcw::TannerGraph& g = in.g;
  pcw::McConfig cfg;
  if (o.channel == "bsc")
    cfg.channel = pcw::McChannel::Bsc;
  else if (o.channel == "bec")
    cfg.channel = pcw::McChannel::Bec;
  else if (o.channel == "biawgn")
    cfg.channel = pcw::McChannel::Biawgn;
  else
    throw pcw::InputError("unknown channel: " + o.channel);
  bool awgn = cfg.channel == pcw::McChannel::Biawgn;
  if (awgn && o.snr_list.empty())
    throw pcw::InputError("--snr-list is required for biawgn");
  if (!awgn && o.param_list.empty())
    throw pcw::InputError("--param-list is required for bsc/bec");
  auto params = parse_list(awgn ? o.snr_list : o.param_list);
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.threads = o.threads > 0
                    ? o.threads
                    : std::max(1u, std::thread::hardware_concurrency());
  cfg.decoder = o.decoder == "sumproduct" ? pcw::DecoderKind::SumProduct
                                          : pcw::DecoderKind::MinSum;
  if (o.decoder != "minsum" && o.decoder != "sumproduct")
    throw pcw::InputError("unknown decoder: " + o.decoder);
  cfg.max_iters = o.max_iters;
  double rate = o.rate;
  if (rate <= 0) {
    if (g.n > 62)
      throw pcw::InputError("pass --rate for graphs with n > 62");
    std::vector<std::uint64_t> rows;
    for (auto& row : g.chk) {
      std::uint64_t mask = 0;
      for (int i : row) mask |= 1ull << i;
      rows.push_back(mask);
    }
    rate = (double)(g.n - pcw::gf2_rank(rows)) / g.n;
  }
  cfg.rate = rate;
  std::ostringstream csv;
  csv << "# command: simulate\n";
  csv << "# input: " << in.source << " sha1=" << in.sha1 << "\n";
  csv << "# config: channel=" << o.channel << " trials=" << o.trials
      << " seed=" << o.seed << " decoder=" << o.decoder
      << " max_iters=" << o.max_iters << " rate=" << fmt_double(rate) << "\n";
  csv << "channel,param,trials,seed,decoder,correct,detected,undetected,"
         "bit_errors,ber,fer\n";
  for (double prm : params) {
    cfg.param = prm;
    auto r = pcw::monte_carlo(g, cfg);
    csv << o.channel << "," << fmt_double(prm) << "," << r.trials << ","
        << o.seed << "," << (awgn || cfg.channel == pcw::McChannel::Bsc
                                 ? o.decoder
                                 : "peel")
        << "," << r.correct << "," << r.detected << "," << r.undetected << ","
        << r.bit_errors << "," << fmt_double(r.ber) << "," << fmt_double(r.fer)
        << "\n";
  }
  write_text(o.out, csv.str());
}

// ------------------------------------------------------------------ sweep

struct SweepOpts {
  InputOpts in;
  std::string out;
  int max_weight = -1;
  int max_iters = 100;
};

void run_sweep(const SweepOpts& o) {
  Input in = load_input(o.in);
  const pcw::TannerGraph& g = in.g;
  auto cb = pcw::enumerate_codewords(g);
  int maxw = o.max_weight < 0 ? g.n : o.max_weight;
  auto rows = pcw::exhaustive_bsc_sweep(g, cb, maxw, o.max_iters);
  std::ostringstream csv;
  csv << "# command: sweep\n";
  csv << "# input: " << in.source << " sha1=" << in.sha1 << "\n";
  csv << "# config: max_weight=" << maxw << " max_iters=" << o.max_iters
      << "\n";
  csv << "weight,patterns,ms_corrected,ms_detected,ms_undetected,ml_correct,"
         "ml_ties,ms_matches_unique_ml,ms_ok_on_ml_ties,avg_bit_errors\n";
  for (auto& r : rows)
    csv << r.weight << "," << r.patterns << "," << r.ms_corrected << ","
        << r.ms_detected << "," << r.ms_undetected << "," << r.ml_correct
        << "," << r.ml_ties << "," << r.ms_matches_unique_ml << ","
        << r.ms_ok_on_ml_ties << "," << fmt_double(r.avg_bit_errors) << "\n";
  write_text(o.out, csv.str());
}

// --------------------------------------------------------------- comptree

struct ComptreeOpts {
  InputOpts in;
  std::string out;
  int root = 0;
  int depth = 2;
  int node_cap = 100000;
  bool assignments = false;
  long long max_assignments = 1 << 20;
  std::string dot;
};

void run_comptree(const ComptreeOpts& o) {
  Input in = load_input(o.in);
  auto t = pcw::build_tree(in.g, o.root, o.depth, o.node_cap);
  json rep;
  rep["command"] = "comptree";
  rep["config"] = json{{"root", o.root},
                       {"depth", o.depth},
                       {"node_cap", o.node_cap},
                       {"assignments", o.assignments}};
  rep["input"] = input_json(in);
  auto flags = pcw::structure_flags(in.g);
  rep["tree"] = json{{"nodes", t.nodes.size()},
                     {"var_copies", t.var_copies},
                     {"chk_copies", t.chk_copies}};
  rep["structure"] = json{{"forest", flags.forest},
                          {"cycle_code", flags.cycle_code},
                          {"spanning_pair_class", flags.spanning_pair_class}};
  if (o.assignments) {
    auto all = pcw::enumerate_valid_assignments(t, o.max_assignments);
    long long consistent = 0;
    json inconsistent_example;
    std::set<std::vector<long long>> vectors;
    for (auto& bits : all) {
      auto rep2 = pcw::consistency_check(t, bits);
      if (rep2.consistent) {
        ++consistent;
        if (vectors.size() < 50) vectors.insert(rep2.scaled);
      } else if (inconsistent_example.is_null()) {
        inconsistent_example = json{{"bits", bits}};
      }
    }
    rep["assignments"] =
        json{{"count", all.size()},
             {"consistent", consistent},
             {"inconsistent", (long long)all.size() - consistent}};
    if (!inconsistent_example.is_null())
      rep["assignments"]["inconsistent_example"] = inconsistent_example;
    json vecs = json::array();
    for (auto& v : vectors) vecs.push_back(v);
    rep["assignments"]["consistent_vectors"] = vecs;
  }
  if (!o.dot.empty()) write_text(o.dot, pcw::to_dot(t));
  write_text(o.out, rep.dump(2) + "\n");
}

// ---------------------------------------------------------------- augment

struct AugmentOpts {
  InputOpts in;
  std::string out;
  std::string out_format = "alist";
  int order = 2;
  int max_rows = 4096;
};

void run_augment(const AugmentOpts& o) {
  Input in = load_input(o.in);
  if (o.out.empty())
    throw pcw::InputError("--out is required for the augmented graph");
  auto g2 = pcw::add_redundant_checks(in.g, o.order, o.max_rows);
  std::string text =
      o.out_format == "dense" ? pcw::emit_dense(g2) : pcw::emit_alist(g2);
  write_text(o.out, text);
  json rep;
  rep["command"] = "augment";
  rep["config"] = json{{"order", o.order},
                       {"max_rows", o.max_rows},
                       {"out_format", o.out_format}};
  rep["input"] = input_json(in);
  rep["result"] = json{{"n", g2.n},
                       {"checks_in", in.g.m},
                       {"checks_out", g2.m},
                       {"output", o.out},
                       {"output_sha1", git_blob_sha1(text)}};
  std::cout << rep.dump(2) << "\n";
}

// ---------------------------------------------------------------- realize

struct RealizeOpts {
  InputOpts in;
  std::string out;
  std::string pcw_str;
  int degree = 0;
};

void run_realize(const RealizeOpts& o) {
  Input in = load_input(o.in);
  const pcw::TannerGraph& g = in.g;
  auto p = parse_vec(o.pcw_str);
  if ((int)p.size() != g.n)
    throw pcw::InputError("--pcw length does not match the graph");
  json rep;
  rep["command"] = "realize";
  rep["config"] = json{{"pcw", p}, {"degree", o.degree}};
  rep["input"] = input_json(in);
  rep["cone_inequalities"] = pcw::check_cone_inequalities(g, p);
  rep["even_parity"] = pcw::check_even_parity(g, p);
  auto r = pcw::realize_pseudocodeword(g, p, o.degree);
  rep["found"] = r.found;
  if (!r.found) {
    rep["reason"] = r.reason;
  } else {
    rep["degree"] = r.degree;
    rep["min_degree"] = pcw::min_lift_degree(g, p);
    rep["degree_upper_bound"] = pcw::lift_degree_bound(g, p);
    rep["permutations"] = r.lift.perms;
    rep["assignment"] = r.bits;
    rep["reduces_back"] = pcw::reduce_lift_codeword(r.lift, r.bits) == p;
  }
  write_text(o.out, rep.dump(2) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tanner graph pseudocodeword toolkit"};
  app.require_subcommand(1);

  auto add_input = [](CLI::App* cmd, InputOpts& in) {
    cmd->add_option("--input", in.path, "graph file");
    cmd->add_option("--fixture", in.fixture, "named built-in graph");
    cmd->add_option("--format", in.format, "alist or dense (default: by extension)");
  };

  AnalyzeOpts ao;
  auto* A = app.add_subcommand("analyze", "graph, code, and pseudocodeword report");
  add_input(A, ao.in);
  A->add_option("--out", ao.out, "output path (default stdout)");
  A->add_option("--max-cap", ao.max_cap, "enumeration box ceiling");
  A->add_flag("--histogram", ao.histogram, "include the weight histogram");
  A->add_option("--channel", ao.channel, "histogram channel: bec|bsc|awgn");

  EnumerateOpts eo;
  auto* E = app.add_subcommand("enumerate", "irreducible pseudocodewords with labels");
  add_input(E, eo.in);
  E->add_option("--out", eo.out, "output path (default stdout)");
  E->add_option("--max-cap", eo.max_cap, "enumeration box ceiling");
  E->add_flag("!--no-classify", eo.classify, "skip the cost-domain programs");

  SimulateOpts so;
  auto* S = app.add_subcommand("simulate", "seeded Monte Carlo decoding curves");
  add_input(S, so.in);
  S->add_option("--out", so.out, "output path (default stdout)");
  S->add_option("--channel", so.channel, "bsc|bec|biawgn")->required();
  S->add_option("--snr-list", so.snr_list, "Eb/N0 points in dB, comma separated");
  S->add_option("--param-list", so.param_list, "flip/erasure probabilities");
  S->add_option("--trials", so.trials, "trials per point");
  S->add_option("--seed", so.seed, "base seed");
  S->add_option("--threads", so.threads, "worker threads (0 = all)");
  S->add_option("--decoder", so.decoder, "minsum|sumproduct");
  S->add_option("--max-iters", so.max_iters, "iteration budget");
  S->add_option("--rate", so.rate, "code rate override for Eb/N0 scaling");

  SweepOpts wo;
  auto* W = app.add_subcommand("sweep", "exhaustive error-pattern table");
  add_input(W, wo.in);
  W->add_option("--out", wo.out, "output path (default stdout)");
  W->add_option("--max-weight", wo.max_weight, "largest pattern weight (default n)");
  W->add_option("--max-iters", wo.max_iters, "iteration budget");

  ComptreeOpts co;
  auto* C = app.add_subcommand("comptree", "message-passing tree report");
  add_input(C, co.in);
  C->add_option("--out", co.out, "output path (default stdout)");
  C->add_option("--root", co.root, "root variable");
  C->add_option("--depth", co.depth, "variable layers including the root");
  C->add_option("--node-cap", co.node_cap, "tree size guard");
  C->add_flag("--assignments", co.assignments, "enumerate valid assignments");
  C->add_option("--max-assignments", co.max_assignments, "assignment cap");
  C->add_option("--dot", co.dot, "write the tree in dot format here");

  AugmentOpts go;
  auto* G = app.add_subcommand("augment", "add redundant parity checks");
  add_input(G, go.in);
  G->add_option("--out", go.out, "augmented graph path")->required();
  G->add_option("--out-format", go.out_format, "alist|dense");
  G->add_option("--order", go.order, "largest row-combination size")->required();
  G->add_option("--max-rows", go.max_rows, "cap on emitted checks");

  RealizeOpts ro;
  auto* R = app.add_subcommand("realize", "build a cover realizing a vector");
  add_input(R, ro.in);
  R->add_option("--out", ro.out, "output path (default stdout)");
  R->add_option("--pcw", ro.pcw_str, "comma-separated entries")->required();
  R->add_option("--degree", ro.degree, "cover degree (0 = minimal)");

  try {
    app.parse(argc, argv);
    if (A->parsed()) run_analyze(ao);
    if (E->parsed()) run_enumerate(eo);
    if (S->parsed()) run_simulate(so);
    if (W->parsed()) run_sweep(wo);
    if (C->parsed()) run_comptree(co);
    if (G->parsed()) run_augment(go);
    if (R->parsed()) run_realize(ro);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const pcw::LimitError& e) {
    std::cerr << "limit: " << e.what() << "\n";
    return 1;
  } catch (const pcw::InputError& e) {
    std::cerr << "input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
