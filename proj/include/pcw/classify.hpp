#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pcw/codebook.hpp"
#include "pcw/irreducible.hpp"
#include "pcw/rational.hpp"
#include "pcw/tanner_graph.hpp"

namespace pcw {

// A pseudocodeword is bad when some cost vector scores every nonzero codeword
// at least zero but the pseudocodeword itself below zero. The admissible cost
// vectors depend on the channel domain: all of R^n for the unquantized
// Gaussian, the box [-L, L]^n for its truncated version, and {-1, +1}^n for
// the binary symmetric channel.
struct DomainResult {
  bool bad = false;
  std::vector<Rat> witness;  // nonempty exactly when bad; re-verified
};

DomainResult is_bad_awgn(const Codebook& cb, const std::vector<long long>& p);
DomainResult is_bad_tawgn(const Codebook& cb, const std::vector<long long>& p,
                          const Rat& L);
DomainResult is_bad_bsc(const Codebook& cb, const std::vector<long long>& p);

// Exact re-check of a claimed witness: every nonzero codeword cost >= 0 and
// p's cost < 0.
bool verify_bad_witness(const Codebook& cb, const std::vector<long long>& p,
                        const std::vector<Rat>& w);

struct SufficientChecks {
  // weight below minimum distance on either discrete channel
  bool weight_below_dmin = false;
  // support smaller than the minimum distance
  bool support_below_dmin = false;
  // irreducible non-codeword with support size exceeding the count of
  // nonzero codewords living inside the support
  bool support_exceeds_inside_codewords_applicable = false;
  bool support_exceeds_inside_codewords = false;
  bool construction_failed = false;
  int inside_codewords = 0;
  std::optional<std::vector<Rat>> witness;  // from the third condition
};

// Three sufficient conditions for badness, the third with a constructed and
// re-verified witness (solve costs +1 on each inside codeword, -2 on p, wall
// value off the support). is_irr tells whether p is known irreducible; pass
// false to skip the third condition.
SufficientChecks sufficient_bad_checks(const TannerGraph& g, const Codebook& cb,
                                       const std::vector<long long>& p,
                                       bool is_irr);

struct ClassifiedElement {
  std::vector<long long> p;
  bool codeword_multiple = false;
  DomainResult awgn, tawgn1, bsc;
};

struct Classification {
  std::vector<ClassifiedElement> elems;  // one per irreducible element
  int bad_count = 0;                     // by the unquantized Gaussian domain
};

// Classifies every irreducible element; also asserts the domain inclusion
// chain (bsc bad => tawgn(1) bad => awgn bad) elementwise.
Classification classify_all(const TannerGraph& g, const Codebook& cb);

}  // namespace pcw
