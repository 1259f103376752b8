#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rcc/rational.hpp"
#include "rcc/tree.hpp"

namespace rcc {

// One pair (c,p) of positive integers. A sequence of pairs describes the
// blow-up history of one cusp resolution; standardness is a sequence-level
// property (see validate).
struct HNPair {
  long long c = 0;
  long long p = 0;
  friend bool operator==(const HNPair&, const HNPair&) = default;
  friend auto operator<=>(const HNPair&, const HNPair&) = default;
};

using HNSeq = std::vector<HNPair>;

HNSeq parse_seq(std::string_view s);  // "(15,6)(3,2)"
std::string seq_str(const HNSeq& s);

// Number of subtractive-Euclid steps from (c,p) down to a zero entry;
// equals the component count of the chain the pair contracts to.
long long euclid_steps(long long c, long long p);

// nullopt when the sequence is standard; otherwise the first violated
// condition. Standardness for resolution divisors whose (-1)-curve is not a
// tip: gcd chain gcd(c_k,p_k)=c_{k+1} (c_{h+1}=1), c_1>p_1>=2, c_k!=p_k for
// k>=2, and the two structural constraints keeping each intermediate
// (-1)-curve off the tips: p_1 != c_2 and c_k != c_{k+1} for k>=2.
std::optional<std::string> validate(const HNSeq& s);
inline bool is_standard(const HNSeq& s) { return !validate(s).has_value(); }

// The unique chain [a_1..a_m,1,b_1..b_n] with d(A)=p/gcd, d(B)=c/gcd that
// contracts to a smooth point. Throws invalid_pair.
Chain chain_of_pair(long long c, long long p);

// Blow-up simulation of the whole sequence: the returned tree is the dual
// graph of the exceptional divisor, with the unique (-1)-curve marked and
// the germ attachment recorded. outer_blowups counts centers lying on
// exactly one existing curve.
struct Expansion {
  WeightedTree tree;
  long long outer_blowups = 0;
};
Expansion expand_full(const HNSeq& s);        // throws non_standard
WeightedTree expand(const HNSeq& s);

// Inverse of expand on standard sequences. Requires a contractible tree
// with a unique weight-1 vertex.
HNSeq pairs_from_tree(const WeightedTree& t);

// Closed forms in terms of the pairs. All require a standard sequence.
Rat ind_formula(const HNSeq& s);
long long r_formula(const HNSeq& s);
long long b0_delta_formula(const HNSeq& s);
int s_formula(const HNSeq& s);
long long lambda_formula(const HNSeq& s);
Int M_of(const HNSeq& s);
Int I_of(const HNSeq& s);

// Multiplicity sequence: per-pair subtractive Euclid recording the minimum
// at each step, blocks concatenated. Sums to M, squares sum to I.
std::vector<long long> mult_sequence(const HNSeq& s);
long long tau_of(const HNSeq& s);  // trailing 1s of the multiplicity sequence

// (b0 of the (-2)-twigs away from the (-1)-curve, their delta). Zero for
// semi-ordinary cusps by convention.
std::pair<long long, Rat> delta_minus_info(const HNSeq& s);

bool is_semi_ordinary(const HNSeq& s);  // h == 1 and p == 2

// Lower bound for the inductance at given lambda.
Rat nu(long long lambda);

// One cusp type with all cached invariants; immutable after make().
struct CuspType {
  HNSeq seq;
  long long lambda = 0;
  Rat ind;
  Int M;
  Int I;
  long long r = 0;
  int s = 0;
  long long tau = 0;
  long long tau_star = 0;
  long long b0_delta = 0;
  long long b0_delta_minus = 0;
  Rat delta_minus;
  std::vector<long long> multiplicities;
  bool semi_ordinary = false;

  static CuspType make(const HNSeq& s);
  std::string pairs_text() const { return seq_str(seq); }
  friend bool operator==(const CuspType& a, const CuspType& b) { return a.seq == b.seq; }
};

// Canonical order: h, then the flattened (c,p) list lexicographically.
bool seq_less(const HNSeq& a, const HNSeq& b);

} // namespace rcc
