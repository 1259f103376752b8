#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rcc/rational.hpp"

namespace rcc {

// A rational chain [a_1,...,a_k]; weight a_i is minus the self-intersection
// of the i-th component, so a (-1)-curve carries weight 1. Where orientation
// matters (twigs) the chain is stored tip first.
using Weight = long long;
using Chain = std::vector<Weight>;

// d(T) = det(-Q(T)); d of the empty chain is 1.
Int discriminant(const Chain& t);

// All weights >= 2. Such a chain is automatically negative definite.
bool is_admissible(const Chain& t);

// Coefficients of Bk'T in the basis T_1,...,T_k (tip first):
// d(T_{i+1}+...+T_k)/d(T). Throws not_admissible.
std::vector<Rat> bark_chain(const Chain& t);

// ind(T) = d(T-T_1)/d(T), tip first. Throws not_admissible.
Rat inductance_twig(const Chain& t);

// Both-ends variant for a chain that is a whole connected component:
// (d(T-T_1)+d(T-T_m)+2)/d(T). Throws not_admissible.
Rat inductance_both_ends(const Chain& t);

// delta = sum of 1/d over admissible chains.
Rat delta_of(const std::vector<Chain>& chains);

Chain parse_chain(std::string_view s);      // "[2,3,1,2]", "[]" is empty
std::string chain_str(const Chain& t);

} // namespace rcc
