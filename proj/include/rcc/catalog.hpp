#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "rcc/hn.hpp"

namespace rcc {

// All coprime pairs whose subtractive Euclid reaches zero in exactly k
// steps, from (1,1) by the replacement (c,p) -> {(c+p,p),(c+p,c)}; sorted.
std::vector<std::pair<long long, long long>> coprime_pairs_with_steps(int k);

struct CatalogQuery {
  long long lambda = 0;
  std::optional<Rat> max_ind;
  bool require_delta_minus_zero = false;
  int max_components = 0;  // 0 means the default bound 2*lambda
};

// Every standard sequence with the given lambda and at most max_components
// components, canonically ordered. Throws unsupported_lambda outside 1..8.
// jobs > 1 enumerates top-level branches with OpenMP; the result does not
// depend on the worker count.
std::vector<CuspType> sequences_with_lambda(const CatalogQuery& q, int jobs = 1);

// All standard sequences with at most max_components components (serial
// reference enumerator; the parallel catalog must agree with it).
void for_each_standard_sequence(int max_components,
                                const std::function<void(const HNSeq&)>& fn);

// The unique sequence of minimal inductance for the given lambda and its
// value. Throws unsupported_lambda, and error if the minimum is not unique
// for lambda >= 3.
std::pair<CuspType, Rat> minimizer(long long lambda);

struct SurveyRow {
  CuspType type;
  Chain expansion;
};

// All divisors with lambda <= lambda_max and inductance <= bound.
std::vector<SurveyRow> low_inductance_survey(long long lambda_max = 7,
                                             const Rat& bound = Rat(2, 3));

} // namespace rcc
