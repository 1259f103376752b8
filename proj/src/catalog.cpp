#include "rcc/catalog.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rcc/errors.hpp"

namespace rcc {

namespace {

struct ShapePair {
  long long a, b;
  int steps;
};

// levels[k] = coprime pairs with exactly k subtractive steps, k >= 1.
std::vector<std::vector<ShapePair>> pair_levels(int max_steps) {
  std::vector<std::vector<ShapePair>> levels(static_cast<size_t>(max_steps) + 1);
  if (max_steps >= 1) levels[1] = {{1, 1, 1}};
  for (int k = 1; k < max_steps; ++k) {
    auto& next = levels[k + 1];
    for (const auto& s : levels[k]) {
      next.push_back({s.a + s.b, s.b, k + 1});
      next.push_back({s.a + s.b, s.a, k + 1});
    }
    std::sort(next.begin(), next.end(), [](const ShapePair& x, const ShapePair& y) {
      return std::pair(x.a, x.b) < std::pair(y.a, y.b);
    });
    next.erase(std::unique(next.begin(), next.end(),
                           [](const ShapePair& x, const ShapePair& y) {
                             return x.a == y.a && x.b == y.b;
                           }),
               next.end());
  }
  return levels;
}

// Scale a shape tuple into the standard sequence it represents:
// c_k = a_k * prod_{l>k} a_l, p_k = b_k * prod_{l>k} a_l.
HNSeq scale_shapes(const std::vector<ShapePair>& shapes) {
  HNSeq seq(shapes.size());
  long long scale = 1;
  for (size_t k = shapes.size(); k-- > 0;) {
    seq[k] = {shapes[k].a * scale, shapes[k].b * scale};
    scale *= shapes[k].a;
  }
  return seq;
}

// First pair: a > b >= 2 coprime. Later pairs: a >= 2 (else the (-1)-curve
// of the previous pair would sit at a tip), b >= 1, a != b, coprime. The
// level lists carry a >= b only, so later positions also take the swap.
bool valid_first(const ShapePair& s) { return s.a > s.b && s.b >= 2; }
bool valid_later(const ShapePair& s) { return s.a >= 2 && s.a != s.b; }

template <typename Fn>
void extend_sequence(const std::vector<std::vector<ShapePair>>& levels,
                     std::vector<ShapePair>& shapes, int budget, Fn&& emit) {
  emit(shapes);
  for (int k = 2; k <= budget; ++k)
    for (const auto& s : levels[static_cast<size_t>(k)]) {
      // a == b only happens for (1,1), which valid_later rejects in both
      // orders, so the two orientations never coincide here
      for (const ShapePair cand : {s, ShapePair{s.b, s.a, s.steps}}) {
        if (!valid_later(cand)) continue;
        shapes.push_back(cand);
        extend_sequence(levels, shapes, budget - k, emit);
        shapes.pop_back();
      }
    }
}

template <typename Fn>
void enumerate_from_first(const std::vector<std::vector<ShapePair>>& levels,
                          const ShapePair& first, int budget, Fn&& emit) {
  std::vector<ShapePair> shapes{first};
  extend_sequence(levels, shapes, budget - first.steps, emit);
}

std::vector<std::pair<int, ShapePair>> first_candidates(
    const std::vector<std::vector<ShapePair>>& levels, int max_components) {
  std::vector<std::pair<int, ShapePair>> out;
  for (int k = 3; k <= max_components; ++k)
    for (const auto& s : levels[static_cast<size_t>(k)])
      if (valid_first(s)) out.emplace_back(k, s);
  return out;
}

long long lambda_of_shapes(const std::vector<ShapePair>& shapes) {
  auto bminus = [](const ShapePair& s) {
    long long m = s.a % s.b;
    return (m > 0 && s.b >= 2 * m) ? 1 : 0;
  };
  auto bplus = [](const ShapePair& s) {
    long long m = s.b % s.a;
    return (m > 0 && s.a >= 2 * m) ? 1 : 0;
  };
  long long acc = -bminus(shapes.front());
  for (const auto& s : shapes) acc += s.steps - bplus(s);
  if (shapes.size() == 1 && shapes[0].a == 3 && shapes[0].b == 2) acc -= 1;
  return acc;
}

} // namespace

std::vector<std::pair<long long, long long>> coprime_pairs_with_steps(int k) {
  if (k < 1) throw invalid_args("step count must be >= 1");
  auto levels = pair_levels(k);
  std::vector<std::pair<long long, long long>> out;
  for (const auto& s : levels[static_cast<size_t>(k)]) out.emplace_back(s.a, s.b);
  return out;
}

void for_each_standard_sequence(int max_components,
                                const std::function<void(const HNSeq&)>& fn) {
  auto levels = pair_levels(max_components);
  for (const auto& [k, first] : first_candidates(levels, max_components))
    enumerate_from_first(levels, first, max_components,
                         [&](const std::vector<ShapePair>& shapes) {
                           fn(scale_shapes(shapes));
                         });
}

std::vector<CuspType> sequences_with_lambda(const CatalogQuery& q, int jobs) {
  if (q.lambda < 1 || q.lambda > 8)
    throw unsupported_lambda("catalog supports lambda in 1..8, got " +
                             std::to_string(q.lambda));
  // default bound: 2*lambda components, except that the single divisor with
  // lambda = 1 has three of them
  int budget = q.max_components > 0 ? q.max_components
                                    : std::max<int>(static_cast<int>(2 * q.lambda), 3);
  if (budget < q.lambda)
    throw invalid_args("max_components must be at least lambda");
  auto levels = pair_levels(budget);
  auto firsts = first_candidates(levels, budget);

  auto accept = [&](const std::vector<ShapePair>& shapes,
                    std::vector<CuspType>& sink) {
    if (lambda_of_shapes(shapes) != q.lambda) return;
    CuspType t = CuspType::make(scale_shapes(shapes));
    if (q.max_ind && t.ind > *q.max_ind) return;
    if (q.require_delta_minus_zero && t.b0_delta_minus != 0) return;
    sink.push_back(std::move(t));
  };

  std::vector<CuspType> result;
  if (jobs <= 1) {
    for (const auto& [k, first] : firsts)
      enumerate_from_first(levels, first, budget,
                           [&](const auto& shapes) { accept(shapes, result); });
  } else {
#ifdef _OPENMP
    int n = static_cast<int>(firsts.size());
    std::vector<std::vector<CuspType>> parts(static_cast<size_t>(n));
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (int i = 0; i < n; ++i)
      enumerate_from_first(levels, firsts[static_cast<size_t>(i)].second, budget,
                           [&](const auto& shapes) {
                             accept(shapes, parts[static_cast<size_t>(i)]);
                           });
    for (auto& part : parts)
      for (auto& t : part) result.push_back(std::move(t));
#else
    for (const auto& [k, first] : firsts)
      enumerate_from_first(levels, first, budget,
                           [&](const auto& shapes) { accept(shapes, result); });
#endif
  }
  std::sort(result.begin(), result.end(),
            [](const CuspType& a, const CuspType& b) { return seq_less(a.seq, b.seq); });
  return result;
}

std::pair<CuspType, Rat> minimizer(long long lambda) {
  CatalogQuery q;
  q.lambda = lambda;
  auto list = sequences_with_lambda(q);
  if (list.empty()) throw error("empty catalog for lambda " + std::to_string(lambda));
  const CuspType* best = &list.front();
  int ties = 1;
  for (size_t i = 1; i < list.size(); ++i) {
    if (list[i].ind < best->ind) {
      best = &list[i];
      ties = 1;
    } else if (list[i].ind == best->ind) {
      ++ties;
    }
  }
  if (lambda >= 3 && ties > 1)
    throw error("inductance minimum is not unique for lambda " + std::to_string(lambda));
  return {*best, best->ind};
}

std::vector<SurveyRow> low_inductance_survey(long long lambda_max, const Rat& bound) {
  std::vector<SurveyRow> out;
  for (long long l = 1; l <= lambda_max; ++l) {
    CatalogQuery q;
    q.lambda = l;
    q.max_ind = bound;
    for (auto& t : sequences_with_lambda(q)) {
      WeightedTree tree = expand(t.seq);
      auto path = tree.component_as_path(tree.components().front());
      Chain c;
      if (path)
        for (int v : *path) c.push_back(tree.weight[v]);
      Chain rev(c.rbegin(), c.rend());
      c = std::max(c, rev);
      out.push_back(SurveyRow{std::move(t), std::move(c)});
    }
  }
  return out;
}

} // namespace rcc
