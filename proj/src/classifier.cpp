#include "rcc/classifier.hpp"

#include <algorithm>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rcc/errors.hpp"

namespace rcc {

namespace {

bool cusp_order(const CuspType& a, const CuspType& b) {
  if (a.lambda != b.lambda) return a.lambda > b.lambda;
  return seq_less(a.seq, b.seq);
}

// Lower bound used during tuple feasibility; drops to 1/2 beyond lambda 6.
Rat tuple_coefficient(long long lambda) {
  return lambda >= 7 ? Rat(1, 2) : nu(lambda);
}

struct KnownCase {
  const char* label;
  std::vector<const char*> pairs;
  long long d;
  long long p2;
  const char* audit;
  const char* note;
};

const std::vector<KnownCase>& known_cases() {
  static const std::vector<KnownCase> cases = {
      {"a", {"(5,2)", "(5,2)", "(3,2)", "(3,2)"}, 5, 0, "",
       "eliminated by a pencil argument on the twice-blown-up plane; not mechanized"},
      {"b", {"(7,2)", "(3,2)", "(3,2)", "(3,2)"}, 5, 0, "",
       "realized by the parameterized quintic; see verify-quintic"},
      {"c", {"(7,2)", "(4,3)", "(4,3)", "(3,2)"}, 6, 1, "c", ""},
      {"d", {"(5,3)", "(7,2)", "(5,2)", "(3,2)"}, 6, 1, "d", ""},
      {"e", {"(8,3)", "(7,3)", "(3,2)", "(3,2)"}, 7, 1, "e", ""},
      {"f", {"(9,2)", "(5,3)", "(3,2)", "(3,2)"}, 6, 1, "f", ""},
      {"g", {"(11,2)", "(4,3)", "(3,2)", "(3,2)"}, 6, 1, "g", ""},
      {"h", {"(15,2)", "(3,2)", "(3,2)", "(3,2)"}, 6, 1, "", ""},
      {"i", {"(4,3)", "(3,2)", "(3,2)", "(3,2)"}, 5, 0, "", ""},
      {"j", {"(4,3)", "(4,3)", "(4,3)", "(3,2)"}, 6, 1, "", ""},
      {"k", {"(5,3)", "(5,2)", "(4,3)", "(3,2)"}, 6, 1, "", ""},
      {"l", {"(5,3)", "(5,3)", "(3,2)", "(3,2)"}, 6, 1, "", ""},
  };
  return cases;
}

std::vector<HNSeq> parsed_case(const KnownCase& k) {
  std::vector<HNSeq> out;
  for (const char* p : k.pairs) out.push_back(parse_seq(p));
  return out;
}

const KnownCase* match_known(const Configuration& cfg) {
  std::vector<HNSeq> mine;
  for (const auto& c : cfg.cusps) mine.push_back(c.seq);
  std::sort(mine.begin(), mine.end());
  for (const auto& k : known_cases()) {
    auto theirs = parsed_case(k);
    std::sort(theirs.begin(), theirs.end());
    if (theirs == mine) return &k;
  }
  return nullptr;
}

} // namespace

void Configuration::canonicalize() {
  std::sort(cusps.begin(), cusps.end(), cusp_order);
}

Int Configuration::sum_I_minus_M() const {
  Int s = 0;
  for (const auto& c : cusps) s += c.I - c.M;
  return s;
}

Rat Configuration::ind_sum() const {
  Rat s(0);
  for (const auto& c : cusps) s += c.ind;
  return s;
}

long long Configuration::lambda_sum() const {
  long long s = 0;
  for (const auto& c : cusps) s += c.lambda;
  return s;
}

long long Configuration::b0_delta_minus_total() const {
  long long s = 0;
  for (const auto& c : cusps) s += c.b0_delta_minus;
  return s;
}

Rat Configuration::delta() const {
  Rat s(0);
  for (const auto& c : cusps) s += c.delta_minus;
  return s;
}

std::vector<std::string> Configuration::pair_texts() const {
  std::vector<std::string> out;
  for (const auto& c : cusps) out.push_back(c.pairs_text());
  return out;
}

std::optional<long long> degree_of(const Configuration& cfg) {
  Int disc = 1 + 4 * cfg.sum_I_minus_M();
  if (disc < 9) return std::nullopt;  // d >= 3 needs sqrt >= 3
  Int root = boost::multiprecision::sqrt(disc);
  if (root * root != disc || root % 2 == 0) return std::nullopt;
  Int d = (3 + root) / 2;
  return static_cast<long long>(d);
}

long long p2_of(const Configuration& cfg, long long d) {
  Int s = 0;
  for (const auto& c : cfg.cusps) s += c.M - c.r;
  Int p2 = 9 - 2 * static_cast<long long>(cfg.cusps.size()) + s - 3 * d;
  return static_cast<long long>(p2);
}

std::vector<std::vector<long long>> feasible_lambda_tuples(int c, int p2) {
  if (c != 4 && c != 5) throw invalid_args("cusp count must be 4 or 5");
  if (p2 < 0 || p2 > 2) throw invalid_args("p2 must be in {0,1,2}");
  long long sum_cap = 3 * p2 + 7;
  Rat ind_cap(5 - p2);
  std::vector<std::vector<long long>> out;
  std::vector<long long> tuple(static_cast<size_t>(c));
  auto rec = [&](auto&& self, int slot, long long maxv, long long sum_left,
                 Rat coeff_left) -> void {
    if (slot == c) {
      out.push_back(tuple);
      return;
    }
    long long remaining = c - slot - 1;
    for (long long l = std::min<long long>(maxv, sum_left - remaining); l >= 1; --l) {
      Rat coeff = tuple_coefficient(l);
      if (coeff > coeff_left) continue;  // coefficients are not monotone in l
      tuple[static_cast<size_t>(slot)] = l;
      self(self, slot + 1, l, sum_left - l, coeff_left - coeff);
    }
  };
  rec(rec, 0, sum_cap, sum_cap, ind_cap);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

FilterResult hurwitz_projection_filter(const Configuration& cfg, long long d) {
  FilterResult res;
  for (size_t i = 0; i < cfg.cusps.size(); ++i) {
    long long mu_i = cfg.cusps[i].multiplicities[0];
    long long mu_i2 = cfg.cusps[i].multiplicities[1];
    long long lhs = mu_i2 - 1;
    for (size_t j = 0; j < cfg.cusps.size(); ++j)
      if (j != i) lhs += cfg.cusps[j].multiplicities[0] - 1;
    long long rhs = 2 * (d - mu_i - 1);
    std::string line = "projection from cusp " + std::to_string(i + 1) + ": " +
                       std::to_string(lhs) + (lhs <= rhs ? " <= " : " > ") +
                       std::to_string(rhs);
    if (lhs > rhs) {
      res.pass = false;
      res.witness = line;
      return res;
    }
    if (!res.witness.empty()) res.witness += "; ";
    res.witness += line;
  }
  return res;
}

FilterResult matsuoka_sakai_filter(const Configuration& cfg, long long d) {
  long long mx = 0;
  for (const auto& c : cfg.cusps) mx = std::max(mx, c.multiplicities[0]);
  FilterResult res;
  res.pass = d < 3 * mx;
  res.witness = std::to_string(d) + (res.pass ? " < " : " >= ") + "3*" +
                std::to_string(mx) + " = " + std::to_string(3 * mx);
  return res;
}

namespace {

struct ArithmeticFilters {
  // Returns the survivor report for an assignment, or nullopt.
  static std::optional<CaseReport> apply(Configuration cfg, int assumed_p2) {
    auto d = degree_of(cfg);
    if (!d) return std::nullopt;
    long long p2 = p2_of(cfg, *d);
    if (p2 != assumed_p2 || p2 < 0 || p2 > 1) return std::nullopt;
    if (cfg.ind_sum() > Rat(5 - p2)) return std::nullopt;
    if (cfg.b0_delta_minus_total() != 0 && cfg.lambda_sum() >= 3 * p2 + 7)
      return std::nullopt;
    CaseReport rep;
    rep.cfg = std::move(cfg);
    rep.d = *d;
    rep.p2 = p2;
    rep.hurwitz = hurwitz_projection_filter(rep.cfg, *d);
    rep.matsuoka_sakai = matsuoka_sakai_filter(rep.cfg, *d);
    rep.survivor = rep.hurwitz.pass && rep.matsuoka_sakai.pass;
    if (const KnownCase* k = match_known(rep.cfg)) {
      rep.label = k->label;
      rep.audit = k->audit;
      rep.note = k->note;
    } else {
      rep.label = "?";
    }
    return rep;
  }
};

struct TupleJob {
  int p2;
  std::vector<long long> tuple;
};

std::vector<CaseReport> process_tuple(
    const TupleJob& job, const std::map<long long, std::vector<CuspType>>& pools,
    long long& examined) {
  std::vector<CaseReport> found;
  const int c = static_cast<int>(job.tuple.size());
  std::vector<int> pick(static_cast<size_t>(c), 0);
  auto rec = [&](auto&& self, int slot) -> void {
    if (slot == c) {
      Configuration cfg;
      for (int i = 0; i < c; ++i)
        cfg.cusps.push_back(
            pools.at(job.tuple[static_cast<size_t>(i)])[static_cast<size_t>(
                pick[static_cast<size_t>(i)])]);
      cfg.canonicalize();
      ++examined;
      if (auto rep = ArithmeticFilters::apply(std::move(cfg), job.p2))
        found.push_back(std::move(*rep));
      return;
    }
    const auto& pool = pools.at(job.tuple[static_cast<size_t>(slot)]);
    // equal-lambda slots take non-decreasing pool indices: one
    // representative per multiset
    int start = 0;
    if (slot > 0 && job.tuple[static_cast<size_t>(slot)] == job.tuple[static_cast<size_t>(slot - 1)])
      start = pick[static_cast<size_t>(slot - 1)];
    for (int i = start; i < static_cast<int>(pool.size()); ++i) {
      pick[static_cast<size_t>(slot)] = i;
      self(self, slot + 1);
    }
  };
  rec(rec, 0);
  return found;
}

} // namespace

ClassificationResult run_classification(const ClassifyOptions& opt) {
  if (opt.cusps != 4 && opt.cusps != 5) throw invalid_args("cusp count must be 4 or 5");
  ClassificationResult res;

  std::vector<TupleJob> jobs;
  for (int p2 = 0; p2 <= 2; ++p2)
    for (auto& t : feasible_lambda_tuples(opt.cusps, p2)) {
      res.tuples.emplace_back(p2, t);
      // the inductance of a cusp is bounded below by nu(lambda), so tuples
      // violating the exact nu-sum can never satisfy the global bound
      Rat nu_sum(0);
      for (long long l : t) nu_sum += nu(l);
      if (nu_sum > Rat(5 - p2)) continue;
      jobs.push_back(TupleJob{p2, t});
    }

  // candidate pools per lambda value
  std::map<long long, std::vector<CuspType>> pools;
  for (const auto& job : jobs)
    for (long long l : job.tuple)
      if (!pools.count(l)) {
        CatalogQuery q;
        q.lambda = l;
        if (!opt.strict) {
          if (l == 6) q.max_ind = Rat(3, 2);
          if (l == 7) q.require_delta_minus_zero = true;
        }
        auto pool = sequences_with_lambda(q, opt.jobs);
        if (opt.cusps == 4) {
          // the configurations in range keep every cusp at h <= 2
          std::erase_if(pool, [](const CuspType& t) { return t.seq.size() > 2; });
        }
        pools.emplace(l, std::move(pool));
      }

  std::vector<std::vector<CaseReport>> parts(jobs.size());
  std::vector<long long> counts(jobs.size(), 0);
  if (opt.jobs > 1) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(opt.jobs)
    for (int i = 0; i < static_cast<int>(jobs.size()); ++i)
      parts[static_cast<size_t>(i)] =
          process_tuple(jobs[static_cast<size_t>(i)], pools, counts[static_cast<size_t>(i)]);
#else
    for (size_t i = 0; i < jobs.size(); ++i)
      parts[i] = process_tuple(jobs[i], pools, counts[i]);
#endif
  } else {
    for (size_t i = 0; i < jobs.size(); ++i)
      parts[i] = process_tuple(jobs[i], pools, counts[i]);
  }
  for (size_t i = 0; i < jobs.size(); ++i) {
    res.assignments_examined += counts[i];
    for (auto& rep : parts[i]) res.cases.push_back(std::move(rep));
  }
  std::sort(res.cases.begin(), res.cases.end(),
            [](const CaseReport& a, const CaseReport& b) {
              if (a.label != b.label) return a.label < b.label;
              return a.cfg.pair_texts() < b.cfg.pair_texts();
            });
  return res;
}

bool matches_expected(const ClassificationResult& res, int cusps) {
  if (cusps == 5) {
    for (const auto& c : res.cases)
      if (c.survivor) return false;
    return true;
  }
  if (res.cases.size() != known_cases().size()) return false;
  for (size_t i = 0; i < res.cases.size(); ++i) {
    const auto& got = res.cases[i];
    const auto& want = known_cases()[i];
    if (got.label != want.label || got.d != want.d || got.p2 != want.p2)
      return false;
    bool want_hurwitz = !(want.label[0] >= 'i' && want.label[0] <= 'l');
    bool want_ms = want.label[0] != 'h';
    if (got.hurwitz.pass != want_hurwitz || got.matsuoka_sakai.pass != want_ms)
      return false;
  }
  return true;
}

namespace {

Rat audit_bound_g(const WeightedTree& forest,
                  const std::vector<std::vector<int>>& comps,
                  const std::vector<int>& chain_comps) {
  // 3 * (e_top + sum over chain components of 1/d); e_top = -1 here
  Rat acc(-1);
  for (int ci : chain_comps) {
    auto path = forest.component_as_path(comps[static_cast<size_t>(ci)]);
    Chain c;
    for (int v : *path) c.push_back(forest.weight[v]);
    acc += Rat(1, discriminant(c));
  }
  return Rat(3) * acc;
}

} // namespace

AuditReport audit_case(char id, const WeightedTree& forest) {
  AuditReport rep;
  rep.id = id;
  if (id >= 'c' && id <= 'f') {
    if (!forest.is_connected())
      throw malformed_forest("audit " + std::string(1, id) +
                             " expects one connected decorated divisor");
    Rat ind = inductance_forest(forest, InductanceMode::twigs);
    rep.quantities.push_back({"ind(D+A)", ind});
    rep.contradiction = ind > Rat(3);
    rep.comparison = "ind(D+A) = " + rat_str(ind) + (rep.contradiction ? " > 3" : " <= 3");
    return rep;
  }
  if (id != 'g') throw invalid_args("audit cases are c, d, e, f, g");

  auto comps = forest.components();
  if (comps.size() != 5)
    throw malformed_forest("audit g expects five components, got " +
                           std::to_string(comps.size()));
  // components 0..3 are the chains of the two large cusps with their
  // (-1)-curves removed; component 4 carries the curve and the two
  // ordinary cusps
  std::vector<int> chain_comps{0, 1, 2, 3};
  Rat ind_q1(0), ind_q2(0);
  for (int ci = 0; ci < 4; ++ci) {
    auto path = forest.component_as_path(comps[static_cast<size_t>(ci)]);
    if (!path)
      throw malformed_forest("audit g: component " + std::to_string(ci + 1) +
                             " is not a chain");
    Chain c;
    for (int v : *path) c.push_back(forest.weight[v]);
    Rat ind = inductance_both_ends(c);
    (ci < 2 ? ind_q1 : ind_q2) += ind;
  }
  WeightedTree rest;
  {
    std::vector<int> keep = comps[4];
    std::vector<int> idx(forest.weight.size(), -1);
    for (int v : keep) idx[v] = rest.add_vertex(forest.weight[v]);
    for (int v : keep)
      for (int u : forest.adj[v])
        if (idx[u] >= 0 && u < v) rest.add_edge(idx[u], idx[v]);
  }
  Rat ind_rest = inductance_forest(rest, InductanceMode::twigs);
  Rat ind_b = ind_q1 + ind_q2 + ind_rest;
  // supplied intersection numbers for this boundary: K.(K+B) and B.(K+B)
  const Rat k_dot(3), b_dot(-10);
  Rat square = k_dot + b_dot + ind_b;                // (K+B-Bk B)^2
  Rat bound = audit_bound_g(forest, comps, chain_comps);
  rep.quantities.push_back({"ind(Q1'-C1')", ind_q1});
  rep.quantities.push_back({"ind(Q2'-C2')", ind_q2});
  rep.quantities.push_back({"ind(E+Q3'+Q4')", ind_rest});
  rep.quantities.push_back({"ind(B)", ind_b});
  rep.quantities.push_back({"(K+B-Bk B)^2", square});
  rep.quantities.push_back({"log BMY bound", bound});
  rep.contradiction = square > bound;
  rep.comparison = "(K+B-Bk B)^2 = " + rat_str(square) +
                   (rep.contradiction ? " > " : " <= ") + rat_str(bound);
  return rep;
}

} // namespace rcc
