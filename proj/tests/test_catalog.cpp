#include <doctest.h>

#include <algorithm>
#include <set>

#include "rcc/catalog.hpp"
#include "rcc/errors.hpp"

using namespace rcc;

namespace {

std::set<std::string> names(const std::vector<CuspType>& list) {
  std::set<std::string> out;
  for (const auto& t : list) out.insert(t.pairs_text());
  return out;
}

std::vector<CuspType> catalog(long long lambda) {
  CatalogQuery q;
  q.lambda = lambda;
  return sequences_with_lambda(q);
}

} // namespace

TEST_CASE("coprime pairs by step count") {
  using P = std::pair<long long, long long>;
  CHECK(coprime_pairs_with_steps(1) == std::vector<P>{{1, 1}});
  CHECK(coprime_pairs_with_steps(3) == std::vector<P>{{3, 1}, {3, 2}});
  auto s4 = coprime_pairs_with_steps(4);
  CHECK(std::count(s4.begin(), s4.end(), P{5, 2}) == 1);
  CHECK(std::count(s4.begin(), s4.end(), P{4, 3}) == 1);
  for (int k = 1; k <= 10; ++k)
    for (auto [c, p] : coprime_pairs_with_steps(k)) CHECK(euclid_steps(c, p) == k);
}

TEST_CASE("small catalogs match the known lists") {
  CHECK(names(catalog(1)) == std::set<std::string>{"(3,2)"});
  CHECK(names(catalog(2)) == std::set<std::string>{"(5,2)"});
  CHECK(names(catalog(3)) ==
        std::set<std::string>{"(4,3)", "(7,2)", "(7,3)", "(6,4)(2,1)",
                              "(10,4)(2,1)"});
  CHECK(names(catalog(4)) ==
        std::set<std::string>{
            "(5,3)", "(5,4)", "(7,5)", "(8,3)", "(9,2)", "(9,4)", "(10,3)",
            "(12,5)", "(6,4)(2,3)", "(10,4)(2,3)", "(9,6)(3,1)", "(15,6)(3,1)",
            "(8,6)(2,1)", "(14,4)(2,1)", "(14,6)(2,1)", "(12,8)(4,2)(2,1)",
            "(20,8)(4,2)(2,1)"});
}

TEST_CASE("generator soundness") {
  for (long long l = 1; l <= 7; ++l) {
    auto list = catalog(l);
    std::set<std::string> seen;
    for (const auto& t : list) {
      CHECK(is_standard(t.seq));
      CHECK(t.lambda == l);
      long long comps = 0;
      for (const auto& [c, p] : t.seq) comps += euclid_steps(c, p);
      CHECK(expand(t.seq).size() == comps);
      CHECK(seen.insert(t.pairs_text()).second);  // no duplicates
    }
    CHECK(std::is_sorted(list.begin(), list.end(),
                         [](const CuspType& a, const CuspType& b) {
                           return seq_less(a.seq, b.seq);
                         }));
  }
  CHECK_THROWS_AS(catalog(9), unsupported_lambda);
  CHECK_THROWS_AS(catalog(0), unsupported_lambda);
}

TEST_CASE("component budget is sharp with a margin") {
  // no standard sequence with lambda <= 7 needs more than 2*lambda
  // components; check up to four components beyond the bound
  for_each_standard_sequence(18, [](const HNSeq& s) {
    long long comps = 0;
    for (const auto& [c, p] : s) comps += euclid_steps(c, p);
    long long l = lambda_formula(s);
    if (l <= 7 && !(l == 1 && comps == 3)) CHECK(comps <= 2 * l);
  });
}

TEST_CASE("inductance minimizers") {
  auto [t1, v1] = minimizer(1);
  CHECK(t1.pairs_text() == "(3,2)");
  CHECK(v1 == parse_rat("5/6"));

  auto [t3, v3] = minimizer(3);
  CHECK(t3.pairs_text() == "(4,3)");
  CHECK(v3 == parse_rat("11/12"));

  for (long long l = 4; l <= 8; ++l) {
    auto [t, v] = minimizer(l);
    CHECK(v == nu(l));
    // expansion must be the chain [l-1, 1, (2)_{l-3}, 3]
    WeightedTree tree = expand(t.seq);
    auto path = tree.component_as_path(tree.components().front());
    REQUIRE(path.has_value());
    Chain got;
    for (int v2 : *path) got.push_back(tree.weight[v2]);
    Chain want{l - 1, 1};
    for (long long i = 0; i < l - 3; ++i) want.push_back(2);
    want.push_back(3);
    Chain rev(got.rbegin(), got.rend());
    CHECK((got == want || rev == want));
  }
}

TEST_CASE("low inductance survey") {
  auto rows = low_inductance_survey();
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].expansion == Chain{5, 1, 2, 2, 2, 3});
  CHECK(rows[0].type.lambda == 6);
  CHECK(rows[0].type.ind == Rat(2, 3) - Rat(1, 45));
  CHECK(rows[1].expansion == Chain{6, 1, 2, 2, 2, 2, 3});
  CHECK(rows[1].type.lambda == 7);
  CHECK(rows[1].type.ind == Rat(2, 3) - Rat(1, 22));
  CHECK(rows[2].expansion == Chain{5, 2, 1, 3, 2, 2, 3});
  CHECK(rows[2].type.lambda == 7);
  CHECK(rows[2].type.ind == Rat(2, 3) - Rat(1, 144));
}
