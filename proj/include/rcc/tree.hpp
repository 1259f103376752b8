#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rcc/chain.hpp"
#include "rcc/rational.hpp"

namespace rcc {

// Dual graph of a reduced divisor: vertices carry positive weights
// (minus self-intersection), edges are normal crossings. May be a forest.
// Immutable by convention once built; every operation below is pure.
struct WeightedTree {
  std::vector<Weight> weight;
  std::vector<std::vector<int>> adj;
  int minus_one = -1;  // marked (-1)-curve L, -1 if none
  int germ = -1;       // vertex met by the proper transform of the germ

  int add_vertex(Weight w) {
    weight.push_back(w);
    adj.emplace_back();
    return static_cast<int>(weight.size()) - 1;
  }
  void add_edge(int u, int v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  void remove_edge(int u, int v);

  int size() const { return static_cast<int>(weight.size()); }
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  bool empty() const { return weight.empty(); }
  bool has_edge(int u, int v) const;
  bool is_forest() const;   // acyclic
  bool is_connected() const;

  std::vector<std::vector<int>> components() const;
  // Component as a chain in path order, if it is one.
  std::optional<std::vector<int>> component_as_path(const std::vector<int>& comp) const;

  static WeightedTree from_chain(const Chain& c);
};

// d(T) = det(-Q(T)); product over components for a forest; d(0) = 1.
Int discriminant(const WeightedTree& t);

// Exact integer minor test (leading principal minors of -Q along a
// prefix-closed vertex order), never eigenvalues.
bool is_negative_definite(const WeightedTree& t);

// Iterated blow-downs of weight-1 vertices of degree <= 2 empty the graph.
// Agrees with is_negative_definite && discriminant == 1.
bool contracts_to_smooth_point(const WeightedTree& t);

// A maximal admissible twig, tip first, as vertex indices.
struct Twig {
  std::vector<int> vertices;
};

struct TwigDecomposition {
  std::vector<Twig> twigs;
  std::vector<int> residual;  // vertices in no twig
};

// Grows from every tip through weight >= 2 vertices of branching number 2.
// Throws unsupported_divisor if a component is swallowed whole (the
// decomposition is not well defined there).
TwigDecomposition maximal_admissible_twigs(const WeightedTree& t);
Chain twig_weights(const WeightedTree& t, const Twig& tw);

struct MinusTwoTwig {
  std::vector<int> vertices;  // tip first, all weight 2
  bool meets_minus_one = false;
};

// Maximal (-2)-twigs, each flagged by whether its inner end is adjacent to
// the marked (-1)-curve. Throws no_marked_minus_one.
std::vector<MinusTwoTwig> minus_two_twigs(const WeightedTree& t);

enum class InductanceMode { twigs, both_ends };

// twigs: sum of d(T-T_1)/d(T) over the maximal admissible twigs.
// both_ends: every component must be an admissible chain; sum of
// (d(T-T_1)+d(T-T_m)+2)/d(T).
Rat inductance_forest(const WeightedTree& t, InductanceMode mode);

// Text formats. A single tree parses from a chain literal "[2,1,3]", a
// one-branch fork "B(3){[2,3],[2],[3,1,2]}" (tip-first twigs, last entry
// adjacent to the branch), or adjacency entries "v:weight -> n1,n2" joined
// by ';'. A '*' after the weight marks the (-1)-curve. Forests join
// components with '|' (or one component per paragraph in fixture files).
WeightedTree parse_tree(std::string_view s);
WeightedTree parse_forest(std::string_view s);
WeightedTree parse_forest_file(const std::string& path);
std::string tree_str(const WeightedTree& t);  // chain/fork form when possible

} // namespace rcc
