#include "rcc/tree.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>

#include "rcc/errors.hpp"

namespace rcc {

void WeightedTree::remove_edge(int u, int v) {
  auto& au = adj[u];
  au.erase(std::find(au.begin(), au.end(), v));
  auto& av = adj[v];
  av.erase(std::find(av.begin(), av.end(), u));
}

bool WeightedTree::has_edge(int u, int v) const {
  return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end();
}

bool WeightedTree::is_forest() const {
  size_t edges = 0;
  for (const auto& a : adj) edges += a.size();
  edges /= 2;
  return edges + components().size() == weight.size();
}

bool WeightedTree::is_connected() const {
  return empty() || components().size() == 1;
}

std::vector<std::vector<int>> WeightedTree::components() const {
  std::vector<int> comp(weight.size(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < size(); ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int u : adj[v])
        if (comp[u] < 0) {
          comp[u] = id;
          stack.push_back(u);
        }
    }
  }
  return out;
}

std::optional<std::vector<int>> WeightedTree::component_as_path(
    const std::vector<int>& comp) const {
  if (comp.size() == 1) return comp;
  int tip = -1;
  for (int v : comp) {
    if (degree(v) > 2) return std::nullopt;
    if (degree(v) == 1) tip = v;
  }
  if (tip < 0) return std::nullopt;  // cycle
  std::vector<int> path{tip};
  int prev = -1, cur = tip;
  while (true) {
    int next = -1;
    for (int u : adj[cur])
      if (u != prev) next = u;
    if (next < 0) break;
    path.push_back(next);
    prev = cur;
    cur = next;
  }
  if (path.size() != comp.size()) return std::nullopt;
  return path;
}

WeightedTree WeightedTree::from_chain(const Chain& c) {
  WeightedTree t;
  for (size_t i = 0; i < c.size(); ++i) {
    t.add_vertex(c[i]);
    if (i) t.add_edge(static_cast<int>(i) - 1, static_cast<int>(i));
  }
  return t;
}

namespace {

// Subtree discriminants by one bottom-up sweep. With subtree(v) the part of
// the component hanging below v, the one-point splice formula gives
//   f(v) = w_v * prod_c f(c) - sum_c prodch(c) * prod_{c' != c} f(c'),
// where prodch(v) = prod_c f(c) over the children of v. Arranging the
// vertices in post-order, every leading principal minor of -Q is a product
// of completed subtree discriminants, so -Q is positive definite exactly
// when all f(v) are positive.
struct ComponentSweep {
  Int d;
  bool all_positive;
};

ComponentSweep sweep_component(const WeightedTree& t, int root) {
  int n = t.size();
  std::vector<int> order, parent(static_cast<size_t>(n), -2), stack{root};
  parent[static_cast<size_t>(root)] = -1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int u : t.adj[v])
      if (parent[static_cast<size_t>(u)] == -2) {
        parent[static_cast<size_t>(u)] = v;
        stack.push_back(u);
      }
  }
  std::vector<Int> f(static_cast<size_t>(n)), prodch(static_cast<size_t>(n), 1);
  bool all_positive = true;
  std::vector<Int> pre, suf;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    std::vector<int> kids;
    for (int u : t.adj[v])
      if (u != parent[static_cast<size_t>(v)]) kids.push_back(u);
    Int prod = 1;
    for (int c : kids) prod *= f[static_cast<size_t>(c)];
    prodch[static_cast<size_t>(v)] = prod;
    Int corr = 0;
    if (!kids.empty()) {
      pre.assign(kids.size() + 1, 1);
      suf.assign(kids.size() + 1, 1);
      for (size_t i = 0; i < kids.size(); ++i)
        pre[i + 1] = pre[i] * f[static_cast<size_t>(kids[i])];
      for (size_t i = kids.size(); i-- > 0;)
        suf[i] = suf[i + 1] * f[static_cast<size_t>(kids[i])];
      for (size_t i = 0; i < kids.size(); ++i)
        corr += prodch[static_cast<size_t>(kids[i])] * pre[i] * suf[i + 1];
    }
    f[static_cast<size_t>(v)] = Int(t.weight[v]) * prod - corr;
    if (f[static_cast<size_t>(v)] <= 0) all_positive = false;
  }
  return {f[static_cast<size_t>(root)], all_positive};
}

// Induced subgraph on a vertex subset, preserving order of `keep`.
WeightedTree induced(const WeightedTree& t, const std::vector<int>& keep) {
  std::vector<int> idx(t.weight.size(), -1);
  WeightedTree s;
  for (int v : keep) idx[v] = s.add_vertex(t.weight[v]);
  for (int v : keep)
    for (int u : t.adj[v])
      if (idx[u] >= 0 && u < v) s.add_edge(idx[u], idx[v]);
  return s;
}

} // namespace

Int discriminant(const WeightedTree& t) {
  if (!t.is_forest()) throw malformed_forest("discriminant: graph has a cycle");
  Int d = 1;
  for (const auto& comp : t.components()) d *= sweep_component(t, comp.front()).d;
  return d;
}

bool is_negative_definite(const WeightedTree& t) {
  if (!t.is_forest()) throw malformed_forest("is_negative_definite: graph has a cycle");
  for (const auto& comp : t.components())
    if (!sweep_component(t, comp.front()).all_positive) return false;
  return true;
}

bool contracts_to_smooth_point(const WeightedTree& t) {
  if (!t.is_forest()) return false;
  std::vector<Weight> w = t.weight;
  std::vector<std::vector<int>> adj = t.adj;
  std::vector<char> alive(w.size(), 1);
  int remaining = t.size();
  auto drop = [&](std::vector<int>& a, int v) {
    a.erase(std::find(a.begin(), a.end(), v));
  };
  bool progress = true;
  while (remaining > 0 && progress) {
    progress = false;
    for (int v = 0; v < t.size(); ++v) {
      if (!alive[v] || w[v] != 1 || adj[v].size() > 2) continue;
      if (adj[v].size() == 2) {
        int a = adj[v][0], b = adj[v][1];
        drop(adj[a], v);
        drop(adj[b], v);
        --w[a];
        --w[b];
        adj[a].push_back(b);
        adj[b].push_back(a);
      } else if (adj[v].size() == 1) {
        int a = adj[v][0];
        drop(adj[a], v);
        --w[a];
      }
      adj[v].clear();
      alive[v] = 0;
      --remaining;
      progress = true;
      break;
    }
  }
  return remaining == 0;
}

namespace {

// Grow a twig from tip `v`: follow through branching number 2 while the
// predicate holds. Returns vertices tip first.
template <typename Pred>
std::vector<int> grow_twig(const WeightedTree& t, int v, Pred ok) {
  std::vector<int> tw;
  int prev = -1;
  while (v >= 0 && ok(v) && (prev < 0 ? t.degree(v) <= 1 : t.degree(v) == 2)) {
    tw.push_back(v);
    int next = -1;
    for (int u : t.adj[v])
      if (u != prev) next = u;
    prev = v;
    v = next;
  }
  return tw;
}

} // namespace

TwigDecomposition maximal_admissible_twigs(const WeightedTree& t) {
  // Works on any graph: the audit divisors carry an auxiliary curve meeting
  // the boundary twice, which closes a loop away from all twigs.
  TwigDecomposition out;
  std::vector<char> used(t.weight.size(), 0);
  for (const auto& comp : t.components()) {
    bool all_admissible = true;
    for (int v : comp)
      if (t.weight[v] < 2) all_admissible = false;
    if (all_admissible && t.component_as_path(comp))
      throw unsupported_divisor(
          "maximal twigs are not well defined on an admissible chain component " +
          tree_str(induced(t, comp)));
    for (int v : comp) {
      if (t.degree(v) > 1 || t.weight[v] < 2) continue;
      auto tw = grow_twig(t, v, [&](int u) { return t.weight[u] >= 2; });
      if (tw.empty()) continue;
      for (int u : tw) used[u] = 1;
      out.twigs.push_back(Twig{std::move(tw)});
    }
  }
  for (int v = 0; v < t.size(); ++v)
    if (!used[v]) out.residual.push_back(v);
  return out;
}

Chain twig_weights(const WeightedTree& t, const Twig& tw) {
  Chain c;
  for (int v : tw.vertices) c.push_back(t.weight[v]);
  return c;
}

std::vector<MinusTwoTwig> minus_two_twigs(const WeightedTree& t) {
  if (t.minus_one < 0)
    throw no_marked_minus_one("minus_two_twigs: no marked (-1)-curve");
  std::vector<MinusTwoTwig> out;
  for (int v = 0; v < t.size(); ++v) {
    if (t.degree(v) > 1 || t.weight[v] != 2) continue;
    auto tw = grow_twig(t, v, [&](int u) { return t.weight[u] == 2; });
    if (tw.empty()) continue;
    MinusTwoTwig m;
    m.meets_minus_one = t.has_edge(tw.back(), t.minus_one);
    m.vertices = std::move(tw);
    out.push_back(std::move(m));
  }
  return out;
}

Rat inductance_forest(const WeightedTree& t, InductanceMode mode) {
  Rat s(0);
  if (mode == InductanceMode::twigs) {
    for (const auto& tw : maximal_admissible_twigs(t).twigs)
      s += inductance_twig(twig_weights(t, tw));
    return s;
  }
  for (const auto& comp : t.components()) {
    auto path = t.component_as_path(comp);
    if (!path)
      throw not_admissible("both-ends inductance needs chain components");
    Chain c;
    for (int v : *path) c.push_back(t.weight[v]);
    s += inductance_both_ends(c);
  }
  return s;
}

// --------------------------------------------------------------------------
// text formats

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

WeightedTree tree_from_fork(std::string_view s) {
  // B(w){[...],[...],...}
  auto open = s.find('(');
  auto close = s.find(')');
  auto brace = s.find('{');
  if (open == std::string_view::npos || close == std::string_view::npos ||
      brace == std::string_view::npos || s.back() != '}')
    throw invalid_args("bad fork literal: " + std::string(s));
  Weight bw = 0;
  auto ws = s.substr(open + 1, close - open - 1);
  auto [p, ec] = std::from_chars(ws.data(), ws.data() + ws.size(), bw);
  if (ec != std::errc() || p != ws.data() + ws.size())
    throw invalid_args("bad branch weight in: " + std::string(s));
  WeightedTree t;
  int branch = t.add_vertex(bw);
  std::string_view body = s.substr(brace + 1, s.size() - brace - 2);
  size_t i = 0;
  while (i < body.size()) {
    auto lb = body.find('[', i);
    if (lb == std::string_view::npos) break;
    auto rb = body.find(']', lb);
    if (rb == std::string_view::npos) throw invalid_args("bad fork twig list");
    Chain tw = parse_chain(body.substr(lb, rb - lb + 1));
    int prev = -1;
    for (Weight w : tw) {  // tip first; last entry attaches to the branch
      int v = t.add_vertex(w);
      if (prev >= 0) t.add_edge(prev, v);
      prev = v;
    }
    if (prev >= 0) t.add_edge(prev, branch);
    i = rb + 1;
  }
  return t;
}

WeightedTree tree_from_adjacency(std::string_view s) {
  struct Entry {
    long long id;
    Weight w;
    bool star;
    std::vector<long long> nbrs;
  };
  std::vector<Entry> entries;
  size_t i = 0;
  while (i <= s.size()) {
    auto semi = s.find(';', i);
    std::string_view line = strip(s.substr(i, semi == std::string_view::npos
                                                  ? s.size() - i
                                                  : semi - i));
    i = semi == std::string_view::npos ? s.size() + 1 : semi + 1;
    if (line.empty()) continue;
    Entry e{0, 0, false, {}};
    auto colon = line.find(':');
    if (colon == std::string_view::npos)
      throw invalid_args("bad adjacency entry: " + std::string(line));
    auto ids = strip(line.substr(0, colon));
    if (std::from_chars(ids.data(), ids.data() + ids.size(), e.id).ec != std::errc())
      throw invalid_args("bad vertex id: " + std::string(line));
    auto rest = strip(line.substr(colon + 1));
    auto arrow = rest.find("->");
    std::string_view wpart = strip(arrow == std::string_view::npos ? rest : rest.substr(0, arrow));
    if (!wpart.empty() && wpart.back() == '*') {
      e.star = true;
      wpart = strip(wpart.substr(0, wpart.size() - 1));
    }
    if (std::from_chars(wpart.data(), wpart.data() + wpart.size(), e.w).ec != std::errc())
      throw invalid_args("bad weight: " + std::string(line));
    if (arrow != std::string_view::npos) {
      std::string_view ns = rest.substr(arrow + 2);
      size_t j = 0;
      while (j < ns.size()) {
        auto comma = ns.find(',', j);
        auto tok = strip(ns.substr(j, comma == std::string_view::npos ? ns.size() - j
                                                                      : comma - j));
        j = comma == std::string_view::npos ? ns.size() : comma + 1;
        if (tok.empty()) continue;
        long long n = 0;
        if (std::from_chars(tok.data(), tok.data() + tok.size(), n).ec != std::errc())
          throw invalid_args("bad neighbor id: " + std::string(tok));
        e.nbrs.push_back(n);
      }
    }
    entries.push_back(std::move(e));
  }
  WeightedTree t;
  std::vector<std::pair<long long, int>> ids;
  for (const auto& e : entries) {
    int v = t.add_vertex(e.w);
    if (e.star) {
      if (t.minus_one >= 0) throw invalid_args("two vertices marked with '*'");
      t.minus_one = v;
    }
    ids.emplace_back(e.id, v);
  }
  auto lookup = [&](long long id) {
    for (auto& [k, v] : ids)
      if (k == id) return v;
    throw invalid_args("neighbor id not declared: " + std::to_string(id));
  };
  for (size_t k = 0; k < entries.size(); ++k)
    for (long long n : entries[k].nbrs) {
      int u = ids[k].second, v = lookup(n);
      if (!t.has_edge(u, v)) t.add_edge(u, v);
    }
  return t;
}

void append_tree(WeightedTree& f, const WeightedTree& t) {
  int base = f.size();
  for (Weight w : t.weight) f.add_vertex(w);
  for (int v = 0; v < t.size(); ++v)
    for (int u : t.adj[v])
      if (u < v) f.add_edge(base + u, base + v);
  if (t.minus_one >= 0) {
    if (f.minus_one >= 0) throw invalid_args("two components mark a (-1)-curve");
    f.minus_one = base + t.minus_one;
  }
}

} // namespace

WeightedTree parse_tree(std::string_view s) {
  s = strip(s);
  if (s.empty()) return {};
  if (s.front() == '[') return WeightedTree::from_chain(parse_chain(s));
  if (s.front() == 'B') return tree_from_fork(s);
  return tree_from_adjacency(s);
}

WeightedTree parse_forest(std::string_view s) {
  WeightedTree f;
  size_t i = 0;
  while (i <= s.size()) {
    auto bar = s.find('|', i);
    auto part = strip(s.substr(i, bar == std::string_view::npos ? s.size() - i : bar - i));
    i = bar == std::string_view::npos ? s.size() + 1 : bar + 1;
    if (part.empty()) continue;
    append_tree(f, parse_tree(part));
  }
  return f;
}

WeightedTree parse_forest_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw malformed_forest("cannot open fixture " + path);
  WeightedTree f;
  std::string line, block;
  auto flush = [&] {
    if (block.empty()) return;
    append_tree(f, parse_tree(block));
    block.clear();
  };
  while (std::getline(in, line)) {
    std::string_view l = strip(line);
    if (!l.empty() && l.front() == '#') continue;
    if (l.empty() || l == "---") {
      flush();
      continue;
    }
    // chain / fork literals stand alone; adjacency lines accumulate
    if (l.front() == '[' || l.front() == 'B') {
      flush();
      append_tree(f, parse_tree(l));
    } else {
      if (!block.empty()) block += ';';
      block += std::string(l);
    }
  }
  flush();
  return f;
}

std::string tree_str(const WeightedTree& t) {
  if (t.empty()) return "[]";
  if (t.is_connected() && t.is_forest()) {
    auto comp = t.components().front();
    if (auto path = t.component_as_path(comp)) {
      Chain c;
      for (int v : *path) c.push_back(t.weight[v]);
      Chain rev(c.rbegin(), c.rend());
      return chain_str(std::max(c, rev));  // orientation-free display
    }
    std::vector<int> branches;
    for (int v : comp)
      if (t.degree(v) >= 3) branches.push_back(v);
    if (branches.size() == 1) {
      int b = branches.front();
      std::string out = "B(" + std::to_string(t.weight[b]) + "){";
      // twigs tip first, longest discriminant side first, L-twig last
      struct Arm { Chain c; bool has_one; };
      std::vector<Arm> arms;
      for (int start : t.adj[b]) {
        Chain c;
        bool has_one = false;
        int prev = b, v = start;
        while (v >= 0) {
          c.push_back(t.weight[v]);
          if (t.weight[v] == 1) has_one = true;
          int next = -1;
          for (int u : t.adj[v])
            if (u != prev) next = u;
          prev = v;
          v = next;
        }
        std::reverse(c.begin(), c.end());
        arms.push_back({std::move(c), has_one});
      }
      std::stable_sort(arms.begin(), arms.end(), [](const Arm& a, const Arm& b2) {
        if (a.has_one != b2.has_one) return !a.has_one;
        return discriminant(a.c) > discriminant(b2.c);
      });
      for (size_t i = 0; i < arms.size(); ++i) {
        if (i) out += ',';
        out += chain_str(arms[i].c);
      }
      return out + "}";
    }
  }
  // general adjacency form
  std::string out;
  for (int v = 0; v < t.size(); ++v) {
    if (v) out += "; ";
    out += std::to_string(v) + ":" + std::to_string(t.weight[v]);
    if (v == t.minus_one) out += '*';
    out += " ->";
    bool first = true;
    for (int u : t.adj[v]) {
      out += first ? " " : ",";
      out += std::to_string(u);
      first = false;
    }
  }
  return out;
}

} // namespace rcc
