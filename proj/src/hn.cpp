#include "rcc/hn.hpp"

#include <algorithm>
#include <numeric>

#include "rcc/errors.hpp"

namespace rcc {

namespace {

constexpr long long kMaxExpansionSteps = 1 << 20;

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

void check_positive(long long c, long long p) {
  if (c < 1 || p < 1)
    throw invalid_pair("pair entries must be positive, got (" + std::to_string(c) +
                       "," + std::to_string(p) + ")");
}

void require_standard(const HNSeq& s) {
  if (auto v = validate(s)) throw non_standard(*v);
}

// b^-: the pair leaves a (-2)-tip on the side with discriminant p.
int b_minus(long long c, long long p) {
  long long m = c % p;
  return (m > 0 && p >= 2 * m) ? 1 : 0;
}

// b^+: likewise on the side with discriminant c.
int b_plus(long long c, long long p) {
  long long m = p % c;
  return (m > 0 && c >= 2 * m) ? 1 : 0;
}

long long lambda_plus(long long c, long long p) {
  return euclid_steps(c, p) - b_plus(c, p);
}

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

} // namespace

long long euclid_steps(long long c, long long p) {
  check_positive(c, p);
  long long a = std::max(c, p), b = std::min(c, p), steps = 0;
  while (b > 0) {
    long long q = a / b, r = a % b;
    steps += q;
    a = b;
    b = r;
  }
  return steps;
}

HNSeq parse_seq(std::string_view s) {
  HNSeq out;
  size_t i = 0;
  auto skip = [&] { while (i < s.size() && s[i] == ' ') ++i; };
  skip();
  while (i < s.size()) {
    if (s[i] != '(') throw invalid_args("expected '(' in pair sequence: " + std::string(s));
    auto comma = s.find(',', i);
    auto close = s.find(')', i);
    if (comma == std::string_view::npos || close == std::string_view::npos || comma > close)
      throw invalid_args("bad pair in sequence: " + std::string(s));
    try {
      long long c = std::stoll(std::string(s.substr(i + 1, comma - i - 1)));
      long long p = std::stoll(std::string(s.substr(comma + 1, close - comma - 1)));
      out.push_back({c, p});
    } catch (const std::exception&) {
      throw invalid_args("bad pair in sequence: " + std::string(s));
    }
    i = close + 1;
    skip();
  }
  if (out.empty()) throw invalid_args("empty pair sequence");
  return out;
}

std::string seq_str(const HNSeq& s) {
  std::string out;
  for (const auto& [c, p] : s)
    out += "(" + std::to_string(c) + "," + std::to_string(p) + ")";
  return out;
}

std::optional<std::string> validate(const HNSeq& s) {
  if (s.empty()) return "sequence is empty";
  size_t h = s.size();
  for (const auto& [c, p] : s)
    if (c < 1 || p < 1) return "entries must be positive in " + seq_str(s);
  for (size_t k = 0; k + 1 < h; ++k) {
    long long g = gcd_ll(s[k].c, s[k].p);
    if (g != s[k + 1].c)
      return "gcd(" + std::to_string(s[k].c) + "," + std::to_string(s[k].p) + ")=" +
             std::to_string(g) + " but c(" + std::to_string(k + 2) + ")=" +
             std::to_string(s[k + 1].c);
  }
  if (gcd_ll(s[h - 1].c, s[h - 1].p) != 1)
    return "gcd(" + std::to_string(s[h - 1].c) + "," + std::to_string(s[h - 1].p) +
           ") must be 1 for the last pair";
  if (s[0].c <= s[0].p)
    return "first pair needs c > p, got " + seq_str({s[0]});
  if (s[0].p < 2) return "first pair needs p >= 2, got " + seq_str({s[0]});
  for (size_t k = 1; k < h; ++k)
    if (s[k].c == s[k].p)
      return "pair " + std::to_string(k + 1) + " has c = p";
  // Structural constraints: every intermediate (-1)-curve must be a
  // non-tip, or the next pair fails to create a branching component and the
  // sequence is not the one recovered from its own expansion.
  if (h > 1 && s[0].p == s[1].c)
    return "p(1) = c(2): the first pair would leave its (-1)-curve at a tip";
  for (size_t k = 1; k < h; ++k) {
    long long next = (k + 1 < h) ? s[k + 1].c : 1;
    if (s[k].c == next)
      return "c(" + std::to_string(k + 1) + ") = c(" + std::to_string(k + 2) +
             "): pair " + std::to_string(k + 1) +
             " would leave its (-1)-curve at a tip";
  }
  return std::nullopt;
}

Expansion expand_full(const HNSeq& s) {
  require_standard(s);
  long long total = 0;
  for (const auto& [c, p] : s) {
    total += euclid_steps(c, p);
    if (total > kMaxExpansionSteps)
      throw invalid_pair("expansion of " + seq_str(s) + " is too large");
  }
  Expansion ex;
  WeightedTree& t = ex.tree;
  int on = -1;          // curve currently carrying the germ alone
  long long chi = 0;    // its intersection with the germ
  for (size_t k = 0; k < s.size(); ++k) {
    long long a = s[k].c, b = s[k].p;
    int sa = -1, sb = -1;
    if (k > 0) {
      sa = on;  // germ sits on the previous (-1)-curve with multiplicity c
      if (chi != a)
        throw non_standard("pair " + std::to_string(k + 1) + " does not match gcd chain");
    }
    while (true) {
      long long mu = std::min(a, b);
      int e = t.add_vertex(1);
      int real = 0;
      if (sa >= 0) { ++t.weight[sa]; t.add_edge(e, sa); ++real; }
      if (sb >= 0) { ++t.weight[sb]; t.add_edge(e, sb); ++real; }
      if (sa >= 0 && sb >= 0) t.remove_edge(sa, sb);
      if (real == 1) ++ex.outer_blowups;
      a -= mu;
      b -= mu;
      if (a > 0) {
        sb = e;
        b = mu;
      } else if (b > 0) {
        sa = e;
        a = mu;
      } else {
        on = e;
        chi = mu;
        break;
      }
    }
  }
  t.minus_one = on;
  t.germ = on;
  return ex;
}

WeightedTree expand(const HNSeq& s) { return expand_full(s).tree; }

Chain chain_of_pair(long long c, long long p) {
  check_positive(c, p);
  if (euclid_steps(c, p) > kMaxExpansionSteps)
    throw invalid_pair("pair too large to expand");
  long long g = gcd_ll(c, p);
  WeightedTree t;
  long long a = c, b = p;
  int sa = -1, sb = -1, on = -1;
  while (on < 0) {
    long long mu = std::min(a, b);
    int e = t.add_vertex(1);
    if (sa >= 0) { ++t.weight[sa]; t.add_edge(e, sa); }
    if (sb >= 0) { ++t.weight[sb]; t.add_edge(e, sb); }
    if (sa >= 0 && sb >= 0) t.remove_edge(sa, sb);
    a -= mu;
    b -= mu;
    if (a > 0) {
      sb = e;
      b = mu;
    } else if (b > 0) {
      sa = e;
      a = mu;
    } else {
      on = e;
    }
  }
  auto path = t.component_as_path(t.components().front());
  Chain out;
  size_t pos = 0;
  for (size_t i = 0; i < path->size(); ++i) {
    out.push_back(t.weight[(*path)[i]]);
    if ((*path)[i] == on) pos = i;
  }
  // orient with the side of discriminant p/gcd first
  Chain left(out.begin(), out.begin() + static_cast<long>(pos));
  if (discriminant(left) != Int(p / g)) std::reverse(out.begin(), out.end());
  return out;
}

HNSeq pairs_from_tree(const WeightedTree& t) {
  if (!contracts_to_smooth_point(t))
    throw not_contractible("divisor does not contract to a smooth point");
  std::vector<int> ones;
  for (int v = 0; v < t.size(); ++v)
    if (t.weight[v] == 1) ones.push_back(v);
  if (ones.size() > 1) throw multiple_minus_ones("more than one (-1)-curve");
  if (ones.empty()) throw not_contractible("no (-1)-curve");

  WeightedTree cur = t;
  int L = ones.front();
  HNSeq pairs;
  while (true) {
    bool has_branch = false;
    for (int v = 0; v < cur.size(); ++v)
      if (cur.degree(v) >= 3) has_branch = true;
    // walk away from L through branching number <= 2; stops either at a
    // tip (stopped_at = -1) or just before a branching vertex
    struct Walk {
      Chain weights;
      std::vector<int> verts;
      int stopped_at = -1;
    };
    auto walk = [&](int from) {
      Walk w;
      int prev = L, v = from;
      while (v >= 0 && cur.degree(v) <= 2) {
        w.verts.push_back(v);
        w.weights.push_back(cur.weight[v]);
        int next = -1;
        for (int u : cur.adj[v])
          if (u != prev) next = u;
        prev = v;
        v = next;
      }
      w.stopped_at = v;
      return w;
    };
    Walk w1, w2;
    if (cur.degree(L) >= 1) w1 = walk(cur.adj[L][0]);
    if (cur.degree(L) >= 2) w2 = walk(cur.adj[L][1]);
    if (!has_branch) {
      // chain case: C is the side of larger discriminant
      Int d1 = discriminant(w1.weights), d2 = discriminant(w2.weights);
      if (d1 < d2) std::swap(d1, d2);
      pairs.push_back({static_cast<long long>(d1), static_cast<long long>(d2)});
      break;
    }
    // L lies inside a twig hanging from a branching vertex: the side that
    // hits it is P, the side ending at a tip is C
    if ((w1.stopped_at >= 0) == (w2.stopped_at >= 0))
      throw non_standard("(-1)-curve is not inside a twig");
    if (w1.stopped_at < 0) std::swap(w1, w2);
    const Walk& pw = w1;
    const Walk& cw = w2;
    int bvertex = pw.stopped_at;
    const Chain& pside = pw.weights;
    const Chain& cside = cw.weights;
    const std::vector<int>& pverts = pw.verts;
    const std::vector<int>& cverts = cw.verts;
    long long c = static_cast<long long>(discriminant(cside));
    long long p = static_cast<long long>(discriminant(pside));
    pairs.push_back({c, p});
    // contract the twig (P + L + C) onto the branch vertex
    std::vector<int> twig = pverts;
    twig.push_back(L);
    twig.insert(twig.end(), cverts.begin(), cverts.end());
    std::vector<char> in_twig(cur.weight.size(), 0);
    for (int v : twig) in_twig[v] = 1;
    std::vector<char> alive(cur.weight.size(), 1);
    int remaining = static_cast<int>(twig.size());
    while (remaining > 0) {
      bool progress = false;
      for (int v : twig) {
        if (!alive[v] || cur.weight[v] != 1 || cur.degree(v) > 2) continue;
        std::vector<int> nb = cur.adj[v];
        for (int u : nb) cur.remove_edge(v, u);
        for (int u : nb) --cur.weight[u];
        if (nb.size() == 2) cur.add_edge(nb[0], nb[1]);
        alive[v] = 0;
        --remaining;
        progress = true;
        break;
      }
      if (!progress) throw non_standard("twig does not contract");
    }
    if (cur.weight[bvertex] != 1)
      throw non_standard("branch vertex not a (-1)-curve after contraction");
    // rebuild without dead vertices
    std::vector<int> keep;
    for (int v = 0; v < cur.size(); ++v)
      if (alive[v]) keep.push_back(v);
    WeightedTree next;
    std::vector<int> idx(cur.weight.size(), -1);
    for (int v : keep) idx[v] = next.add_vertex(cur.weight[v]);
    for (int v : keep)
      for (int u : cur.adj[v])
        if (idx[u] >= 0 && u < v) next.add_edge(idx[u], idx[v]);
    L = idx[bvertex];
    cur = std::move(next);
  }
  // pairs were collected last-first; unscale: outer levels are multiplied
  // by the discriminant c of every later pair
  std::reverse(pairs.begin(), pairs.end());
  HNSeq out(pairs.size());
  long long scale = 1;
  for (size_t k = pairs.size(); k-- > 0;) {
    out[k] = {pairs[k].c * scale, pairs[k].p * scale};
    scale *= pairs[k].c;
  }
  return out;
}

Rat ind_formula(const HNSeq& s) {
  require_standard(s);
  Rat acc = Rat(1) - Rat(s[0].c % s[0].p, s[0].p);
  for (const auto& [c, p] : s) acc += Rat(1) - Rat(p % c, c);
  return acc;
}

long long r_formula(const HNSeq& s) {
  require_standard(s);
  long long r = ceil_div(s[0].c, s[0].p) - 1;
  for (size_t k = 1; k < s.size(); ++k) r += ceil_div(s[k].p, s[k].c);
  return r;
}

long long b0_delta_formula(const HNSeq& s) {
  require_standard(s);
  long long b = b_minus(s[0].c, s[0].p);
  for (const auto& [c, p] : s) b += b_plus(c, p);
  return b;
}

int s_formula(const HNSeq& s) {
  require_standard(s);
  if (s.size() > 1) return s.back().p % s.back().c == 1 ? 1 : 0;
  return s[0].c % s[0].p == 1 ? 1 : 0;
}

long long lambda_formula(const HNSeq& s) {
  require_standard(s);
  long long acc = -b_minus(s[0].c, s[0].p);
  for (const auto& [c, p] : s) acc += lambda_plus(c, p);
  if (s.size() == 1 && s[0].c == 3 && s[0].p == 2) acc -= 1;
  return acc;
}

Int M_of(const HNSeq& s) {
  require_standard(s);
  Int m = Int(s[0].c) - 1;
  for (const auto& [c, p] : s) m += p;
  return m;
}

Int I_of(const HNSeq& s) {
  require_standard(s);
  Int i = 0;
  for (const auto& [c, p] : s) i += Int(c) * Int(p);
  return i;
}

std::vector<long long> mult_sequence(const HNSeq& s) {
  require_standard(s);
  std::vector<long long> mu;
  for (const auto& [c, p] : s) {
    long long a = std::max(c, p), b = std::min(c, p);
    while (b > 0) {
      long long q = a / b, r = a % b;
      for (long long i = 0; i < q; ++i) mu.push_back(b);
      a = b;
      b = r;
    }
  }
  return mu;
}

long long tau_of(const HNSeq& s) {
  auto mu = mult_sequence(s);
  long long tau = 0;
  for (auto it = mu.rbegin(); it != mu.rend() && *it == 1; ++it) ++tau;
  return tau;
}

bool is_semi_ordinary(const HNSeq& s) {
  require_standard(s);
  return s.size() == 1 && s[0].p == 2;
}

std::pair<long long, Rat> delta_minus_info(const HNSeq& s) {
  if (is_semi_ordinary(s)) return {0, Rat(0)};
  WeightedTree t = expand(s);
  long long b0 = 0;
  Rat delta(0);
  for (const auto& tw : minus_two_twigs(t)) {
    if (tw.meets_minus_one) continue;
    ++b0;
    delta += Rat(1, static_cast<long long>(tw.vertices.size()) + 1);
  }
  return {b0, delta};
}

Rat nu(long long lambda) {
  if (lambda < 1) throw invalid_args("nu needs lambda >= 1");
  switch (lambda) {
    case 1: return Rat(5, 6);
    case 2: return Rat(11, 10);
    case 3: return Rat(11, 12);
    default: return Rat(1, lambda - 1) + Rat(lambda - 2, 2 * lambda - 3);
  }
}

CuspType CuspType::make(const HNSeq& s) {
  CuspType c;
  c.seq = s;
  c.lambda = lambda_formula(s);
  c.ind = ind_formula(s);
  c.M = M_of(s);
  c.I = I_of(s);
  c.r = r_formula(s);
  c.s = s_formula(s);
  c.multiplicities = mult_sequence(s);
  c.tau = tau_of(s);
  c.tau_star = c.tau - c.s - 1;
  c.b0_delta = b0_delta_formula(s);
  c.semi_ordinary = is_semi_ordinary(s);
  auto [b0m, dm] = delta_minus_info(s);
  c.b0_delta_minus = b0m;
  c.delta_minus = dm;
  return c;
}

bool seq_less(const HNSeq& a, const HNSeq& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

} // namespace rcc
