#include "rcc/chain.hpp"

#include <charconv>

#include "rcc/errors.hpp"

namespace rcc {

namespace {

// d' of [a_1,...,a_k] is d([a_2,...,a_k]); d'(0) = 0. Running the chain
// recurrence d = a_1 d' - d'' from the tail gives d and d' together.
std::pair<Int, Int> d_and_dprime(const Chain& t) {
  Int d = 1, dp = 0;
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    Int nd = Int(*it) * d - dp;
    dp = d;
    d = nd;
  }
  return {d, dp};
}

void require_admissible(const Chain& t, const char* what) {
  if (!is_admissible(t))
    throw not_admissible(std::string(what) + ": chain " + chain_str(t) +
                         " has a component of weight <= 1");
}

} // namespace

Int discriminant(const Chain& t) { return d_and_dprime(t).first; }

bool is_admissible(const Chain& t) {
  for (Weight a : t)
    if (a < 2) return false;
  return true;
}

std::vector<Rat> bark_chain(const Chain& t) {
  require_admissible(t, "bark");
  Int d = discriminant(t);
  std::vector<Rat> coef(t.size());
  for (size_t i = 0; i < t.size(); ++i) {
    Chain tail(t.begin() + static_cast<long>(i) + 1, t.end());
    coef[i] = Rat(discriminant(tail), d);
  }
  return coef;
}

Rat inductance_twig(const Chain& t) {
  require_admissible(t, "inductance");
  if (t.empty()) return Rat(0);
  auto [d, dp] = d_and_dprime(t);
  return Rat(dp, d);
}

Rat inductance_both_ends(const Chain& t) {
  require_admissible(t, "inductance");
  if (t.empty()) return Rat(0);
  Int d = discriminant(t);
  Chain head(t.begin() + 1, t.end());
  Chain tail(t.begin(), t.end() - 1);
  return Rat(discriminant(head) + discriminant(tail) + 2, d);
}

Rat delta_of(const std::vector<Chain>& chains) {
  Rat s(0);
  for (const Chain& c : chains) {
    require_admissible(c, "delta");
    s += Rat(1, discriminant(c));
  }
  return s;
}

Chain parse_chain(std::string_view s) {
  size_t i = 0;
  auto skip = [&] { while (i < s.size() && s[i] == ' ') ++i; };
  skip();
  if (i >= s.size() || s[i] != '[') throw invalid_args("chain literal must start with '['");
  ++i;
  Chain out;
  skip();
  while (i < s.size() && s[i] != ']') {
    Weight w = 0;
    auto [p, ec] = std::from_chars(s.data() + i, s.data() + s.size(), w);
    if (ec != std::errc()) throw invalid_args("bad chain literal: " + std::string(s));
    i = static_cast<size_t>(p - s.data());
    out.push_back(w);
    skip();
    if (i < s.size() && s[i] == ',') { ++i; skip(); }
  }
  if (i >= s.size() || s[i] != ']') throw invalid_args("unterminated chain literal");
  return out;
}

std::string chain_str(const Chain& t) {
  std::string s = "[";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(t[i]);
  }
  return s + "]";
}

} // namespace rcc
