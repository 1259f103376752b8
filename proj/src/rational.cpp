#include "rcc/rational.hpp"

#include <stdexcept>

namespace rcc {

std::string rat_str(const Rat& r) {
  std::string s = num(r).str();
  if (den(r) != 1) {
    s += '/';
    s += den(r).str();
  }
  return s;
}

Rat parse_rat(std::string_view s) {
  auto plus = s.find('+');
  if (plus != std::string_view::npos && plus > 0) {
    return parse_rat(s.substr(0, plus)) + parse_rat(s.substr(plus + 1));
  }
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rat(Int(std::string(s)));
    Int p{std::string(s.substr(0, slash))};
    Int q{std::string(s.substr(slash + 1))};
    if (q == 0) throw std::invalid_argument("zero denominator");
    return Rat(p, q);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: " + std::string(s));
  }
}

} // namespace rcc
