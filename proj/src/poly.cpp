#include "rcc/poly.hpp"

#include <algorithm>

#include "rcc/errors.hpp"

namespace rcc {

namespace {

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

void IntPolynomial::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

IntPolynomial IntPolynomial::constant(Int c) {
  IntPolynomial p;
  if (c != 0) p.terms_[{}] = std::move(c);
  return p;
}

IntPolynomial IntPolynomial::variable(const std::string& name) {
  IntPolynomial p;
  p.vars_ = {name};
  p.terms_[{1}] = 1;
  return p;
}

IntPolynomial IntPolynomial::monomial(Int c, const std::map<std::string, int>& exps) {
  IntPolynomial p = constant(std::move(c));
  for (const auto& [v, e] : exps) p = p * variable(v).pow(e);
  return p;
}

IntPolynomial IntPolynomial::on_vars(const std::vector<std::string>& vars) const {
  IntPolynomial out;
  out.vars_ = vars;
  std::vector<int> where(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    where[i] = static_cast<int>(it - vars.begin());
  }
  for (const auto& [exp, c] : terms_) {
    std::vector<int> e(vars.size(), 0);
    for (size_t i = 0; i < exp.size(); ++i) e[static_cast<size_t>(where[i])] = exp[i];
    out.terms_[e] += c;
  }
  out.prune();
  return out;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  auto vars = merge_vars(vars_, o.vars_);
  IntPolynomial a = on_vars(vars), b = o.on_vars(vars);
  for (const auto& [e, c] : b.terms_) a.terms_[e] += c;
  a.prune();
  return a;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  auto vars = merge_vars(vars_, o.vars_);
  IntPolynomial a = on_vars(vars), b = o.on_vars(vars);
  for (const auto& [e, c] : b.terms_) a.terms_[e] -= c;
  a.prune();
  return a;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  auto vars = merge_vars(vars_, o.vars_);
  IntPolynomial a = on_vars(vars), b = o.on_vars(vars), out;
  out.vars_ = vars;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<int> e(vars.size());
      for (size_t i = 0; i < vars.size(); ++i) e[i] = ea[i] + eb[i];
      out.terms_[e] += ca * cb;
    }
  out.prune();
  return out;
}

IntPolynomial IntPolynomial::pow(int e) const {
  if (e < 0) throw invalid_args("negative exponent");
  IntPolynomial acc = constant(1);
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

IntPolynomial IntPolynomial::derivative(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return {};
  size_t idx = static_cast<size_t>(it - vars_.begin());
  IntPolynomial out;
  out.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    std::vector<int> d = e;
    --d[idx];
    out.terms_[d] += c * e[idx];
  }
  out.prune();
  return out;
}

Int IntPolynomial::evaluate(const std::map<std::string, Int>& point) const {
  Int acc = 0;
  for (const auto& [e, c] : terms_) {
    Int term = c;
    for (size_t i = 0; i < vars_.size(); ++i) {
      auto it = point.find(vars_[i]);
      if (it == point.end()) throw missing_variable("no value for " + vars_[i]);
      for (int k = 0; k < e[i]; ++k) term *= it->second;
    }
    acc += term;
  }
  return acc;
}

bool IntPolynomial::operator==(const IntPolynomial& o) const {
  auto vars = merge_vars(vars_, o.vars_);
  return on_vars(vars).terms_ == o.on_vars(vars).terms_;
}

std::string IntPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    Int a = abs(c);
    bool has_var = std::any_of(e.begin(), e.end(), [](int x) { return x > 0; });
    if (a != 1 || !has_var) out += a.str();
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      out += vars_[i];
      if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
  }
  return out;
}

IntPolynomial IntPolynomial::compose(
    const std::map<std::string, IntPolynomial>& subst) const {
  for (size_t i = 0; i < vars_.size(); ++i) {
    bool used = false;
    for (const auto& [e, c] : terms_)
      if (e[i] > 0) used = true;
    if (used && !subst.count(vars_[i]))
      throw missing_variable("no substitution for variable " + vars_[i]);
  }
  IntPolynomial acc;
  for (const auto& [e, c] : terms_) {
    IntPolynomial term = constant(c);
    for (size_t i = 0; i < vars_.size(); ++i)
      if (e[i] > 0) term = term * subst.at(vars_[i]).pow(e[i]);
    acc = acc + term;
  }
  return acc;
}

namespace {

IntPolynomial quintic_from_lead(Int lead) {
  auto X = IntPolynomial::variable("x");
  auto Y = IntPolynomial::variable("y");
  auto Z = IntPolynomial::variable("z");
  auto C = [](long long v) { return IntPolynomial::constant(Int(v)); };
  return IntPolynomial::constant(std::move(lead)) * X.pow(5) +
         C(18) * X.pow(3) * Y * Z - C(2) * X.pow(2) * Y.pow(3) -
         X.pow(2) * Z.pow(3) + C(2) * X * Y.pow(2) * Z.pow(2) - Y.pow(4) * Z;
}

bool quintic_checks(const IntPolynomial& f) {
  auto phi = quintic_parameterization();
  IntPolynomial pullback =
      f.compose({{"x", phi[0]}, {"y", phi[1]}, {"z", phi[2]}});
  if (!pullback.is_zero()) return false;
  // the image of [0:1] is [0:0:1]; the curve must be singular there
  std::map<std::string, Int> q{{"x", 0}, {"y", 0}, {"z", 1}};
  return f.evaluate(q) == 0 && f.derivative("x").evaluate(q) == 0 &&
         f.derivative("y").evaluate(q) == 0 && f.derivative("z").evaluate(q) == 0;
}

} // namespace

IntPolynomial quartic_cusp_quintic() { return quintic_from_lead(27); }

std::vector<IntPolynomial> quintic_parameterization() {
  auto S = IntPolynomial::variable("s");
  auto T = IntPolynomial::variable("t");
  auto C2 = IntPolynomial::constant(2);
  return {S.pow(4) * T, S.pow(2) * T.pow(3) - S.pow(5),
          T.pow(5) + C2 * S.pow(3) * T.pow(2)};
}

bool verify_quintic() { return quintic_checks(quartic_cusp_quintic()); }

bool verify_quintic_perturbed_control() {
  return quintic_checks(quintic_from_lead(28));
}

} // namespace rcc
