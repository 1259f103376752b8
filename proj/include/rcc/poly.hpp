#pragma once

#include <map>
#include <string>
#include <vector>

#include "rcc/rational.hpp"

namespace rcc {

// Sparse multivariate polynomial with arbitrary-precision integer
// coefficients in named variables. Canonical form: variables sorted by
// name, terms keyed by exponent vector, zero coefficients dropped.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  static IntPolynomial constant(Int c);
  static IntPolynomial variable(const std::string& name);
  static IntPolynomial monomial(Int c, const std::map<std::string, int>& exps);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<std::string>& variables() const { return vars_; }

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial pow(int e) const;
  IntPolynomial derivative(const std::string& var) const;
  Int evaluate(const std::map<std::string, Int>& point) const;

  bool operator==(const IntPolynomial& o) const;
  std::string str() const;

  // Exact composition: every variable occurring in *this must be mapped.
  // Throws missing_variable.
  IntPolynomial compose(const std::map<std::string, IntPolynomial>& subst) const;

 private:
  std::vector<std::string> vars_;
  std::map<std::vector<int>, Int> terms_;

  IntPolynomial on_vars(const std::vector<std::string>& vars) const;
  void prune();
};

// The four-cusp quintic and its parameterization.
IntPolynomial quartic_cusp_quintic();              // F(x,y,z)
std::vector<IntPolynomial> quintic_parameterization();  // [x,y,z] in s,t

// F composed with the parameterization vanishes identically and F is
// singular at the image of [0:1] (= [0:0:1]).
bool verify_quintic();
// Control: with the leading coefficient perturbed the check must fail.
bool verify_quintic_perturbed_control();

} // namespace rcc
