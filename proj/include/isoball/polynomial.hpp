#ifndef ISOBALL_POLYNOMIAL_HPP
#define ISOBALL_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "isoball/exactmath.hpp"

namespace isoball {

// Exact multivariate polynomial with integer coefficients over a fixed,
// ordered list of named variables. Terms are kept in a sorted map keyed by
// exponent vectors, so representation is canonical and equality is
// structural.
class IntPolynomial {
 public:
  using Monomial = std::vector<unsigned>;  // exponent per variable

  explicit IntPolynomial(std::vector<std::string> variables);

  static IntPolynomial constant(std::vector<std::string> variables, Integer value);
  static IntPolynomial variable(std::vector<std::string> variables, unsigned index);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<Monomial, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  IntPolynomial operator+(const IntPolynomial& other) const;
  IntPolynomial operator-(const IntPolynomial& other) const;
  IntPolynomial operator*(const IntPolynomial& other) const;
  IntPolynomial operator-() const;
  IntPolynomial pow(unsigned e) const;

  bool operator==(const IntPolynomial& other) const = default;

  // substitute variables[index] := variables[index] + shift
  IntPolynomial shift_variable(unsigned index, const Integer& shift) const;

  // view as a univariate polynomial in variables[index]: result[d] is the
  // coefficient polynomial of variables[index]^d (with that exponent zeroed)
  std::vector<IntPolynomial> coefficients_in(unsigned index) const;

  unsigned degree_in(unsigned index) const;
  bool all_coefficients_nonnegative() const;
  Rational eval(const std::vector<Rational>& point) const;
  std::string to_string() const;

 private:
  void add_term(Monomial mono, Integer coeff);

  std::vector<std::string> vars_;
  std::map<Monomial, Integer> terms_;
};

}  // namespace isoball

#endif
