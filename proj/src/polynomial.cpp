#include "isoball/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace isoball {

IntPolynomial::IntPolynomial(std::vector<std::string> variables) : vars_(std::move(variables)) {}

IntPolynomial IntPolynomial::constant(std::vector<std::string> variables, Integer value) {
  IntPolynomial p(std::move(variables));
  if (sgn(value) != 0) p.terms_.emplace(Monomial(p.vars_.size(), 0), std::move(value));
  return p;
}

IntPolynomial IntPolynomial::variable(std::vector<std::string> variables, unsigned index) {
  IntPolynomial p(std::move(variables));
  if (index >= p.vars_.size()) throw std::invalid_argument("IntPolynomial: variable index");
  Monomial mono(p.vars_.size(), 0);
  mono[index] = 1;
  p.terms_.emplace(std::move(mono), Integer(1));
  return p;
}

void IntPolynomial::add_term(Monomial mono, Integer coeff) {
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    if (sgn(coeff) != 0) terms_.emplace(std::move(mono), std::move(coeff));
    return;
  }
  it->second += coeff;
  if (sgn(it->second) == 0) terms_.erase(it);
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
  if (vars_ != other.vars_) throw std::invalid_argument("IntPolynomial: variable mismatch");
  IntPolynomial out = *this;
  for (const auto& [mono, coeff] : other.terms_) out.add_term(mono, coeff);
  return out;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& other) const {
  return *this + (-other);
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out(vars_);
  for (const auto& [mono, coeff] : terms_) out.terms_.emplace(mono, -coeff);
  return out;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
  if (vars_ != other.vars_) throw std::invalid_argument("IntPolynomial: variable mismatch");
  IntPolynomial out(vars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) {
      Monomial mono(vars_.size());
      for (std::size_t i = 0; i < vars_.size(); ++i) mono[i] = ma[i] + mb[i];
      out.add_term(std::move(mono), ca * cb);
    }
  return out;
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
  IntPolynomial out = constant(vars_, 1);
  IntPolynomial base = *this;
  while (e) {
    if (e & 1) out = out * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return out;
}

IntPolynomial IntPolynomial::shift_variable(unsigned index, const Integer& shift) const {
  if (index >= vars_.size()) throw std::invalid_argument("IntPolynomial: variable index");
  IntPolynomial out(vars_);
  for (const auto& [mono, coeff] : terms_) {
    const unsigned e = mono[index];
    // (x + shift)^e = sum_j C(e,j) shift^(e-j) x^j
    Integer sp(1);
    for (unsigned j = e;; --j) {
      Monomial m = mono;
      m[index] = j;
      out.add_term(std::move(m), coeff * binom(e, j) * sp);
      if (j == 0) break;
      sp *= shift;
    }
  }
  return out;
}

std::vector<IntPolynomial> IntPolynomial::coefficients_in(unsigned index) const {
  if (index >= vars_.size()) throw std::invalid_argument("IntPolynomial: variable index");
  std::vector<IntPolynomial> out(degree_in(index) + 1, IntPolynomial(vars_));
  for (const auto& [mono, coeff] : terms_) {
    Monomial m = mono;
    const unsigned d = m[index];
    m[index] = 0;
    out[d].add_term(std::move(m), coeff);
  }
  return out;
}

unsigned IntPolynomial::degree_in(unsigned index) const {
  unsigned d = 0;
  for (const auto& [mono, coeff] : terms_) {
    (void)coeff;
    d = std::max(d, mono[index]);
  }
  return d;
}

bool IntPolynomial::all_coefficients_nonnegative() const {
  for (const auto& [mono, coeff] : terms_) {
    (void)mono;
    if (sgn(coeff) < 0) return false;
  }
  return true;
}

Rational IntPolynomial::eval(const std::vector<Rational>& point) const {
  if (point.size() != vars_.size()) throw std::invalid_argument("IntPolynomial: point arity");
  Rational total(0);
  for (const auto& [mono, coeff] : terms_) {
    Rational term(coeff);
    for (std::size_t i = 0; i < vars_.size(); ++i)
      for (unsigned e = 0; e < mono[i]; ++e) term *= point[i];
    total += term;
  }
  return total;
}

std::string IntPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // print highest total degree first for readability
  std::vector<std::pair<Monomial, Integer>> items(terms_.begin(), terms_.end());
  std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
    unsigned dx = 0, dy = 0;
    for (auto e : x.first) dx += e;
    for (auto e : y.first) dy += e;
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  for (const auto& [mono, coeff] : items) {
    Integer c = coeff;
    if (first) {
      if (sgn(c) < 0) out << '-';
    } else {
      out << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    bool printed = false;
    bool is_const = true;
    for (auto e : mono)
      if (e) is_const = false;
    if (c != 1 || is_const) {
      out << c.get_str();
      printed = true;
    }
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (mono[i] == 0) continue;
      if (printed) out << '*';
      out << vars_[i];
      if (mono[i] > 1) out << '^' << mono[i];
      printed = true;
    }
  }
  return out.str();
}

}  // namespace isoball
