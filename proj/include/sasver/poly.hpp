#pragma once

#include "sasver/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sasver::alg {

/// Multivariate polynomial with Rational coefficients over named variables.
///
/// Identity checking is subtract-then-zero-test; no polynomial division or
/// GCD is involved anywhere. Canonical invariants: no zero coefficient is
/// stored, the variable list is sorted, and every listed variable occurs with
/// a positive exponent in some term (unused variables are dropped), so equal
/// polynomials compare equal structurally.
class Poly {
public:
  using Exponents = std::vector<std::uint32_t>;

  Poly() = default;  // zero polynomial

  static Poly constant(Rational c);
  static Poly constant(long long c) { return constant(Rational(c)); }
  /// Named variable. Accepted names: c, a, alpha, Vol, IA, IV, Vsq,
  /// s<i>, s<i>_<j>, and indexed coordinate/component symbols x<i>, y<i>,
  /// z<i>, w<i>; anything else throws std::invalid_argument.
  static Poly var(const std::string& name);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial; throws std::logic_error otherwise.
  Rational constant_value() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator*(const Rational& c, const Poly& p) { return p.scaled(c); }
  friend Poly operator*(const Poly& p, const Rational& c) { return p.scaled(c); }
  friend Poly operator+(const Poly& p, const Rational& c) { return p + constant(c); }
  friend Poly operator+(const Rational& c, const Poly& p) { return p + constant(c); }
  friend Poly operator-(const Poly& p, const Rational& c) { return p - constant(c); }
  friend Poly operator-(const Rational& c, const Poly& p) { return constant(c) - p; }

  Poly scaled(const Rational& c) const;
  Poly pow(unsigned e) const;
  /// Exact polynomial division; throws std::domain_error if `den` is zero
  /// or does not divide this polynomial exactly.
  Poly divided_by_exact(const Poly& den) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Evaluates with every variable bound; an unbound variable throws
  /// std::invalid_argument naming the missing symbol.
  Rational eval(const std::map<std::string, Rational>& binding) const;

  /// Floating-point evaluation; same binding rules as eval.
  double eval_double(const std::map<std::string, double>& binding) const;

  /// Replaces one variable by a polynomial, exactly.
  Poly substitute(const std::string& name, const Poly& replacement) const;

  /// Formal partial derivative.
  Poly derivative(const std::string& name) const;

  const std::vector<std::string>& variables() const { return vars_; }
  unsigned total_degree() const;
  std::size_t term_count() const { return terms_.size(); }

  /// Coefficient of the monomial given as {variable: exponent} (variables
  /// absent from the map are taken to exponent 0).
  Rational coefficient(const std::map<std::string, unsigned>& monomial) const;

  /// Canonical text: terms by descending total degree, ties broken by the
  /// exponent vector (descending, variables in sorted name order);
  /// coefficients printed as p or p/q. The zero polynomial prints "0".
  std::string str() const;

private:
  Poly(std::vector<std::string> vars, std::map<Exponents, Rational> terms)
      : vars_(std::move(vars)), terms_(std::move(terms)) {}

  void prune();

  std::vector<std::string> vars_;          // sorted, all used
  std::map<Exponents, Rational> terms_;    // keys have size vars_.size()
};

}  // namespace sasver::alg
