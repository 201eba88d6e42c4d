#pragma once

#include <map>
#include <set>
#include <string>

#include "fanok/rational.hpp"

namespace fanok {

/// Monomial of total degree <= 2 over integer variable ids:
/// (-1,-1) constant, (-1,v) linear, (u,v) with u <= v quadratic.
struct Mono {
  int u = -1;
  int v = -1;

  friend bool operator<(const Mono& a, const Mono& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  }
  friend bool operator==(const Mono& a, const Mono& b) { return a.u == b.u && a.v == b.v; }
};

/// Sparse polynomial of total degree <= 2 with exact rational coefficients.
/// Just enough structure for the bordered-matrix stabilizer systems: sums,
/// scalar multiples, products of linear factors, and substitution.
class QuadPoly {
public:
  QuadPoly() = default;

  static QuadPoly constant(const Rational& c);
  static QuadPoly var(int v);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Rational& coeff(const Mono& m) const;
  const std::map<Mono, Rational>& terms() const { return terms_; }
  std::set<int> variables() const;

  QuadPoly& operator+=(const QuadPoly& o);
  QuadPoly& operator-=(const QuadPoly& o);
  friend QuadPoly operator+(QuadPoly a, const QuadPoly& b) { return a += b; }
  friend QuadPoly operator-(QuadPoly a, const QuadPoly& b) { return a -= b; }
  friend QuadPoly operator*(const Rational& s, const QuadPoly& p);
  /// Product of two polynomials of degree <= 1 each.
  friend QuadPoly mul_linear(const QuadPoly& a, const QuadPoly& b);

  /// Polynomial with `v` replaced by an exact value.
  QuadPoly substituted(int v, const Rational& value) const;

  std::string str() const;

private:
  void add_term(const Mono& m, const Rational& c);
  std::map<Mono, Rational> terms_;
};

}  // namespace fanok
