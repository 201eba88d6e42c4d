#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "fanok/rational.hpp"

namespace fanok {

/// Univariate polynomial over exact rationals. Coefficients are stored
/// constant term first; the leading coefficient is nonzero unless the
/// polynomial is zero (empty coefficient list).
class Poly {
public:
  Poly() = default;  // the zero polynomial
  Poly(std::initializer_list<Rational> coeffs);
  explicit Poly(std::vector<Rational> coeffs);

  static Poly constant(const Rational& c);
  /// c * t^k
  static Poly monomial(const Rational& c, std::size_t k);

  bool is_zero() const { return c_.empty(); }
  /// Degree, with deg 0 for nonzero constants; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Coefficient of t^k (zero beyond the degree).
  const Rational& coeff(std::size_t k) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational eval(const Rational& t) const;
  double eval_double(double t) const;

  Poly derivative() const;
  /// Exact definite integral over [a, b]; requires a <= b.
  Rational integrate(const Rational& a, const Rational& b) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string str() const;

private:
  void normalize();
  std::vector<Rational> c_;
};

/// Monic gcd over the rationals (Euclidean scheme with per-step monic
/// normalization); gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

/// True iff gcd(p, p') is constant, i.e. p has no repeated roots.
/// The zero polynomial is rejected.
bool squarefree_check(const Poly& p);

/// Piecewise polynomial with strictly increasing rational breakpoints
/// t_0 < ... < t_k; piece i is valid on the closed interval [t_i, t_{i+1}].
/// Adjacent pieces must agree exactly at shared breakpoints.
class PiecewisePoly {
public:
  /// Degenerate single-breakpoint domain [t_0, t_0] with no pieces.
  PiecewisePoly() : breaks_{Rational(0)} {}
  PiecewisePoly(std::vector<Rational> breakpoints, std::vector<Poly> pieces);

  std::size_t piece_count() const { return pieces_.size(); }
  const std::vector<Rational>& breakpoints() const { return breaks_; }
  const std::vector<Poly>& pieces() const { return pieces_; }
  const Poly& piece(std::size_t i) const { return pieces_.at(i); }

  const Rational& domain_start() const { return breaks_.front(); }
  const Rational& domain_end() const { return breaks_.back(); }

  /// Exact evaluation; t must lie in the domain. At interior breakpoints
  /// both pieces agree by construction.
  Rational eval(const Rational& t) const;

  /// Sum of the exact integrals of the pieces over their intervals.
  Rational integrate() const;

private:
  std::vector<Rational> breaks_;
  std::vector<Poly> pieces_;
};

}  // namespace fanok
