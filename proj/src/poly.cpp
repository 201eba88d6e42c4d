#include "fanok/poly.hpp"

#include <sstream>

#include "fanok/errors.hpp"

namespace fanok {

Poly::Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) {
  normalize();
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  normalize();
}

void Poly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const Rational& c) {
  return Poly{c};
}

Poly Poly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1, Rational(0));
  v[k] = c;
  return Poly(std::move(v));
}

const Rational& Poly::coeff(std::size_t k) const {
  static const Rational zero(0);
  return k < c_.size() ? c_[k] : zero;
}

Rational Poly::eval(const Rational& t) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double Poly::eval_double(double t) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + it->to_double();
  return acc;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rational(static_cast<long>(k)) * c_[k];
  return Poly(std::move(d));
}

Rational Poly::integrate(const Rational& a, const Rational& b) const {
  if (a > b) throw InputError("integration bounds reversed (a > b)");
  // Term-wise antiderivative, evaluated exactly at both endpoints.
  std::vector<Rational> anti(c_.size() + 1, Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k)
    anti[k + 1] = c_[k] / Rational(static_cast<long>(k + 1));
  Poly F(std::move(anti));
  return F.eval(b) - F.eval(a);
}

Poly Poly::operator-() const {
  std::vector<Rational> v(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) v[k] = -c_[k];
  return Poly(std::move(v));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  normalize();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(v));
}

Poly operator*(const Rational& s, const Poly& p) {
  std::vector<Rational> v(p.c_.size());
  for (std::size_t k = 0; k < p.c_.size(); ++k) v[k] = s * p.c_[k];
  return Poly(std::move(v));
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (os.tellp() > 0) os << " + ";
    os << c_[k].str();
    if (k >= 1) os << "*t";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

namespace {

// Remainder of a by b over Q, with b nonzero.
Poly poly_rem(Poly a, const Poly& b) {
  const int db = b.degree();
  while (!a.is_zero() && a.degree() >= db) {
    const Rational q = a.coeff(a.degree()) / b.coeff(db);
    a -= q * (b * Poly::monomial(Rational(1), static_cast<std::size_t>(a.degree() - db)));
  }
  return a;
}

Poly make_monic(const Poly& p) {
  if (p.is_zero()) return p;
  return (Rational(1) / p.coeff(static_cast<std::size_t>(p.degree()))) * p;
}

}  // namespace

Poly poly_gcd(Poly a, Poly b) {
  a = make_monic(a);
  b = make_monic(b);
  while (!b.is_zero()) {
    Poly r = make_monic(poly_rem(a, b));
    a = b;
    b = r;
  }
  return a;
}

bool squarefree_check(const Poly& p) {
  if (p.is_zero()) throw InputError("squarefree check on the zero polynomial");
  return poly_gcd(p, p.derivative()).degree() <= 0;
}

PiecewisePoly::PiecewisePoly(std::vector<Rational> breakpoints, std::vector<Poly> pieces)
    : breaks_(std::move(breakpoints)), pieces_(std::move(pieces)) {
  if (breaks_.empty()) throw InputError("piecewise polynomial needs at least one breakpoint");
  if (pieces_.size() + 1 != breaks_.size())
    throw InputError("piecewise polynomial: piece count must be breakpoint count - 1");
  for (std::size_t i = 1; i < breaks_.size(); ++i)
    if (!(breaks_[i - 1] < breaks_[i]))
      throw InputError("piecewise polynomial: breakpoints must be strictly increasing");
  for (std::size_t i = 1; i < pieces_.size(); ++i)
    if (pieces_[i - 1].eval(breaks_[i]) != pieces_[i].eval(breaks_[i]))
      throw InputError("piecewise polynomial: adjacent pieces disagree at breakpoint t = " +
                       breaks_[i].str());
}

Rational PiecewisePoly::eval(const Rational& t) const {
  if (t < domain_start() || t > domain_end())
    throw InputError("piecewise evaluation outside domain at t = " + t.str());
  if (pieces_.empty())
    throw InputError("piecewise evaluation on a degenerate empty domain");
  for (std::size_t i = 0; i < pieces_.size(); ++i)
    if (t <= breaks_[i + 1]) return pieces_[i].eval(t);
  return pieces_.back().eval(t);
}

Rational PiecewisePoly::integrate() const {
  Rational total(0);
  for (std::size_t i = 0; i < pieces_.size(); ++i)
    total += pieces_[i].integrate(breaks_[i], breaks_[i + 1]);
  return total;
}

}  // namespace fanok
