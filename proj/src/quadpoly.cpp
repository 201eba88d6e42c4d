#include "fanok/quadpoly.hpp"

#include <sstream>

#include "fanok/errors.hpp"

namespace fanok {

QuadPoly QuadPoly::constant(const Rational& c) {
  QuadPoly p;
  p.add_term(Mono{-1, -1}, c);
  return p;
}

QuadPoly QuadPoly::var(int v) {
  QuadPoly p;
  p.add_term(Mono{-1, v}, Rational(1));
  return p;
}

bool QuadPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{-1, -1});
}

const Rational& QuadPoly::coeff(const Mono& m) const {
  static const Rational zero(0);
  auto it = terms_.find(m);
  return it == terms_.end() ? zero : it->second;
}

std::set<int> QuadPoly::variables() const {
  std::set<int> vars;
  for (const auto& [m, c] : terms_) {
    if (m.u >= 0) vars.insert(m.u);
    if (m.v >= 0) vars.insert(m.v);
  }
  return vars;
}

void QuadPoly::add_term(const Mono& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QuadPoly& QuadPoly::operator+=(const QuadPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

QuadPoly& QuadPoly::operator-=(const QuadPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

QuadPoly operator*(const Rational& s, const QuadPoly& p) {
  QuadPoly r;
  if (s.is_zero()) return r;
  for (const auto& [m, c] : p.terms_) r.terms_.emplace(m, s * c);
  return r;
}

QuadPoly mul_linear(const QuadPoly& a, const QuadPoly& b) {
  QuadPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    if (ma.u >= 0) throw InputError("mul_linear: left factor has degree 2");
    for (const auto& [mb, cb] : b.terms_) {
      if (mb.u >= 0) throw InputError("mul_linear: right factor has degree 2");
      Mono m;
      if (ma.v < 0) {
        m = mb;
      } else if (mb.v < 0) {
        m = ma;
      } else {
        m = ma.v <= mb.v ? Mono{ma.v, mb.v} : Mono{mb.v, ma.v};
      }
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

QuadPoly QuadPoly::substituted(int v, const Rational& value) const {
  QuadPoly r;
  for (const auto& [m, c] : terms_) {
    if (m.u == v && m.v == v) {
      r.add_term(Mono{-1, -1}, c * value * value);
    } else if (m.u == v) {
      r.add_term(Mono{-1, m.v}, c * value);
    } else if (m.v == v && m.u >= 0) {
      r.add_term(Mono{-1, m.u}, c * value);
    } else if (m.v == v) {
      r.add_term(Mono{-1, -1}, c * value);
    } else {
      r.add_term(m, c);
    }
  }
  return r;
}

std::string QuadPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    if (m.v >= 0) os << "*x" << m.v;
    if (m.u >= 0) os << "*x" << m.u;
  }
  return os.str();
}

}  // namespace fanok
