#include "fanok/rational.hpp"

#include <cctype>
#include <ostream>

#include "fanok/errors.hpp"

namespace fanok {

Rational::Rational(long num, long den) {
  if (den == 0) throw InputError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpq_class& v) : v_(v) {
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InputError("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(const std::string& text) {
  // Accepted grammar: '-'? digits ('/' digits)?  with a positive, nonzero
  // denominator. Anything else (spaces, '+', negative denominators) is
  // rejected so that parse(str()) is an exact round trip.
  const auto fail = [&]() -> Rational {
    throw ParseError("malformed rational literal: \"" + text + "\"");
  };
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  std::size_t num_begin = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == num_begin) return fail();
  std::string num = text.substr(0, i);
  std::string den = "1";
  if (i < text.size()) {
    if (text[i] != '/') return fail();
    ++i;
    std::size_t den_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == den_begin || i != text.size()) return fail();
    den = text.substr(den_begin);
  }
  mpq_class v;
  if (v.get_num().set_str(num, 10) != 0) return fail();
  if (v.get_den().set_str(den, 10) != 0) return fail();
  if (v.get_den() == 0) return fail();
  v.canonicalize();
  return Rational(v);
}

std::string Rational::str() const {
  std::string s = v_.get_num().get_str();
  if (v_.get_den() != 1) {
    s += "/";
    s += v_.get_den().get_str();
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace fanok
