#include "fanok/geometry.hpp"

#include "fanok/errors.hpp"

namespace fanok {

BlowupGeometry::BlowupGeometry(Rational d_, Rational r_, Rational c_, long g_)
    : d(std::move(d_)), r(std::move(r_)), c(std::move(c_)), g(g_) {
  if (d.sign() <= 0) throw InputError("blowup geometry: d must be positive");
  if (r.sign() <= 0) throw InputError("blowup geometry: r must be positive");
  if (c.sign() < 0) throw InputError("blowup geometry: c must be nonnegative");
  if (g < 0) throw InputError("blowup geometry: genus must be nonnegative");
}

std::optional<BlowupGeometry> geometry_preset(const std::string& name) {
  if (name == "mori-mukai-2.23")
    return BlowupGeometry(Rational(2), Rational(3), Rational(4), 1);
  return std::nullopt;
}

TripleForm triple_form(const BlowupGeometry& geom) {
  // deg N_{C/Y} = -K_Y.C + 2g - 2 = r*c + 2g - 2; E^3 is its negative.
  const Rational normal_degree = geom.r * geom.c + Rational(2 * geom.g - 2);
  if (!normal_degree.is_integer())
    throw InputError("inconsistent geometry: r*c + 2g - 2 is not an integer");
  return TripleForm{geom.d, Rational(0), -geom.c, -normal_degree};
}

Rational triple_product(const TripleForm& t, const DivisorClass& d1, const DivisorClass& d2,
                        const DivisorClass& d3) {
  const Rational aab = d1.a * d2.a * d3.b + d1.a * d2.b * d3.a + d1.b * d2.a * d3.a;
  const Rational abb = d1.a * d2.b * d3.b + d1.b * d2.a * d3.b + d1.b * d2.b * d3.a;
  return t.p3 * (d1.a * d2.a * d3.a) + t.p2e * aab + t.pe2 * abb + t.e3 * (d1.b * d2.b * d3.b);
}

Rational curve_pairing(const DivisorClass& d, const CurveClass& c) {
  return d.a * c.l - d.b * c.f;
}

DivisorClass anticanonical(const BlowupGeometry& geom) {
  return DivisorClass{geom.r, Rational(-1)};
}

}  // namespace fanok
