#pragma once

#include <optional>
#include <string>

#include "fanok/rational.hpp"

namespace fanok {

/// Numeric data of a blowup X = Bl_C Y of a Picard-rank-1 Fano threefold Y
/// along a smooth curve C: ambient degree d = A^3, Fano index r (so
/// -K_Y = r*A), curve degree c = A.C, and the genus g of C.
struct BlowupGeometry {
  Rational d;
  Rational r;
  Rational c;
  long g = 0;

  BlowupGeometry(Rational d_, Rational r_, Rational c_, long g_);
};

/// Named geometry presets accepted by the CLI ("mori-mukai-2.23" is the
/// blowup of the smooth quadric threefold along a degree-4 elliptic curve).
std::optional<BlowupGeometry> geometry_preset(const std::string& name);

/// Divisor class a*piA + b*E in the rank-2 lattice of the blowup.
struct DivisorClass {
  Rational a;
  Rational b;

  friend bool operator==(const DivisorClass& x, const DivisorClass& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const DivisorClass& x, const DivisorClass& y) { return !(x == y); }
};

/// Curve class l*piL + f*fib, where fib is a ruling fiber of E and L a line
/// in the ambient threefold missing the blowup center.
struct CurveClass {
  Rational l;
  Rational f;
};

/// Triple intersection numbers in the {piA, E} basis. (piA)^2.E vanishes
/// identically because the blowup center is a curve.
struct TripleForm {
  Rational p3;   // (piA)^3
  Rational p2e;  // (piA)^2.E
  Rational pe2;  // piA.E^2
  Rational e3;   // E^3
};

/// Intersection table of the blowup:
///   (d, 0, -c, -(r*c + 2g - 2)),
/// with -E^3 the degree of the normal bundle of C computed by adjunction.
TripleForm triple_form(const BlowupGeometry& geom);

/// Full trilinear expansion of D1.D2.D3; symmetric in its arguments.
Rational triple_product(const TripleForm& t, const DivisorClass& d1, const DivisorClass& d2,
                        const DivisorClass& d3);

/// Bilinear pairing with matrix piA.piL = 1, piA.fib = 0, E.piL = 0,
/// E.fib = -1.
Rational curve_pairing(const DivisorClass& d, const CurveClass& c);

/// -K_X = r*piA - E.
DivisorClass anticanonical(const BlowupGeometry& geom);

}  // namespace fanok
