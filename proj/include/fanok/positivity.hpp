#pragma once

#include <optional>
#include <vector>

#include "fanok/geometry.hpp"
#include "fanok/poly.hpp"

namespace fanok {

/// The affine divisor path t -> start - t*direction, with start the
/// anticanonical class.
struct DivisorPath {
  DivisorClass start;
  DivisorClass direction;

  DivisorClass at(const Rational& t) const {
    return DivisorClass{start.a - t * direction.a, start.b - t * direction.b};
  }
};

/// Finite list of curve classes assumed to generate the Mori cone. The
/// completeness of the list is an assumption, recorded in every report,
/// not a verified fact.
struct ConeSpec {
  std::vector<CurveClass> curves;

  explicit ConeSpec(std::vector<CurveClass> curves_);

  /// The default cone for blowup paths: {fib = (0,1), piL = (1,0)}.
  static ConeSpec default_cone();
};

/// True iff D pairs nonnegatively with every curve in the cone.
bool is_nef(const DivisorClass& d, const ConeSpec& cone);

/// Largest t >= 0 with path(t) nef: the minimum over cone curves of the
/// linear threshold where the pairing vanishes. Curves whose pairing never
/// decreases along the path impose no bound; if none does, the threshold
/// is unbounded (nullopt). Requires path(0) nef.
std::optional<Rational> nef_threshold(const DivisorPath& path, const ConeSpec& cone);

/// Zariski decomposition D = P + N in the rank-2 regime: P nef against the
/// cone, N a nonnegative multiple of E.
struct ZariskiPair {
  DivisorClass positive;
  DivisorClass negative;
};

/// For nef D returns (D, 0); otherwise P = (a, 0), N = (0, b). Paths whose
/// negative part would not be supported on E leave the supported regime.
ZariskiPair zariski_decompose(const DivisorClass& d, const ConeSpec& cone);

/// Exact volume function vol(path(t)) on [0, tau], where tau is the
/// pseudoeffective threshold, computed structurally as the zero of the
/// positive part's piA-coefficient. On the nef segment the volume is
/// path(t)^3; past the nef threshold it is the cube of the Zariski
/// positive part.
PiecewisePoly volume_path(const DivisorPath& path, const BlowupGeometry& geom,
                          const ConeSpec& cone);

}  // namespace fanok
