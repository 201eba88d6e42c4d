#include "fanok/positivity.hpp"

#include "fanok/errors.hpp"

namespace fanok {

ConeSpec::ConeSpec(std::vector<CurveClass> curves_) : curves(std::move(curves_)) {
  if (curves.empty()) throw InputError("cone specification needs at least one curve class");
}

ConeSpec ConeSpec::default_cone() {
  return ConeSpec({CurveClass{Rational(0), Rational(1)}, CurveClass{Rational(1), Rational(0)}});
}

bool is_nef(const DivisorClass& d, const ConeSpec& cone) {
  for (const auto& c : cone.curves)
    if (curve_pairing(d, c).sign() < 0) return false;
  return true;
}

std::optional<Rational> nef_threshold(const DivisorPath& path, const ConeSpec& cone) {
  if (!is_nef(path.start, cone)) throw InputError("nef threshold: path(0) is not nef");
  std::optional<Rational> best;
  for (const auto& c : cone.curves) {
    // pairing along the path is pair(start, c) - t * pair(direction, c)
    const Rational slope = curve_pairing(path.direction, c);
    if (slope.sign() <= 0) continue;  // pairing never decreases: no bound
    const Rational bound = curve_pairing(path.start, c) / slope;
    if (!best || bound < *best) best = bound;
  }
  return best;
}

ZariskiPair zariski_decompose(const DivisorClass& d, const ConeSpec& cone) {
  if (d.a.sign() < 0)
    throw RegimeError(
        "path left the supported regime (negative part would not be supported on E)");
  if (is_nef(d, cone)) return ZariskiPair{d, DivisorClass{Rational(0), Rational(0)}};
  const ZariskiPair zp{DivisorClass{d.a, Rational(0)}, DivisorClass{Rational(0), d.b}};
  if (zp.negative.b.sign() <= 0 || !is_nef(zp.positive, cone))
    throw RegimeError(
        "path left the supported regime (negative part would not be supported on E)");
  return zp;
}

PiecewisePoly volume_path(const DivisorPath& path, const BlowupGeometry& geom,
                          const ConeSpec& cone) {
  const TripleForm form = triple_form(geom);
  const DivisorClass start = path.at(Rational(0));
  if (!is_nef(start, cone)) throw InputError("volume path: path(0) is not nef");
  if (triple_product(form, start, start, start).sign() <= 0)
    throw InputError("volume path: path(0) has nonpositive volume");

  // tau: zero of the positive part's piA-coefficient a(t) = a0 - t*da.
  if (path.direction.a.sign() <= 0)
    throw InputError("volume path: pseudoeffective threshold is unbounded along this path");
  const Rational tau = path.start.a / path.direction.a;
  if (tau.sign() <= 0) throw InputError("volume path: empty domain (tau <= 0)");

  const auto t1 = nef_threshold(path, cone);
  const Rational nef_end = (t1 && *t1 < tau) ? *t1 : tau;

  // Coordinates of the path as degree-1 polynomials in t.
  const Poly a_t{path.start.a, -path.direction.a};
  const Poly b_t{path.start.b, -path.direction.b};
  const Poly a2 = a_t * a_t, b2 = b_t * b_t;
  const Poly nef_cube = form.p3 * (a2 * a_t) + (Rational(3) * form.p2e) * (a2 * b_t) +
                        (Rational(3) * form.pe2) * (a_t * b2) + form.e3 * (b2 * b_t);

  std::vector<Rational> breaks;
  std::vector<Poly> pieces;
  breaks.push_back(Rational(0));
  if (nef_end.sign() > 0) {
    breaks.push_back(nef_end);
    pieces.push_back(nef_cube);
  }
  if (nef_end < tau) {
    // Past the nef threshold: volume of the Zariski positive part (a(t), 0).
    // Probe the decomposition once to confirm the regime is supported.
    zariski_decompose(path.at((nef_end + tau) / Rational(2)), cone);
    const Poly positive_cube = form.p3 * (a2 * a_t);
    if (!pieces.empty() && pieces.back().eval(nef_end) != positive_cube.eval(nef_end))
      throw RegimeError(
          "volume path: Zariski positive part disagrees with the nef volume at the threshold");
    breaks.push_back(tau);
    pieces.push_back(positive_cube);
  }
  return PiecewisePoly(std::move(breaks), std::move(pieces));
}

}  // namespace fanok
