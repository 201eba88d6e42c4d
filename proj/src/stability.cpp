#include "fanok/stability.hpp"

#include "fanok/errors.hpp"

namespace fanok {

Rational s_value(const PiecewisePoly& vol, const Rational& v) {
  if (v.sign() <= 0) throw InputError("s value: anticanonical volume must be positive");
  return vol.integrate() / v;
}

namespace {

StabilityVerdict single_beta_verdict(const Rational& beta) {
  StabilityVerdict verdict;
  if (beta.sign() < 0) {
    verdict.divisorially_unstable = true;
    verdict.k_unstable = true;
    verdict.admits_ke = Claim::No;
    verdict.notes = {
        "beta < 0 for a divisorial valuation: divisorially unstable",
        "divisorially unstable implies K-unstable (Fujita-Li valuation criterion)",
        "K-unstable implies no Kahler-Einstein metric (Yau-Tian-Donaldson)",
        "soliton exclusion needs automorphism finiteness; combine with the aut report",
    };
  } else {
    verdict.notes = {"beta >= 0 for this divisor: no instability evidence from this valuation"};
  }
  return verdict;
}

}  // namespace

BetaReport beta_report(const BlowupGeometry& geom, const DivisorPath& path, const Rational& a,
                       const ConeSpec& cone) {
  if (a.sign() <= 0) throw InputError("beta: log discrepancy must be positive");
  const DivisorClass k = anticanonical(geom);
  if (path.start != k)
    throw InputError("beta: divisor path must start at the anticanonical class");
  const TripleForm form = triple_form(geom);
  const Rational volume = triple_product(form, k, k, k);
  if (volume.sign() <= 0) throw InputError("beta: anticanonical volume is not positive");

  const PiecewisePoly vol = volume_path(path, geom, cone);
  const Rational tau = vol.domain_end();
  const auto t1 = nef_threshold(path, cone);
  const Rational nef_t = (t1 && *t1 < tau) ? *t1 : tau;

  const Rational s = s_value(vol, volume);
  const Rational beta = a - s;

  return BetaReport{geom,
                    path.direction,
                    a,
                    volume,
                    nef_t,
                    tau,
                    vol,
                    s,
                    beta,
                    cone,
                    single_beta_verdict(beta)};
}

StabilityVerdict verdict_chain(const std::vector<BetaReport>& betas, bool aut_finite) {
  StabilityVerdict verdict;
  for (const auto& report : betas)
    if (report.beta.sign() < 0) verdict.divisorially_unstable = true;
  if (betas.empty()) {
    verdict.notes.push_back("no beta evidence supplied");
    return verdict;
  }
  if (!verdict.divisorially_unstable) {
    verdict.notes.push_back("no divisor with beta < 0 among the supplied reports");
    return verdict;
  }
  verdict.k_unstable = true;
  verdict.admits_ke = Claim::No;
  verdict.notes = {
      "beta < 0 for a divisorial valuation: divisorially unstable",
      "divisorially unstable implies K-unstable (Fujita-Li valuation criterion)",
      "K-unstable implies no Kahler-Einstein metric (Yau-Tian-Donaldson)",
  };
  if (aut_finite) {
    verdict.admits_krs = Claim::No;
    verdict.notes.push_back(
        "finite automorphism group: every soliton vector field is trivial, so a soliton "
        "would be Kahler-Einstein; none exists");
  } else {
    verdict.notes.push_back(
        "soliton exclusion unavailable: automorphism finiteness not established");
  }
  return verdict;
}

}  // namespace fanok
