#pragma once

#include <string>
#include <vector>

#include "fanok/positivity.hpp"

namespace fanok {

/// Existence claims are only ever excluded, never asserted.
enum class Claim { No, Unknown };

inline const char* claim_str(Claim c) { return c == Claim::No ? "no" : "unknown"; }

/// Verdict chain: beta < 0 => divisorially unstable => K-unstable => no
/// Kahler-Einstein metric; combined with automorphism finiteness this also
/// rules out Kahler-Ricci solitons. Only these implication directions are
/// implemented.
struct StabilityVerdict {
  bool divisorially_unstable = false;
  bool k_unstable = false;
  Claim admits_ke = Claim::Unknown;
  Claim admits_krs = Claim::Unknown;
  std::vector<std::string> notes;
};

/// Full audit record of one beta computation.
struct BetaReport {
  BlowupGeometry geometry;
  DivisorClass divisor;                 // the direction divisor D
  Rational log_discrepancy;             // A_X(D)
  Rational anticanonical_volume;        // V = (-K_X)^3
  Rational nef_threshold;
  Rational pseudoeffective_threshold;   // tau
  PiecewisePoly volume_pieces;          // vol(-K_X - t*D) on [0, tau]
  Rational s_value;                     // S = (1/V) * integral of the volume
  Rational beta;                        // A - S
  ConeSpec cone_assumption;
  StabilityVerdict verdict;
};

/// S = (1/V) * piecewise integral of vol; requires V > 0.
Rational s_value(const PiecewisePoly& vol, const Rational& v);

/// Runs the full pipeline for one divisor path: anticanonical volume,
/// exact piecewise volume function, S, beta = A - S, and the verdict the
/// single computation supports. A is the log discrepancy of the divisor,
/// supplied by the caller (1 for a prime divisor on X itself).
BetaReport beta_report(const BlowupGeometry& geom, const DivisorPath& path, const Rational& a,
                       const ConeSpec& cone);

/// Combines beta evidence with automorphism finiteness into the final
/// verdict: any beta < 0 gives divisorial instability, hence K-instability
/// and no Kahler-Einstein metric; with finite automorphisms additionally
/// no Kahler-Ricci soliton.
StabilityVerdict verdict_chain(const std::vector<BetaReport>& betas, bool aut_finite);

}  // namespace fanok
