#include "fanok/reports.hpp"

namespace fanok {

Json json_rational(const Rational& r) {
  return r.str();
}

Json json_geometry(const BlowupGeometry& geom, const std::optional<std::string>& preset) {
  Json j = Json::object();
  if (preset) j["preset"] = *preset;
  j["d"] = json_rational(geom.d);
  j["r"] = json_rational(geom.r);
  j["c"] = json_rational(geom.c);
  j["g"] = geom.g;
  return j;
}

Json json_piecewise(const PiecewisePoly& p) {
  Json breaks = Json::array();
  for (const auto& b : p.breakpoints()) breaks.push_back(json_rational(b));
  Json pieces = Json::array();
  for (const auto& piece : p.pieces()) {
    Json coeffs = Json::array();
    for (const auto& c : piece.coeffs()) coeffs.push_back(json_rational(c));
    pieces.push_back(coeffs);
  }
  Json j = Json::object();
  j["breakpoints"] = std::move(breaks);
  j["pieces"] = std::move(pieces);
  return j;
}

Json json_verdict(const StabilityVerdict& verdict) {
  Json j = Json::object();
  j["divisoriallyUnstable"] = verdict.divisorially_unstable;
  j["kUnstable"] = verdict.k_unstable;
  j["admitsKE"] = claim_str(verdict.admits_ke);
  j["admitsKRS"] = claim_str(verdict.admits_krs);
  j["notes"] = verdict.notes;
  return j;
}

namespace {

Json json_cone(const ConeSpec& cone) {
  Json curves = Json::array();
  for (const auto& c : cone.curves)
    curves.push_back(Json::array({json_rational(c.l), json_rational(c.f)}));
  Json j = Json::object();
  j["curves"] = std::move(curves);
  j["note"] = "curve list assumed to generate the Mori cone; completeness not verified";
  return j;
}

Json json_matrix(const Mat& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(json_rational(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json json_beta_report(const BetaReport& report, const std::optional<std::string>& preset) {
  Json j = Json::object();
  j["geometry"] = json_geometry(report.geometry, preset);
  j["divisor"] = Json::object();
  j["divisor"]["a"] = json_rational(report.divisor.a);
  j["divisor"]["b"] = json_rational(report.divisor.b);
  j["logDiscrepancy"] = json_rational(report.log_discrepancy);
  j["anticanonicalVolume"] = json_rational(report.anticanonical_volume);
  j["nefThreshold"] = json_rational(report.nef_threshold);
  j["pseudoeffectiveThreshold"] = json_rational(report.pseudoeffective_threshold);
  j["volumePieces"] = json_piecewise(report.volume_pieces);
  j["sValue"] = json_rational(report.s_value);
  j["beta"] = json_rational(report.beta);
  j["coneAssumption"] = json_cone(report.cone_assumption);
  j["verdict"] = json_verdict(report.verdict);
  return j;
}

Json json_aut_summary(const AutSummary& summary) {
  Json j = Json::object();
  j["lie_dim"] = summary.lie_dim;
  if (summary.kerh_case) j["kerH_case"] = *summary.kerh_case;
  if (summary.kerh_order) j["kerH_order"] = *summary.kerh_order;
  if (summary.simdiag) j["simdiag"] = *summary.simdiag;
  if (summary.normalized_restricted)
    j["traceNormalizedRestriction"] = json_matrix(summary.normalized_restricted->matrix());
  if (summary.stabilizer_order) j["restrictedStabilizerOrder"] = *summary.stabilizer_order;
  j["finite"] = summary.aut_finite;
  j["notes"] = summary.notes;
  return j;
}

Json json_classify_report(const std::vector<std::string>& matches,
                          const StabilityVerdict& verdict, const std::string& conclusion) {
  Json j = Json::object();
  j["matches"] = matches;
  j["verdict"] = json_verdict(verdict);
  j["conclusion"] = conclusion;
  return j;
}

std::string render(const Json& j) {
  return j.dump(2) + "\n";
}

}  // namespace fanok
