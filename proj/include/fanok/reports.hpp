#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "fanok/autforms.hpp"
#include "fanok/classify.hpp"
#include "fanok/stability.hpp"

namespace fanok {

/// JSON report builders. All rationals are emitted as exact "p/q" strings;
/// keys appear in the fixed documented order, so identical inputs produce
/// identical bytes.
using Json = nlohmann::ordered_json;

Json json_rational(const Rational& r);
Json json_geometry(const BlowupGeometry& geom, const std::optional<std::string>& preset);
Json json_piecewise(const PiecewisePoly& p);
Json json_verdict(const StabilityVerdict& verdict);
Json json_beta_report(const BetaReport& report, const std::optional<std::string>& preset);
Json json_aut_summary(const AutSummary& summary);
Json json_classify_report(const std::vector<std::string>& matches,
                          const StabilityVerdict& verdict, const std::string& conclusion);

std::string render(const Json& j);

}  // namespace fanok
