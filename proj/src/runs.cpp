#include "fanok/runs.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "fanok/errors.hpp"
#include "fanok/reports.hpp"

namespace fanok {

namespace {

BlowupGeometry resolve_geometry(const RunConfig& config) {
  const bool has_explicit = config.d || config.r || config.c || config.g;
  if (config.preset && has_explicit)
    throw InputError("supply either a geometry preset or explicit d, r, c, g, not both");
  if (config.preset) {
    const auto geom = geometry_preset(*config.preset);
    if (!geom) throw InputError("unknown geometry preset \"" + *config.preset + "\"");
    return *geom;
  }
  if (!(config.d && config.r && config.c && config.g))
    throw InputError("geometry requires a preset or all of d, r, c, g");
  return BlowupGeometry(*config.d, *config.r, *config.c, *config.g);
}

ConeSpec resolve_cone(const RunConfig& config) {
  if (config.cone.empty()) return ConeSpec::default_cone();
  return ConeSpec(config.cone);
}

DivisorPath resolve_path(const RunConfig& config, const BlowupGeometry& geom) {
  if (!config.direction) throw InputError("a divisor direction (a,b) is required");
  return DivisorPath{anticanonical(geom),
                     DivisorClass{config.direction->first, config.direction->second}};
}

void write_volume_csv(const PiecewisePoly& vol, const Rational& step, std::ostream& out) {
  if (step.sign() <= 0) throw InputError("sample step must be positive");
  out << "t,vol,vol_approx\n";
  // vol_approx is a double and approximate; t and vol are exact.
  for (Rational t = vol.domain_start(); t <= vol.domain_end(); t += step) {
    const Rational v = vol.eval(t);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v.to_double());
    out << t.str() << "," << v.str() << "," << buf << "\n";
  }
}

int guarded(std::ostream& err, const std::function<void()>& body) {
  try {
    body();
    return 0;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 4;
  } catch (const RegimeError& e) {
    err << "regime error: " << e.what() << "\n";
    return 3;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  }
}

Rational config_rational(const nlohmann::json& j, const std::string& key) {
  if (!j.at(key).is_string())
    throw ParseError("config field \"" + key + "\" must be a rational string");
  return Rational::parse(j.at(key).get<std::string>());
}

Mat config_matrix(const nlohmann::json& rows) {
  if (!rows.is_array() || rows.empty()) throw ParseError("config matrix must be a nonempty array");
  const std::size_t n = rows.size();
  Mat m(n, rows.at(0).size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows.at(i);
    if (!row.is_array() || row.size() != m.cols())
      throw ParseError("config matrix rows must have equal length");
    for (std::size_t j = 0; j < m.cols(); ++j)
      m.at(i, j) = Rational::parse(row.at(j).get<std::string>());
  }
  return m;
}

}  // namespace

void apply_config_file(RunConfig& config, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file \"" + path + "\"");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("config file \"" + path + "\": " + e.what());
  }
  try {
    if (j.contains("preset") && !config.preset) config.preset = j["preset"].get<std::string>();
    if (j.contains("d") && !config.d) config.d = config_rational(j, "d");
    if (j.contains("r") && !config.r) config.r = config_rational(j, "r");
    if (j.contains("c") && !config.c) config.c = config_rational(j, "c");
    if (j.contains("g") && !config.g) config.g = j["g"].get<long>();
    if (j.contains("direction") && !config.direction) {
      const auto& d = j["direction"];
      if (!d.is_array() || d.size() != 2)
        throw ParseError("config field \"direction\" must be a pair");
      config.direction = {Rational::parse(d.at(0).get<std::string>()),
                          Rational::parse(d.at(1).get<std::string>())};
    }
    if (j.contains("A")) config.log_discrepancy = config_rational(j, "A");
    if (j.contains("cone") && config.cone.empty()) {
      for (const auto& pair : j["cone"]) {
        if (!pair.is_array() || pair.size() != 2)
          throw ParseError("config field \"cone\" must list pairs");
        config.cone.push_back(CurveClass{Rational::parse(pair.at(0).get<std::string>()),
                                         Rational::parse(pair.at(1).get<std::string>())});
      }
    }
    if (j.contains("pencil") && !config.pencil) {
      const auto& p = j["pencil"];
      std::vector<Rational> fh;
      for (const auto& entry : p.at("FH")) fh.push_back(Rational::parse(entry.get<std::string>()));
      config.pencil = PencilConfig(QForm(config_matrix(p.at("FQ"))), std::move(fh),
                                   QForm(config_matrix(p.at("FQp"))));
    }
    if (j.contains("table") && !config.table_path) config.table_path = j["table"].get<std::string>();
    if (j.contains("sampleStep") && !config.sample_step)
      config.sample_step = config_rational(j, "sampleStep");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("config file \"" + path + "\": " + e.what());
  }
}

int run_beta(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const BlowupGeometry geom = resolve_geometry(config);
    const ConeSpec cone = resolve_cone(config);
    const DivisorPath path = resolve_path(config, geom);
    BetaReport report = beta_report(geom, path, config.log_discrepancy, cone);
    if (config.aut_finite) report.verdict = verdict_chain({report}, true);
    if (config.csv) {
      if (!config.sample_step) throw InputError("--csv requires --sample-step");
      write_volume_csv(report.volume_pieces, *config.sample_step, out);
      return;
    }
    out << render(json_beta_report(report, config.preset));
  });
}

int run_volume(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const BlowupGeometry geom = resolve_geometry(config);
    const ConeSpec cone = resolve_cone(config);
    const DivisorPath path = resolve_path(config, geom);
    const PiecewisePoly vol = volume_path(path, geom, cone);
    if (config.csv) {
      if (!config.sample_step) throw InputError("--csv requires --sample-step");
      write_volume_csv(vol, *config.sample_step, out);
      return;
    }
    const auto t1 = nef_threshold(path, cone);
    const Rational tau = vol.domain_end();
    Json j = Json::object();
    j["geometry"] = json_geometry(geom, config.preset);
    j["divisor"] = Json::object();
    j["divisor"]["a"] = json_rational(path.direction.a);
    j["divisor"]["b"] = json_rational(path.direction.b);
    j["nefThreshold"] = json_rational(t1 && *t1 < tau ? *t1 : tau);
    j["pseudoeffectiveThreshold"] = json_rational(tau);
    j["volumePieces"] = json_piecewise(vol);
    out << render(j);
  });
}

int run_aut(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!config.pencil)
      throw InputError("the aut command needs a pencil (--preset case1|case2 or --config)");
    const AutSummary summary = analyze_pencil(*config.pencil);
    out << render(json_aut_summary(summary));
  });
}

int run_classify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!config.table_path) throw InputError("the classify command needs --table");
    if (!(config.b2 && config.b3 && config.degree))
      throw InputError("the classify command needs --b2, --b3 and --degree");
    std::ifstream in(*config.table_path);
    if (!in) throw InputError("cannot open table file \"" + *config.table_path + "\"");
    const auto table = load_table(in);
    const auto matches = match_invariants(table, *config.b2, *config.b3, *config.degree);

    StabilityVerdict verdict;
    if (config.preset || config.d) {
      const BlowupGeometry geom = resolve_geometry(config);
      const ConeSpec cone = resolve_cone(config);
      const DivisorPath path = resolve_path(config, geom);
      const BetaReport report = beta_report(geom, path, config.log_discrepancy, cone);
      verdict = verdict_chain({report}, config.aut_finite);
    } else {
      verdict.notes.push_back("no stability evidence supplied for the matched families");
    }
    out << render(json_classify_report(matches, verdict, smooth_limit_report(matches, verdict)));
  });
}

}  // namespace fanok
