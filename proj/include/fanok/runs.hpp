#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fanok/autforms.hpp"
#include "fanok/classify.hpp"
#include "fanok/stability.hpp"

namespace fanok {

/// Everything one CLI invocation needs. Populated from flags, optionally
/// on top of a JSON config file (flags override file values).
struct RunConfig {
  // geometry: exactly one of preset / explicit (d, r, c, g)
  std::optional<std::string> preset;
  std::optional<Rational> d, r, c;
  std::optional<long> g;

  std::optional<std::pair<Rational, Rational>> direction;
  Rational log_discrepancy = Rational(1);
  std::vector<CurveClass> cone;  // empty = default cone {f, piL}

  std::optional<PencilConfig> pencil;

  std::optional<std::string> table_path;
  std::optional<long> b2, b3;
  std::optional<Rational> degree;

  bool csv = false;
  std::optional<Rational> sample_step;
  bool aut_finite = false;
};

/// Loads config-file values into `config` (fields already set keep their
/// values, so flags win).
void apply_config_file(RunConfig& config, const std::string& path);

/// Exit codes: 0 success, 2 input error, 3 regime error, 4 parse error.
int run_beta(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_volume(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_aut(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_classify(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace fanok
