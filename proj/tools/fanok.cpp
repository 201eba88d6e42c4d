#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fanok/errors.hpp"
#include "fanok/runs.hpp"

namespace {

using fanok::Rational;

Rational flag_rational(const std::string& text, const std::string& flag) {
  try {
    return Rational::parse(text);
  } catch (const fanok::ParseError&) {
    throw fanok::InputError("invalid " + flag + " value \"" + text +
                            "\" (expected an exact p or p/q)");
  }
}

std::pair<Rational, Rational> flag_pair(const std::string& text, const std::string& flag) {
  const auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
    throw fanok::InputError("invalid " + flag + " value \"" + text + "\" (expected a,b)");
  return {flag_rational(text.substr(0, comma), flag), flag_rational(text.substr(comma + 1), flag)};
}

std::vector<fanok::CurveClass> flag_cone(const std::string& text) {
  std::vector<fanok::CurveClass> curves;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const auto end = text.find(';', begin);
    const std::string part =
        end == std::string::npos ? text.substr(begin) : text.substr(begin, end - begin);
    const auto pair = flag_pair(part, "--cone");
    curves.push_back(fanok::CurveClass{pair.first, pair.second});
    if (end == std::string::npos) break;
    begin = end + 1;
  }
  return curves;
}

// Raw flag values; converted into a RunConfig after parsing so conversion
// errors map onto the documented exit codes.
struct Flags {
  std::string config_file;
  std::string preset;
  std::string d, r, c;
  long g = -1;
  bool g_set = false;
  std::string direction;
  std::string a{"1"};
  std::string cone;
  bool csv = false;
  std::string sample_step;
  bool aut_finite = false;
  std::string table;
  long b2 = 0, b3 = 0;
  bool b2_set = false, b3_set = false;
  std::string degree;
};

void add_geometry_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--preset", f.preset, "geometry preset name (e.g. mori-mukai-2.23)");
  cmd->add_option("--d", f.d, "ambient degree A^3 (exact rational)");
  cmd->add_option("--r", f.r, "Fano index of the ambient threefold");
  cmd->add_option("--c", f.c, "curve degree A.C");
  cmd->add_option("--g", f.g, "genus of the blown-up curve")->each([&f](const std::string&) {
    f.g_set = true;
  });
}

void add_path_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--direction", f.direction, "divisor direction a,b in the {piA, E} basis");
  cmd->add_option("--cone", f.cone, "cone curves as l,f pairs separated by ';'");
  cmd->add_flag("--csv", f.csv, "emit a CSV sampling of the volume function");
  cmd->add_option("--sample-step", f.sample_step, "CSV sampling step (exact rational)");
}

fanok::RunConfig build_config(const Flags& f) {
  fanok::RunConfig config;
  if (!f.preset.empty()) config.preset = f.preset;
  if (!f.d.empty()) config.d = flag_rational(f.d, "--d");
  if (!f.r.empty()) config.r = flag_rational(f.r, "--r");
  if (!f.c.empty()) config.c = flag_rational(f.c, "--c");
  if (f.g_set) config.g = f.g;
  if (!f.direction.empty()) config.direction = flag_pair(f.direction, "--direction");
  config.log_discrepancy = flag_rational(f.a, "--A");
  if (!f.cone.empty()) config.cone = flag_cone(f.cone);
  config.csv = f.csv;
  if (!f.sample_step.empty()) config.sample_step = flag_rational(f.sample_step, "--sample-step");
  config.aut_finite = f.aut_finite;
  if (!f.table.empty()) config.table_path = f.table;
  if (f.b2_set) config.b2 = f.b2;
  if (f.b3_set) config.b3 = f.b3;
  if (!f.degree.empty()) config.degree = flag_rational(f.degree, "--degree");
  if (!f.config_file.empty()) fanok::apply_config_file(config, f.config_file);
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact beta-invariant, automorphism and classification calculator for "
               "curve blowups of Fano threefolds"};
  app.require_subcommand(1);

  Flags beta_flags, volume_flags, aut_flags, classify_flags;

  CLI::App* beta = app.add_subcommand("beta", "beta invariant and K-stability verdict");
  add_geometry_flags(beta, beta_flags);
  add_path_flags(beta, beta_flags);
  beta->add_option("--A", beta_flags.a, "log discrepancy of the divisor (default 1)");
  beta->add_flag("--aut-finite", beta_flags.aut_finite,
                 "automorphism group known finite; completes the soliton exclusion");
  beta->add_option("--config", beta_flags.config_file, "JSON config file (flags override)");

  CLI::App* volume = app.add_subcommand("volume", "exact piecewise volume function only");
  add_geometry_flags(volume, volume_flags);
  add_path_flags(volume, volume_flags);
  volume->add_option("--config", volume_flags.config_file, "JSON config file (flags override)");

  CLI::App* aut = app.add_subcommand("aut", "automorphism finiteness computations for a pencil");
  aut->add_option("--preset", aut_flags.preset, "pencil preset: case1 or case2");
  aut->add_option("--config", aut_flags.config_file,
                  "JSON config file with an explicit pencil (FQ, FH, FQp)");

  CLI::App* classify = app.add_subcommand("classify", "invariant matching and the smooth-limit report");
  classify->add_option("--table", classify_flags.table, "CSV table of family invariants");
  classify->add_option("--b2", classify_flags.b2, "second Betti number")
      ->each([&classify_flags](const std::string&) { classify_flags.b2_set = true; });
  classify->add_option("--b3", classify_flags.b3, "third Betti number")
      ->each([&classify_flags](const std::string&) { classify_flags.b3_set = true; });
  classify->add_option("--degree", classify_flags.degree, "anticanonical degree (exact rational)");
  add_geometry_flags(classify, classify_flags);
  classify->add_option("--direction", classify_flags.direction,
                       "divisor direction for the verdict context");
  classify->add_option("--A", classify_flags.a, "log discrepancy for the verdict context");
  classify->add_option("--cone", classify_flags.cone, "cone curves for the verdict context");
  classify->add_flag("--aut-finite", classify_flags.aut_finite,
                     "automorphism group known finite; completes the soliton exclusion");
  classify->add_option("--config", classify_flags.config_file, "JSON config file (flags override)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (beta->parsed()) return fanok::run_beta(build_config(beta_flags), std::cout, std::cerr);
    if (volume->parsed())
      return fanok::run_volume(build_config(volume_flags), std::cout, std::cerr);
    if (aut->parsed()) {
      fanok::RunConfig config = build_config(aut_flags);
      if (config.preset) {
        auto preset = fanok::pencil_preset(*config.preset);
        if (!preset) throw fanok::InputError("unknown pencil preset \"" + *config.preset + "\"");
        config.pencil = std::move(preset);  // an explicit preset wins over a file pencil
        config.preset.reset();
      }
      return fanok::run_aut(config, std::cout, std::cerr);
    }
    if (classify->parsed())
      return fanok::run_classify(build_config(classify_flags), std::cout, std::cerr);
  } catch (const fanok::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 4;
  } catch (const fanok::RegimeError& e) {
    std::cerr << "regime error: " << e.what() << "\n";
    return 3;
  } catch (const fanok::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
