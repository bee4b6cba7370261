#pragma once

// Scenario configuration, verification suites, threshold estimates and report emission.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "weylkk/kaluza.hpp"
#include "weylkk/numkit.hpp"

namespace weylkk::scenario {

enum class BackgroundKind {
  minkowski,
  schwarzschild,
  coulomb,
  constant_F,
  schwarzschild_coulomb,
  sphere_block,
  einstein_static,
};

enum class OutputFormat { csv, markdown };

std::string background_name(BackgroundKind k);
BackgroundKind parse_background(const std::string& s);
std::string format_name(OutputFormat f);
OutputFormat parse_format(const std::string& s);

struct ScenarioConfig {
  // [background]
  BackgroundKind background = BackgroundKind::minkowski;
  double r_s = 1.0;        // horizon radius in units of λ_C
  double charge_q = 0.3;   // Coulomb source strength
  double radius = 1.3;     // curvature radius of the sphere-block and Einstein-static charts
  Eigen::Matrix4d field = Eigen::Matrix4d::Zero();  // constant F_μν, set through f01..f23

  // [constants]
  double m_e = 1.0;
  double e = 0.3;
  double alpha = 7.2973525693e-3;

  // [numerics]
  numkit::DerivBackend backend{};
  std::uint64_t seed = 7;
  int points = 0;      // 0 selects the suite default
  double tol = 0.0;    // 0 selects the suite default
  int lattice = 16;    // sites per axis for lattice suites
  double spacing = 0.2;

  // [output]
  OutputFormat format = OutputFormat::csv;

  // scenario-specific
  double rs_meters = 0.0;
};

/// Parses the flat INI layout; unknown sections or keys raise UsageError.
ScenarioConfig parse_config(std::istream& in, ScenarioConfig base = {});
ScenarioConfig load_config(const std::string& path, ScenarioConfig base = {});

/// Canonical key = value text covering every field, in fixed order.
std::string canonical_text(const ScenarioConfig& cfg);
/// 64-bit FNV-1a of canonical_text.
std::uint64_t config_hash(const ScenarioConfig& cfg);
std::string hash_hex(std::uint64_t h);

kaluza::Background4 make_background(const ScenarioConfig& cfg);
kaluza::Background4 make_background(BackgroundKind kind, const ScenarioConfig& cfg);
/// Every background in the operator matrix.
std::vector<BackgroundKind> background_matrix();

/// Samples a space-time point inside the chart of the given background.
numkit::Point sample_point(BackgroundKind kind, const ScenarioConfig& cfg, std::uint64_t stream, int index);

// ---------------------------------------------------------------------------

struct ThresholdReport {
  double compton_m = 0.0;             // λ_C in metres
  double horizon = 0.0;               // r_S in units of λ_C
  double r_star_gravity = 0.0;        // λ_C^{2/3} r_S^{1/3}
  double r_star_gravity_solved = 0.0; // root of λ_C²·12r_S²/r⁶ = 1/λ_C²
  double r_star_em_quoted = 0.03;     // quoted value, units of λ_C
  double r_star_em_computed = 0.0;    // (e⁴)^{1/6}, units of λ_C
  double e_squared = 0.0;
};

inline constexpr double kComptonMeters = 3.8615926796e-13;  // ħ/(m_e c)

ThresholdReport thresholds(const ScenarioConfig& cfg);

// ---------------------------------------------------------------------------

struct Assertion {
  std::string name;
  double value = 0.0;
  double tol = 0.0;
  bool pass = false;
  bool diagnostic = false;  // reported but excluded from the exit status
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct SuiteReport {
  std::string suite;
  std::string scheme;
  double tol = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t hash = 0;
  Table table;
  std::vector<Assertion> assertions;
  std::vector<std::string> notes;

  bool pass() const;
  void check(const std::string& name, double value, double tol, bool diagnostic = false);
};

/// Suites: algebra, kk, madelung, weyl-gauge, reduce, operator-diff, curvature, spinor.
SuiteReport run_suite(const std::string& name, const ScenarioConfig& cfg);
const std::vector<std::string>& suite_names();

void write_report(std::ostream& os, const SuiteReport& r, OutputFormat f);
void write_thresholds(std::ostream& os, const ThresholdReport& t, const ScenarioConfig& cfg, OutputFormat f);

std::string fmt(double v);

}  // namespace weylkk::scenario
