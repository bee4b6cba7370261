#include "weylkk/scenario.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "weylkk/errors.hpp"

namespace weylkk::scenario {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw UsageError("config key '" + key + "' expects a number, got '" + v + "'");
  }
}

long long to_int(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const long long i = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return i;
  } catch (const std::exception&) {
    throw UsageError("config key '" + key + "' expects an integer, got '" + v + "'");
  }
}

bool to_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw UsageError("config key '" + key + "' expects a boolean, got '" + v + "'");
}

const std::array<std::pair<const char*, std::pair<int, int>>, 6> kFieldKeys{{
    {"f01", {0, 1}}, {"f02", {0, 2}}, {"f03", {0, 3}}, {"f12", {1, 2}}, {"f13", {1, 3}}, {"f23", {2, 3}},
}};

void validate(const ScenarioConfig& c) {
  if (!(c.r_s > 0.0)) throw UsageError("r_s must be positive");
  if (!(c.radius > 0.0)) throw UsageError("radius must be positive");
  if (!(c.m_e > 0.0)) throw UsageError("m_e must be positive");
  if (!(c.backend.step > 0.0)) throw UsageError("step must be positive");
  if (c.tol < 0.0) throw UsageError("tolerances must be positive");
  if (c.points < 0) throw UsageError("points must be non-negative");
  if (c.lattice < 6) throw UsageError("lattice needs at least 6 sites per axis");
  if (!(c.spacing > 0.0)) throw UsageError("spacing must be positive");
  if (c.rs_meters < 0.0) throw UsageError("rs-meters must be positive");
}

}  // namespace

std::string background_name(BackgroundKind k) {
  switch (k) {
    case BackgroundKind::minkowski:
      return "minkowski";
    case BackgroundKind::schwarzschild:
      return "schwarzschild";
    case BackgroundKind::coulomb:
      return "coulomb";
    case BackgroundKind::constant_F:
      return "constant_F";
    case BackgroundKind::schwarzschild_coulomb:
      return "schwarzschild+coulomb";
    case BackgroundKind::sphere_block:
      return "sphere_block";
    case BackgroundKind::einstein_static:
      return "einstein_static";
  }
  return "?";
}

BackgroundKind parse_background(const std::string& s) {
  for (auto k : {BackgroundKind::minkowski, BackgroundKind::schwarzschild, BackgroundKind::coulomb,
                 BackgroundKind::constant_F, BackgroundKind::schwarzschild_coulomb, BackgroundKind::sphere_block,
                 BackgroundKind::einstein_static})
    if (s == background_name(k)) return k;
  if (s == "schwarzschild_coulomb") return BackgroundKind::schwarzschild_coulomb;
  throw UsageError("unknown background '" + s + "'");
}

std::string format_name(OutputFormat f) { return f == OutputFormat::csv ? "csv" : "md"; }

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "md" || s == "markdown") return OutputFormat::markdown;
  throw UsageError("unknown output format '" + s + "'");
}

ScenarioConfig parse_config(std::istream& in, ScenarioConfig c) {
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find_first_of("#;");
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw UsageError("malformed section header on line " + std::to_string(lineno));
      section = trim(line.substr(1, line.size() - 2));
      if (section != "background" && section != "constants" && section != "numerics" && section != "output")
        throw UsageError("unknown config section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError("expected key = value on line " + std::to_string(lineno));
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    bool known = true;
    if (section == "background") {
      if (key == "kind") {
        c.background = parse_background(val);
      } else if (key == "r_s") {
        c.r_s = to_double(key, val);
      } else if (key == "charge") {
        c.charge_q = to_double(key, val);
      } else if (key == "radius") {
        c.radius = to_double(key, val);
      } else {
        known = false;
        for (const auto& [name, mn] : kFieldKeys)
          if (key == name) {
            const double v = to_double(key, val);
            c.field(mn.first, mn.second) = v;
            c.field(mn.second, mn.first) = -v;
            known = true;
          }
      }
    } else if (section == "constants") {
      if (key == "m_e") c.m_e = to_double(key, val);
      else if (key == "e") c.e = to_double(key, val);
      else if (key == "alpha") c.alpha = to_double(key, val);
      else known = false;
    } else if (section == "numerics") {
      if (key == "scheme") {
        try {
          c.backend.scheme = numkit::parse_scheme(val);
        } catch (const DomainError& e) {
          throw UsageError(e.what());
        }
      } else if (key == "step") c.backend.step = to_double(key, val);
      else if (key == "scale_with_coordinate") c.backend.scale_with_coordinate = to_bool(key, val);
      else if (key == "seed") c.seed = static_cast<std::uint64_t>(to_int(key, val));
      else if (key == "points") c.points = static_cast<int>(to_int(key, val));
      else if (key == "tol") c.tol = to_double(key, val);
      else if (key == "lattice") c.lattice = static_cast<int>(to_int(key, val));
      else if (key == "spacing") c.spacing = to_double(key, val);
      else known = false;
    } else if (section == "output") {
      if (key == "format") c.format = parse_format(val);
      else known = false;
    } else {
      throw UsageError("key '" + key + "' outside any section");
    }
    if (!known) throw UsageError("unknown key '" + key + "' in [" + section + "]");
  }
  validate(c);
  return c;
}

ScenarioConfig load_config(const std::string& path, ScenarioConfig base) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open config file " + path);
  return parse_config(f, base);
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

std::string canonical_text(const ScenarioConfig& c) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "[background]\nkind=" << background_name(c.background) << "\nr_s=" << c.r_s << "\ncharge=" << c.charge_q
     << "\nradius=" << c.radius << "\n";
  for (const auto& [name, mn] : kFieldKeys) os << name << "=" << c.field(mn.first, mn.second) << "\n";
  os << "[constants]\nm_e=" << c.m_e << "\ne=" << c.e << "\nalpha=" << c.alpha << "\n";
  os << "[numerics]\nscheme=" << numkit::scheme_name(c.backend.scheme) << "\nstep=" << c.backend.step
     << "\nscale_with_coordinate=" << (c.backend.scale_with_coordinate ? 1 : 0) << "\nseed=" << c.seed
     << "\npoints=" << c.points << "\ntol=" << c.tol << "\nlattice=" << c.lattice << "\nspacing=" << c.spacing
     << "\n";
  os << "[output]\nformat=" << format_name(c.format) << "\nrs_meters=" << c.rs_meters << "\n";
  return os.str();
}

std::uint64_t config_hash(const ScenarioConfig& cfg) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : canonical_text(cfg)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hash_hex(std::uint64_t h) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

kaluza::Background4 make_background(BackgroundKind kind, const ScenarioConfig& c) {
  kaluza::Background4 bg;
  switch (kind) {
    case BackgroundKind::minkowski:
      bg = kaluza::minkowski_bg();
      break;
    case BackgroundKind::schwarzschild:
      bg = kaluza::schwarzschild_bg(c.r_s);
      break;
    case BackgroundKind::coulomb:
      bg = kaluza::coulomb_bg(c.charge_q);
      break;
    case BackgroundKind::constant_F: {
      Eigen::Matrix4d f = c.field;
      if (f.isZero()) {
        f(1, 2) = 0.4;
        f(1, 0) = 0.25;
        f(2, 1) = -0.4;
        f(0, 1) = -0.25;
      }
      bg = kaluza::constant_field_bg(f);
      break;
    }
    case BackgroundKind::schwarzschild_coulomb:
      bg = kaluza::schwarzschild_coulomb_bg(c.r_s, c.charge_q);
      break;
    case BackgroundKind::sphere_block:
      bg = kaluza::sphere_block_bg(c.radius);
      break;
    case BackgroundKind::einstein_static:
      bg = kaluza::einstein_static_bg(c.radius);
      break;
  }
  bg.backend = c.backend;
  return bg;
}

kaluza::Background4 make_background(const ScenarioConfig& cfg) { return make_background(cfg.background, cfg); }

std::vector<BackgroundKind> background_matrix() {
  return {BackgroundKind::minkowski,    BackgroundKind::schwarzschild,         BackgroundKind::coulomb,
          BackgroundKind::constant_F,   BackgroundKind::schwarzschild_coulomb, BackgroundKind::sphere_block,
          BackgroundKind::einstein_static};
}

numkit::Point sample_point(BackgroundKind kind, const ScenarioConfig& c, std::uint64_t stream, int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(c.seed), static_cast<std::uint32_t>(c.seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto in = [&](double a, double b) { return a + (b - a) * u(rng); };
  switch (kind) {
    case BackgroundKind::schwarzschild:
    case BackgroundKind::schwarzschild_coulomb:
      return numkit::Point{in(-1, 1), in(1.5, 3.0) * c.r_s, in(0.5, kPi - 0.5), in(0, 2 * kPi)};
    case BackgroundKind::coulomb: {
      const double r = in(1.0, 2.0), th = in(0.3, kPi - 0.3), ph = in(0, 2 * kPi);
      return numkit::Point{in(-1, 1), r * std::sin(th) * std::cos(ph), r * std::sin(th) * std::sin(ph),
                           r * std::cos(th)};
    }
    case BackgroundKind::sphere_block:
      return numkit::Point{in(-1, 1), in(-1, 1), in(0.5, kPi - 0.5), in(0, 2 * kPi)};
    case BackgroundKind::einstein_static:
      return numkit::Point{in(-1, 1), in(0.5, kPi - 0.5), in(0.5, kPi - 0.5), in(0, 2 * kPi)};
    case BackgroundKind::minkowski:
    case BackgroundKind::constant_F:
      break;
  }
  return numkit::Point{in(-1, 1), in(-1, 1), in(-1, 1), in(-1, 1)};
}

ThresholdReport thresholds(const ScenarioConfig& c) {
  ThresholdReport t;
  t.compton_m = kComptonMeters / c.m_e;
  t.horizon = c.rs_meters > 0.0 ? c.rs_meters / t.compton_m : c.r_s;
  if (!(t.horizon > 0.0)) throw UsageError("thresholds need a positive horizon radius");
  if (!(c.alpha > 0.0)) throw UsageError("thresholds need a positive coupling e²");
  t.r_star_gravity = std::cbrt(t.horizon);
  t.r_star_gravity_solved = std::pow(12.0 * t.horizon * t.horizon, 1.0 / 6.0);
  t.e_squared = c.alpha;
  t.r_star_em_computed = std::pow(c.alpha * c.alpha, 1.0 / 6.0);
  return t;
}

// ---------------------------------------------------------------------------

bool SuiteReport::pass() const {
  for (const auto& a : assertions)
    if (!a.diagnostic && !a.pass) return false;
  return true;
}

void SuiteReport::check(const std::string& name, double value, double t, bool diagnostic) {
  assertions.push_back({name, value, t, std::isfinite(value) && value <= t, diagnostic});
}

namespace {

void write_meta_csv(std::ostream& os, const SuiteReport& r) {
  os << "# suite=" << r.suite << "\n# config_hash=" << hash_hex(r.hash) << "\n# seed=" << r.seed
     << "\n# scheme=" << r.scheme << "\n# tol=" << fmt(r.tol) << "\n";
}

std::string status(const Assertion& a) {
  if (a.diagnostic) return a.pass ? "INFO-PASS" : "INFO-FAIL";
  return a.pass ? "PASS" : "FAIL";
}

}  // namespace

void write_report(std::ostream& os, const SuiteReport& r, OutputFormat f) {
  if (f == OutputFormat::csv) {
    write_meta_csv(os, r);
    if (!r.table.columns.empty()) {
      for (std::size_t i = 0; i < r.table.columns.size(); ++i) os << (i ? "," : "") << r.table.columns[i];
      os << "\n";
      for (const auto& row : r.table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << "\n";
      }
    }
    for (const auto& a : r.assertions)
      os << "# " << status(a) << " " << a.name << " value=" << fmt(a.value) << " tol=" << fmt(a.tol) << "\n";
    for (const auto& n : r.notes) os << "# note: " << n << "\n";
    os << "# result=" << (r.pass() ? "PASS" : "FAIL") << "\n";
    return;
  }
  os << "## " << r.suite << "\n\n";
  os << "- config hash: `" << hash_hex(r.hash) << "`\n- seed: " << r.seed << "\n- scheme: " << r.scheme
     << "\n- tolerance: " << fmt(r.tol) << "\n\n";
  if (!r.table.columns.empty()) {
    os << "|";
    for (const auto& c : r.table.columns) os << " " << c << " |";
    os << "\n|";
    for (std::size_t i = 0; i < r.table.columns.size(); ++i) os << "---|";
    os << "\n";
    for (const auto& row : r.table.rows) {
      os << "|";
      for (const auto& v : row) os << " " << v << " |";
      os << "\n";
    }
    os << "\n";
  }
  os << "| assertion | value | tol | status |\n|---|---|---|---|\n";
  for (const auto& a : r.assertions)
    os << "| " << a.name << " | " << fmt(a.value) << " | " << fmt(a.tol) << " | " << status(a) << " |\n";
  for (const auto& n : r.notes) os << "\n> " << n << "\n";
  os << "\n**result: " << (r.pass() ? "PASS" : "FAIL") << "**\n";
}

void write_thresholds(std::ostream& os, const ThresholdReport& t, const ScenarioConfig& cfg, OutputFormat f) {
  const std::string note =
      "e^4 (lambda_C/r)^6 = 1 with e^2 = alpha gives alpha^(1/3) lambda_C; the quoted 0.03 lambda_C does not "
      "follow from it and the unit convention behind it is not known";
  const std::vector<std::pair<std::string, double>> rows = {
      {"compton_m", t.compton_m},
      {"horizon_lc", t.horizon},
      {"horizon_m", t.horizon * t.compton_m},
      {"r_star_gravity_lc", t.r_star_gravity},
      {"r_star_gravity_m", t.r_star_gravity * t.compton_m},
      {"r_star_gravity_solved_lc", t.r_star_gravity_solved},
      {"r_star_gravity_solved_m", t.r_star_gravity_solved * t.compton_m},
      {"r_star_em_quoted_lc", t.r_star_em_quoted},
      {"r_star_em_computed_lc", t.r_star_em_computed},
      {"e_squared", t.e_squared},
  };
  if (f == OutputFormat::csv) {
    os << "# suite=thresholds\n# config_hash=" << hash_hex(config_hash(cfg)) << "\n# seed=" << cfg.seed
       << "\nquantity,value\n";
    for (const auto& [k, v] : rows) os << k << "," << fmt(v) << "\n";
    os << "# note: " << note << "\n";
    return;
  }
  os << "## thresholds\n\n- config hash: `" << hash_hex(config_hash(cfg)) << "`\n- seed: " << cfg.seed
     << "\n\n| quantity | value |\n|---|---|\n";
  for (const auto& [k, v] : rows) os << "| " << k << " | " << fmt(v) << " |\n";
  os << "\n> " << note << "\n";
}

}  // namespace weylkk::scenario
