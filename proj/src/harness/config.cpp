#include "fsw/harness/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace fsw {

std::string to_string(InitialFamily f) {
  switch (f) {
    case InitialFamily::gaussian: return "gaussian";
    case InitialFamily::sech2: return "sech2";
    case InitialFamily::sine_packet: return "sine_packet";
    case InitialFamily::steep_ramp: return "steep_ramp";
  }
  throw std::invalid_argument("bad InitialFamily");
}

InitialFamily parse_initial_family(const std::string& s) {
  for (auto f : {InitialFamily::gaussian, InitialFamily::sech2, InitialFamily::sine_packet, InitialFamily::steep_ramp}) {
    if (to_string(f) == s) return f;
  }
  throw std::invalid_argument("unknown initial family '" + s + "'");
}

void InitialDataSpec::validate() const {
  if (!(width > 0.0) || !std::isfinite(width)) throw std::invalid_argument("initial.width must be positive");
  if (!std::isfinite(amplitude) || !std::isfinite(center)) throw std::invalid_argument("initial data must be finite");
  if (family == InitialFamily::sine_packet && (!wavenumber || *wavenumber < 1)) {
    throw std::invalid_argument("sine_packet needs a positive initial.wavenumber");
  }
}

void ExperimentConfig::validate() const {
  initial.validate();
  if (!(sobolev_s > 1.5)) throw std::invalid_argument("experiment.sobolev_s must exceed 3/2");
  if (solver.sobolev_s != sobolev_s) throw std::invalid_argument("solver and experiment Sobolev indices differ");
  solver.validate(grid);
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last) throw std::invalid_argument("not a number: '" + s + "'");
  return v;
}

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

double parse_real(const std::string& s) {
  std::string t = s;
  double factor = 1.0;
  if (t.size() >= 2 && t.compare(t.size() - 2, 2, "pi") == 0) {
    factor = std::numbers::pi;
    t.erase(t.size() - 2);
    if (!t.empty() && t.back() == '*') t.pop_back();
    if (t.empty()) return factor;
  }
  return parse_double(t) * factor;
}

long parse_integer(const std::string& s) {
  long v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
  return v;
}

bool parse_bool(const std::string& s) {
  if (s == "true" || s == "1") return true;
  if (s == "false" || s == "0") return false;
  throw std::invalid_argument("not a boolean: '" + s + "'");
}

}  // namespace

std::string ExperimentConfig::to_text() const {
  std::ostringstream os;
  const auto kv = [&](const char* k, const std::string& v) { os << k << '=' << v << '\n'; };
  kv("grid.n", std::to_string(grid.n()));
  kv("grid.half_length", format_double(grid.half_length()));
  kv("initial.family", to_string(initial.family));
  kv("initial.amplitude", format_double(initial.amplitude));
  kv("initial.width", format_double(initial.width));
  kv("initial.center", format_double(initial.center));
  if (initial.wavenumber) kv("initial.wavenumber", std::to_string(*initial.wavenumber));
  kv("solver.t_end", format_double(solver.t_end));
  kv("solver.dt_init", format_double(solver.dt_init));
  kv("solver.cfl", format_double(solver.cfl));
  kv("solver.slope_stop", format_double(solver.slope_stop));
  kv("solver.energy_drift_stop", format_double(solver.energy_drift_stop));
  kv("solver.record_every", std::to_string(solver.record_every));
  kv("solver.keep_snapshots", solver.keep_snapshots ? "true" : "false");
  kv("solver.variant", to_string(solver.variant.kind));
  if (solver.variant.mollifier) {
    kv("solver.mollifier.epsilon", format_double(solver.variant.mollifier->epsilon));
    kv("solver.mollifier.variant", to_string(solver.variant.mollifier->variant));
  }
  kv("experiment.sobolev_s", format_double(sobolev_s));
  kv("experiment.output_dir", output_dir.string());
  return os.str();
}

std::string ExperimentConfig::id() const {
  std::uint64_t h = 14695981039346656037ull;
  std::istringstream is(to_text());
  std::string line;
  while (std::getline(is, line)) {
    if (line.rfind("experiment.output_dir=", 0) == 0) continue;
    for (unsigned char c : line + '\n') {
      h ^= c;
      h *= 1099511628211ull;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ExperimentConfig parse_config(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!kv.emplace(key, value).second) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    }
  }

  ExperimentConfig c;
  std::size_t n = c.grid.n();
  double half_length = c.grid.half_length();
  std::optional<double> eps;
  std::optional<MollifierVariant> mvariant;
  for (const auto& [key, value] : kv) {
    try {
      if (key == "grid.n") {
        const long v = parse_integer(value);
        if (v <= 0) throw std::invalid_argument("must be positive");
        n = static_cast<std::size_t>(v);
      } else if (key == "grid.half_length") {
        half_length = parse_real(value);
      } else if (key == "initial.family") {
        c.initial.family = parse_initial_family(value);
      } else if (key == "initial.amplitude") {
        c.initial.amplitude = parse_real(value);
      } else if (key == "initial.width") {
        c.initial.width = parse_real(value);
      } else if (key == "initial.center") {
        c.initial.center = parse_real(value);
      } else if (key == "initial.wavenumber") {
        c.initial.wavenumber = static_cast<int>(parse_integer(value));
      } else if (key == "solver.t_end") {
        c.solver.t_end = parse_real(value);
      } else if (key == "solver.dt_init") {
        c.solver.dt_init = parse_real(value);
      } else if (key == "solver.cfl") {
        c.solver.cfl = parse_real(value);
      } else if (key == "solver.slope_stop") {
        c.solver.slope_stop = parse_real(value);
      } else if (key == "solver.energy_drift_stop") {
        c.solver.energy_drift_stop = parse_real(value);
      } else if (key == "solver.record_every") {
        c.solver.record_every = static_cast<int>(parse_integer(value));
      } else if (key == "solver.keep_snapshots") {
        c.solver.keep_snapshots = parse_bool(value);
      } else if (key == "solver.variant") {
        c.solver.variant.kind = parse_rhs_kind(value);
      } else if (key == "solver.mollifier.epsilon") {
        eps = parse_real(value);
      } else if (key == "solver.mollifier.variant") {
        mvariant = parse_mollifier_variant(value);
      } else if (key == "experiment.sobolev_s") {
        c.sobolev_s = parse_real(value);
      } else if (key == "experiment.output_dir") {
        c.output_dir = value;
      } else {
        throw std::invalid_argument("unknown key");
      }
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("config key '" + key + "': " + e.what());
    }
  }
  c.grid = GridSpec(n, half_length);
  if (c.solver.variant.kind != RhsKind::nonlocal_exact) {
    MollifierSpec m;
    m.variant = MollifierVariant::spectral_cutoff;
    if (eps) m.epsilon = *eps;
    if (mvariant) m.variant = *mvariant;
    c.solver.variant.mollifier = m;
  } else if (eps || mvariant) {
    throw std::invalid_argument("solver.mollifier.* given for the exact rhs variant");
  }
  c.solver.sobolev_s = c.sobolev_s;
  c.validate();
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  try {
    return parse_config(os.str());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

}  // namespace fsw
