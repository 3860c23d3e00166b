#include "fsw/harness/record_io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "fsw/dynamics.hpp"

namespace fsw {

namespace fs = std::filesystem;

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw std::runtime_error("cannot create directory " + path.parent_path().string() + ": " + ec.message());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string series_csv(const std::vector<SeriesRow>& series) {
  std::string s = std::string(kSeriesHeader) + "\n";
  for (const SeriesRow& r : series) {
    for (double v : {r.t, r.H, r.Hs_norm, r.linf_slope, r.inf_slope, r.sup_slope, r.xi_inf, r.xi_sup,
                     r.slope_integral}) {
      s += format_double(v);
      s += ',';
    }
    s.back() = '\n';
  }
  return s;
}

namespace {

std::vector<std::vector<double>> read_csv(const fs::path& path, const std::string& header, std::size_t columns) {
  std::istringstream is(read_text(path));
  std::string line;
  if (!std::getline(is, line) || line != header) throw std::runtime_error(path.string() + ": unexpected header");
  std::vector<std::vector<double>> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(parse_double(cell));
    if (row.size() != columns) throw std::runtime_error(path.string() + ": wrong column count");
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string snapshot_name(std::size_t i) { return "snapshot_" + std::to_string(i) + ".csv"; }

}  // namespace

void write_record(const RunRecord& rec, const fs::path& dir) {
  write_text(dir / "config.txt", rec.config.to_text());
  write_text(dir / "series.csv", series_csv(rec.run.series));
  for (std::size_t i = 0; i < rec.run.snapshots.size(); ++i) {
    const Snapshot& s = rec.run.snapshots[i];
    std::string text = "x,eta\n";
    for (std::size_t j = 0; j < s.eta.size(); ++j) {
      text += format_double(rec.run.grid.node(j)) + ',' + format_double(s.eta[j]) + '\n';
    }
    write_text(dir / snapshot_name(i), text);
  }

  const SolverConfig& sc = rec.config.solver;
  std::ostringstream m;
  m << "id=" << rec.config.id() << '\n';
  m << "stop=" << to_string(rec.run.stop.kind) << '\n';
  m << "stop_time=" << format_double(rec.run.stop.time) << '\n';
  m << "stop_detail=" << rec.run.stop.detail << '\n';
  m << "steps=" << rec.run.steps << '\n';
  m << "max_mass_drift=" << format_double(rec.run.max_mass_drift) << '\n';
  m << "wall_time=" << format_double(rec.run.wall_time) << '\n';
  m << "snapshot_count=" << rec.run.snapshots.size() << '\n';
  for (std::size_t i = 0; i < rec.run.snapshots.size(); ++i) {
    m << "snapshot_" << i << ".t=" << format_double(rec.run.snapshots[i].t) << '\n';
  }
  m << "threshold.slope_stop=" << format_double(sc.slope_stop) << '\n';
  m << "threshold.energy_drift_stop=" << format_double(sc.energy_drift_stop) << '\n';
  m << "threshold.cfl=" << format_double(sc.cfl) << '\n';
  m << "threshold.dt_init=" << format_double(sc.dt_init) << '\n';
  std::istringstream table(coefficient_table_text());
  std::string line;
  while (std::getline(table, line)) m << "coefficient." << line << '\n';
  std::istringstream cfg(rec.config.to_text());
  while (std::getline(cfg, line)) m << "config." << line << '\n';
  write_text(dir / "manifest.txt", m.str());
}

RunRecord read_record(const fs::path& dir) {
  RunRecord rec{parse_config(read_text(dir / "config.txt")), {}};
  rec.run.grid = rec.config.grid;

  std::map<std::string, std::string> manifest;
  {
    std::istringstream is(read_text(dir / "manifest.txt"));
    std::string line;
    while (std::getline(is, line)) {
      const auto eq = line.find('=');
      if (eq != std::string::npos) manifest[line.substr(0, eq)] = line.substr(eq + 1);
    }
  }
  const auto get = [&](const std::string& key) {
    auto it = manifest.find(key);
    if (it == manifest.end()) throw std::runtime_error((dir / "manifest.txt").string() + ": missing key " + key);
    return it->second;
  };
  if (get("id") != rec.config.id()) throw std::runtime_error(dir.string() + ": manifest id does not match config");
  rec.run.stop = {parse_stop_kind(get("stop")), parse_double(get("stop_time")), get("stop_detail")};
  rec.run.steps = std::stoull(get("steps"));
  rec.run.max_mass_drift = parse_double(get("max_mass_drift"));
  rec.run.wall_time = parse_double(get("wall_time"));

  for (const auto& row : read_csv(dir / "series.csv", kSeriesHeader, 9)) {
    rec.run.series.push_back({row[0], row[1], row[2], row[3], row[4], row[5], row[6], row[7], row[8]});
  }
  const std::size_t count = std::stoull(get("snapshot_count"));
  for (std::size_t i = 0; i < count; ++i) {
    const auto rows = read_csv(dir / snapshot_name(i), "x,eta", 2);
    std::vector<double> eta;
    eta.reserve(rows.size());
    for (const auto& r : rows) eta.push_back(r[1]);
    const double t = parse_double(get("snapshot_" + std::to_string(i) + ".t"));
    rec.run.snapshots.push_back({t, RealField(rec.config.grid, std::move(eta))});
  }
  return rec;
}

}  // namespace fsw
