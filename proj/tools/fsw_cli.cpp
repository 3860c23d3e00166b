#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>

#include "fsw/breaking.hpp"
#include "fsw/harness/config.hpp"
#include "fsw/harness/initial_data.hpp"
#include "fsw/harness/record_io.hpp"
#include "fsw/harness/studies.hpp"
#include "fsw/mollifier.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kError = 1;
constexpr int kFailedCheck = 2;

fsw::ExperimentConfig load(const std::string& path, const std::string& output_dir) {
  fsw::ExperimentConfig c = fsw::load_config(path);
  if (!output_dir.empty()) c.output_dir = output_dir;
  return c;
}

std::string fmt(double v) { return fsw::format_double(v); }

std::string prediction_text(const fsw::BreakingPrediction& p) {
  std::ostringstream os;
  os << "kind=" << (p.kind == fsw::ExtremumKind::sup ? "sup" : "inf") << '\n'
     << "h1_norm=" << fmt(p.h1_norm) << '\n'
     << "C0=" << fmt(p.C0) << '\n'
     << "threshold=" << fmt(p.threshold()) << '\n'
     << "M0=" << fmt(p.M0) << '\n'
     << "x0=" << fmt(p.x0) << '\n'
     << "hypothesis_ok=" << (p.hypothesis_ok ? "true" : "false") << '\n';
  if (p.sigma) os << "sigma=" << fmt(*p.sigma) << '\n';
  if (p.T0_bound) os << "T0_bound=" << fmt(*p.T0_bound) << '\n';
  return os.str();
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::istringstream is(s);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (!item.empty()) out.push_back(fsw::parse_double(item));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wave-breaking experiments for a nonlocal free-surface equation"};
  app.require_subcommand(1);

  std::string config_path, output_dir, kind = "sup", ladder, amplitudes;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("config", config_path, "key=value experiment config")->required()->check(CLI::ExistingFile);
    sub->add_option("--output-dir", output_dir, "overrides experiment.output_dir");
  };

  auto* simulate = app.add_subcommand("simulate", "integrate the configured initial data and persist the run");
  add_common(simulate);
  auto* predict = app.add_subcommand("predict", "breaking constants, hypothesis and time bound for the initial data");
  add_common(predict);
  predict->add_option("--kind", kind, "extremal slope to track")->check(CLI::IsMember({"inf", "sup"}));
  auto* convergence = app.add_subcommand("convergence", "self-convergence ladder");
  add_common(convergence);
  convergence->add_option("--ladder", ladder)->required()->check(CLI::IsMember({"spatial", "temporal", "mollifier"}));
  auto* equivalence = app.add_subcommand("equivalence", "third-order residual along a short run");
  add_common(equivalence);
  auto* mcheck = app.add_subcommand("mollifier-check", "mollifier property suite on the initial data");
  add_common(mcheck);
  auto* sweep = app.add_subcommand("sweep", "breaking sweep over amplitudes");
  add_common(sweep);
  sweep->add_option("--amplitudes", amplitudes, "comma-separated, increasing")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kError;
  }

  try {
    const fsw::ExperimentConfig config = load(config_path, output_dir);
    if (simulate->parsed()) {
      const fsw::RunRecord rec = fsw::run_simulation(config);
      const auto& last = rec.run.series.back();
      std::cout << "id=" << config.id() << "\nstop=" << fsw::to_string(rec.run.stop.kind)
                << "\nstop_time=" << fmt(rec.run.stop.time) << "\nsteps=" << rec.run.steps
                << "\nfinal_H=" << fmt(last.H) << "\nslope_integral=" << fmt(last.slope_integral)
                << "\noutput_dir=" << config.output_dir.string() << '\n';
      return kPass;
    }
    if (predict->parsed()) {
      const auto eta0 = fsw::make_initial_data(config.initial, config.grid);
      const auto p = fsw::predict(eta0, kind == "inf" ? fsw::ExtremumKind::inf : fsw::ExtremumKind::sup);
      const std::string text = prediction_text(p);
      std::cout << text;
      fsw::write_text(config.output_dir / "prediction.txt", text);
      return kPass;
    }
    if (convergence->parsed()) {
      const auto r = fsw::convergence_study(config, fsw::parse_ladder_kind(ladder));
      std::cout << r.table() << "reference=" << r.reference << "\nfitted_order=" << fmt(r.fitted_order)
                << "\npass=" << (r.pass ? "true" : "false") << '\n';
      return r.pass ? kPass : kFailedCheck;
    }
    if (equivalence->parsed()) {
      const auto r = fsw::equivalence_check(config);
      std::cout << "t,residual_inf,eta_t_inf\n";
      for (std::size_t i = 0; i < r.times.size(); ++i) {
        std::cout << fmt(r.times[i]) << ',' << fmt(r.residual_inf[i]) << ',' << fmt(r.eta_t_inf[i]) << '\n';
      }
      std::cout << "worst_ratio=" << fmt(r.worst_ratio()) << "\npass=" << (r.pass ? "true" : "false") << '\n';
      return r.pass ? kPass : kFailedCheck;
    }
    if (mcheck->parsed()) {
      const auto eta0 = fsw::make_initial_data(config.initial, config.grid);
      fsw::MollifierSpec spec{0.1, fsw::MollifierVariant::spectral_cutoff};
      if (config.solver.variant.mollifier) spec = *config.solver.variant.mollifier;
      const auto r = fsw::verify_mollifier_properties(eta0, spec);
      std::ostringstream os;
      os << "variant=" << fsw::to_string(spec.variant) << "\nepsilon=" << fmt(spec.epsilon)
         << "\nlinf_ratio=" << fmt(r.linf_ratio) << "\nlinf_pass=" << r.linf_pass
         << "\ncommutation_defect=" << fmt(r.commutation_defect)
         << "\ncommutation_tolerance=" << fmt(r.commutation_tolerance) << "\ncommutation_pass=" << r.commutation_pass
         << "\nconvergence_order=" << fmt(r.convergence_order) << "\nconvergence_pass=" << r.convergence_pass;
      for (std::size_t k = 0; k < r.growth_exponents.size(); ++k) {
        os << "\ngrowth_exponent_" << k + 1 << '=' << fmt(r.growth_exponents[k]);
      }
      os << "\ngrowth_pass=" << r.growth_pass << '\n';
      std::cout << os.str();
      fsw::write_text(config.output_dir / "mollifier_check.txt", os.str());
      return r.all_pass() ? kPass : kFailedCheck;
    }
    if (sweep->parsed()) {
      const auto rows = fsw::breaking_sweep(config, parse_list(amplitudes));
      std::cout << fsw::sweep_csv(rows);
      for (const auto& r : rows) {
        if (!r.error.empty()) return kFailedCheck;
      }
      return kPass;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
