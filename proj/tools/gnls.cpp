// gnls: run conservative coupled-NLS experiments and fit decay rates.
//
//   gnls run <config>
//   gnls fit <csv> --t-min <t> --targets linf_u,l2p2_u [--plot-dir <dir>]

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gnls/config.hpp"
#include "gnls/error.hpp"
#include "gnls/experiment.hpp"
#include "gnls/kernels.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Conservative finite-difference solver for coupled NLS systems"};
  app.require_subcommand(1);

  std::string config_path;
  auto* run = app.add_subcommand("run", "Run the experiment described by a config file");
  run->add_option("config", config_path, "Config file")->required();

  std::string csv_path;
  double t_min = 0.0;
  std::vector<std::string> targets;
  std::string plot_dir;
  auto* fit = app.add_subcommand("fit", "Fit power-law decay to a diagnostics CSV");
  fit->add_option("csv", csv_path, "Diagnostics CSV written by `run`")->required();
  fit->add_option("--t-min", t_min, "Fit samples with t > t_min")->required();
  fit->add_option("--targets", targets, "Columns to fit")
      ->required()
      ->delimiter(',');
  fit->add_option("--plot-dir", plot_dir,
                  "Directory for two-column plot files (default: next to the CSV)");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    try {
      const gnls::RunConfig config = gnls::load_config(config_path);
      std::cerr << "# threads = " << gnls::kernels::thread_count() << '\n';
      return gnls::run_experiment(config, std::cout, std::cerr);
    } catch (const gnls::Error& e) {
      gnls::report_error(e, std::cerr);
      return gnls::exit_code(e.category());
    }
  }

  try {
    std::filesystem::path dir = plot_dir;
    if (dir.empty()) dir = std::filesystem::path(csv_path).parent_path();
    if (dir.empty()) dir = ".";
    std::cout << gnls::fit_report(csv_path, t_min, targets, dir);
    return 0;
  } catch (const gnls::Error& e) {
    gnls::report_error(e, std::cerr);
    return gnls::exit_code(e.category());
  } catch (const std::filesystem::filesystem_error& e) {
    gnls::report_error(e, std::cerr);
    return gnls::exit_code(gnls::ErrorCategory::io);
  }
}
