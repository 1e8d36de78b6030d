#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "adradar/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"802.11ad preamble radar and beam-training simulator"};

  adradar::RunSpec spec;
  app.add_option("--experiment", spec.experiment,
                 "golay-check | radar-chain | planner-sweep | rate-sweep | misalignment | "
                 "overhead | reproduce-paper")
      ->required();
  app.add_option("--config", spec.config_path, "configuration file (key = value sections)");
  app.add_option("--out", spec.out_dir, "output directory (created if missing)");
  app.add_option("--seed", spec.seed, "random seed");
  app.add_option("--trials", spec.trials, "Monte Carlo trial count");

  CLI11_PARSE(app, argc, argv);

  if (const char* env_out = std::getenv("ADRADAR_OUT"); env_out && spec.out_dir == ".")
    spec.out_dir = env_out;

  try {
    return adradar::run(spec);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
