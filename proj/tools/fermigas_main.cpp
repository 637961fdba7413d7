#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fermigas/reports.hpp"
#include "fermigas/verify.hpp"

namespace {

using fermigas::RunConfig;

// Relative --output paths are resolved against FERMIGAS_OUTPUT_DIR when set.
std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("FERMIGAS_OUTPUT_DIR")) p = std::filesystem::path(dir) / p;
  }
  return p;
}

int emit(const fermigas::Report& report, const RunConfig& config) {
  const std::string text = fermigas::render_report(report, config.format);
  if (!config.output) {
    std::cout << text;
    return 0;
  }
  const std::filesystem::path path = resolve_output(*config.output);
  std::ofstream file(path);
  if (!file) {
    std::cerr << "error: cannot open output file " << path << "\n";
    return 2;
  }
  file << text;
  return file.good() ? 0 : 2;
}

int run_verify(const RunConfig& config) {
  fermigas::VerifyOptions options;
  options.full = !config.quick;
  options.dims = config.verify_dims;
  const std::vector<fermigas::CheckResult> results = fermigas::run_verification(options);
  std::size_t name_width = 0;
  for (const auto& r : results) name_width = std::max(name_width, r.name.size());
  for (const auto& r : results) {
    const std::string tag =
        r.criterion > 0 ? "[criterion " + std::to_string(r.criterion) + "] " : "";
    std::printf("%s  %-*s  %7.2fs  %s%s\n", r.passed ? "PASS" : "FAIL",
                static_cast<int>(name_width), r.name.c_str(), r.seconds, tag.c_str(),
                r.detail.c_str());
  }
  const std::size_t failures =
      std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; });
  std::printf("%zu/%zu suites passed (%s mode)\n", results.size() - failures, results.size(),
              options.full ? "full" : "quick");
  return failures == 0 ? 0 : 1;
}

void add_output_options(CLI::App* cmd, RunConfig& config) {
  cmd->add_option_function<std::string>(
         "--format",
         [&config](const std::string& value) {
           config.format = value == "json" ? RunConfig::Format::json : RunConfig::Format::csv;
         },
         "output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->default_str("csv");
  cmd->add_option("--output", config.output,
                  "output file (relative paths resolve against FERMIGAS_OUTPUT_DIR)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ground-state density of the harmonically trapped Fermi gas:\n"
               "exact moments, expansion coefficients, density profiles, transforms\n"
               "and the soft-edge limit, each cross-checked by independent routes."};
  app.require_subcommand(1);

  // Each subcommand owns its configuration; defaults differ per command.
  RunConfig moments_cfg, mu_cfg, density_cfg, transform_cfg, edge_cfg, verify_cfg;

  auto* moments = app.add_subcommand("moments", "exact radial moments for one shell");
  moments_cfg.command = RunConfig::Command::moments;
  moments->add_option("--d", moments_cfg.d, "dimension")->capture_default_str()->check(CLI::PositiveNumber);
  moments->add_option("--M", moments_cfg.M, "shell label")->capture_default_str()->check(CLI::NonNegativeNumber);
  moments->add_option("--k-max", moments_cfg.k_max, "largest moment order")
      ->capture_default_str()->check(CLI::NonNegativeNumber);
  add_output_options(moments, moments_cfg);

  auto* mu = app.add_subcommand("mu", "expansion coefficient triangle rows");
  mu_cfg.command = RunConfig::Command::mu;
  mu->add_option("--d", mu_cfg.d, "dimension")->capture_default_str()->check(CLI::PositiveNumber);
  mu->add_option("--k-max", mu_cfg.k_max, "largest row")->capture_default_str()->check(CLI::NonNegativeNumber);
  add_output_options(mu, mu_cfg);

  auto* density = app.add_subcommand("density", "radial density with both evaluation routes");
  density_cfg.command = RunConfig::Command::density;
  density_cfg.M = 4;
  density->add_option("--d", density_cfg.d, "dimension")->capture_default_str()->check(CLI::PositiveNumber);
  density->add_option("--M", density_cfg.M, "shell label")->capture_default_str()->check(CLI::NonNegativeNumber);
  density->add_option("--grid-min", density_cfg.grid_min, "first radius")->capture_default_str();
  density->add_option("--grid-max", density_cfg.grid_max,
                      "last radius (default: turning point + 4)");
  density->add_option("--samples", density_cfg.samples, "grid size")->capture_default_str()->check(CLI::Range(2, 1 << 20));
  add_output_options(density, density_cfg);

  auto* transform =
      app.add_subcommand("transform", "closed-form transform and its equation residual");
  transform_cfg.command = RunConfig::Command::transform;
  transform_cfg.M = 4;
  transform_cfg.grid_max = 12.0;
  transform->add_option("--d", transform_cfg.d, "dimension")->capture_default_str()->check(CLI::PositiveNumber);
  transform->add_option("--M", transform_cfg.M, "shell label")->capture_default_str()->check(CLI::NonNegativeNumber);
  transform->add_option("--grid-min", transform_cfg.grid_min, "first frequency")->capture_default_str();
  transform->add_option("--grid-max", transform_cfg.grid_max, "last frequency")->capture_default_str();
  transform->add_option("--samples", transform_cfg.samples, "grid size")
      ->capture_default_str()->check(CLI::Range(2, 1 << 20));
  add_output_options(transform, transform_cfg);

  auto* edge =
      app.add_subcommand("edge", "soft-edge profile, equation residual, finite-shell gap");
  edge_cfg.command = RunConfig::Command::edge;
  edge_cfg.M = 16;
  edge_cfg.grid_min = -5.0;
  edge_cfg.grid_max = 3.0;
  edge_cfg.samples = 33;
  edge->add_option("--d", edge_cfg.d, "dimension")->capture_default_str()->check(CLI::PositiveNumber);
  edge->add_option("--M", edge_cfg.M, "shell label for the finite-shell column (>= 4)")
      ->capture_default_str()->check(CLI::Range(4, 1 << 20));
  edge->add_option("--grid-min", edge_cfg.grid_min, "first edge coordinate")->capture_default_str();
  edge->add_option("--grid-max", edge_cfg.grid_max, "last edge coordinate")->capture_default_str();
  edge->add_option("--samples", edge_cfg.samples, "grid size")->capture_default_str()->check(CLI::Range(2, 1 << 20));
  edge->add_option("--tol", edge_cfg.quad_tol, "quadrature tolerance override");
  add_output_options(edge, edge_cfg);

  auto* verify = app.add_subcommand("verify", "run the verification suites and print a table");
  bool quick = false;
  bool full = false;
  verify->add_flag("--quick", quick, "small parameter boxes (default)");
  verify->add_flag("--full", full, "full acceptance boxes");
  verify->add_option("--d", verify_cfg.verify_dims,
                     "restrict suites to these dimensions (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) {
      verify_cfg.quick = !full;
      return run_verify(verify_cfg);
    }
    if (moments->parsed()) return emit(fermigas::build_moments_report(moments_cfg), moments_cfg);
    if (mu->parsed()) return emit(fermigas::build_mu_report(mu_cfg), mu_cfg);
    if (density->parsed()) return emit(fermigas::build_density_report(density_cfg), density_cfg);
    if (transform->parsed())
      return emit(fermigas::build_transform_report(transform_cfg), transform_cfg);
    if (edge->parsed()) return emit(fermigas::build_edge_report(edge_cfg), edge_cfg);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
