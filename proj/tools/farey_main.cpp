#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

#include "farey/json_io.hpp"
#include "farey/svg.hpp"
#include "farey/verifier.hpp"

namespace {

// Exit codes: 0 success, 1 verification found violations, 2 usage error,
// 3 output could not be written.
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct CliConfig {
  int m = 1;
  int n = 1;
  std::string x_min = "0";
  std::string x_max = "1";
  std::string y_min = "0";
  std::string y_max = "1";
  std::string output;  // empty means stdout
  int size_px = 800;
  long lemma_samples = 0;
  std::uint64_t seed = 1;
};

farey::RectWindow parse_window(const CliConfig& cfg) {
  return {farey::Rat::parse(cfg.x_min), farey::Rat::parse(cfg.x_max),
          farey::Rat::parse(cfg.y_min), farey::Rat::parse(cfg.y_max)};
}

int write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return kExitIo;
  }
  out << content;
  out.flush();
  if (!out) {
    std::cerr << "error: failed writing '" << path << "'\n";
    return kExitIo;
  }
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact arrangement of the integer line family with bounded coefficients"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto add_params = [&cfg](CLI::App* cmd) {
    cmd->add_option("--m", cfg.m, "Bound on the x coefficient |u|")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--n", cfg.n, "Bound on the y coefficient |v|")
        ->required()
        ->check(CLI::PositiveNumber);
  };
  auto add_window = [&cfg](CLI::App* cmd) {
    cmd->add_option("--x-min", cfg.x_min, "Window bound, a rational like -2 or 1/3");
    cmd->add_option("--x-max", cfg.x_max, "Window bound");
    cmd->add_option("--y-min", cfg.y_min, "Window bound");
    cmd->add_option("--y-max", cfg.y_max, "Window bound");
  };
  auto add_output = [&cfg](CLI::App* cmd) {
    cmd->add_option("-o,--output", cfg.output, "Write to this file instead of stdout");
  };

  CLI::App* lines_cmd =
      app.add_subcommand("lines", "List the family lines meeting the window as JSON");
  add_params(lines_cmd);
  add_window(lines_cmd);
  add_output(lines_cmd);

  CLI::App* cells_cmd =
      app.add_subcommand("cells", "Build the exact subdivision of the window as JSON");
  add_params(cells_cmd);
  add_window(cells_cmd);
  add_output(cells_cmd);

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Check the structure theorems over the unit square");
  add_params(verify_cmd);
  add_output(verify_cmd);
  verify_cmd->add_option("--lemma-samples", cfg.lemma_samples,
                         "Random three-point separation checks to run")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--seed", cfg.seed, "Seed for the three-point sampler");

  CLI::App* window_cmd = app.add_subcommand(
      "window", "Check cells strictly interior to a window (default [-2,3] x [-2,3])");
  add_params(window_cmd);
  add_window(window_cmd);
  add_output(window_cmd);

  CLI::App* render_cmd = app.add_subcommand("render", "Draw the subdivision of the window as SVG");
  add_params(render_cmd);
  add_window(render_cmd);
  add_output(render_cmd);
  render_cmd->add_option("--size", cfg.size_px, "Drawing width in pixels")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (app.got_subcommand(window_cmd)) {
    if (window_cmd->count("--x-min") == 0) cfg.x_min = "-2";
    if (window_cmd->count("--x-max") == 0) cfg.x_max = "3";
    if (window_cmd->count("--y-min") == 0) cfg.y_min = "-2";
    if (window_cmd->count("--y-max") == 0) cfg.y_max = "3";
  }

  try {
    const farey::FareyParams params(cfg.m, cfg.n);

    if (app.got_subcommand(lines_cmd)) {
      const farey::RectWindow rect = parse_window(cfg);
      const auto lines = farey::enumerate_lines(params, rect);
      return write_output(cfg.output, farey::dump_json(farey::lines_to_json(lines)));
    }

    if (app.got_subcommand(cells_cmd)) {
      const farey::RectWindow rect = parse_window(cfg);
      const auto lines = farey::enumerate_lines(params, rect);
      const farey::Subdivision sub = farey::build(lines, rect);
      return write_output(cfg.output, farey::dump_json(farey::subdivision_to_json(sub)));
    }

    if (app.got_subcommand(verify_cmd)) {
      farey::VerifyRun run = farey::verify_all(params);
      if (cfg.lemma_samples > 0) {
        try {
          farey::sample_three_point_checks(params, cfg.lemma_samples, cfg.seed);
        } catch (const farey::InternalInvariantViolation&) {
          run.report.violations.push_back({-1, "three_point"});
        }
      }
      const int rc = write_output(cfg.output, farey::dump_json(farey::report_to_json(run.report)));
      if (rc != 0) return rc;
      return run.report.ok() ? 0 : kExitViolations;
    }

    if (app.got_subcommand(window_cmd)) {
      const farey::RectWindow rect = parse_window(cfg);
      const farey::VerifyRun run = farey::window_scan(params, rect);
      const int rc = write_output(cfg.output, farey::dump_json(farey::report_to_json(run.report)));
      if (rc != 0) return rc;
      return run.report.ok() ? 0 : kExitViolations;
    }

    if (app.got_subcommand(render_cmd)) {
      const farey::RectWindow rect = parse_window(cfg);
      const auto lines = farey::enumerate_lines(params, rect);
      const farey::Subdivision sub = farey::build(lines, rect);
      farey::SvgOptions options;
      options.size_px = cfg.size_px;
      return write_output(cfg.output, farey::render_svg(sub, options));
    }
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolations;
  }
  return kExitUsage;  // unreachable: a subcommand is required
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
