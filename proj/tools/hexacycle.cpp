// hexacycle: construct and verify the six pedal points, extremal triangles
// and their identities for a reference triangle and a prescribed shape.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hexacycle/app.hpp"

namespace {

using hexacycle::app::CommandResult;
using hexacycle::app::RunConfig;

bool write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  out << bytes;
  return static_cast<bool>(out);
}

// Writes the document to `path`, or to stdout when no path was given.
int emit(const CommandResult& r, const std::string& path) {
  std::cerr << r.diagnostics;
  if (r.exit_code == hexacycle::app::kExitUsage) return r.exit_code;
  if (path.empty()) {
    std::cout << r.output;
  } else if (!write_file(path, r.output)) {
    std::cerr << "error: cannot write " << path << '\n';
    return hexacycle::app::kExitUsage;
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Six pedal points, extremal triangles and their verification"};
  app.require_subcommand(1);

  RunConfig config;
  std::string triangle_text;
  std::string angles_text;
  std::string layers_text = "interior";

  auto add_instance = [&](CLI::App* cmd) {
    cmd->add_option("--triangle", triangle_text, "reference triangle \"x,y x,y x,y\"")->required();
    cmd->add_option("--angles", angles_text, "prescribed angles in degrees \"a,b,c\"")->required();
  };
  auto add_tolerances = [&](CLI::App* cmd) {
    cmd->add_option("--tol-concyclic", config.tol.concyclic, "interior circle residual / radius")
        ->capture_default_str();
    cmd->add_option("--tol-exterior", config.tol.exterior, "exterior circle residual / radius")
        ->capture_default_str();
    cmd->add_option("--tol-construct", config.tol.construct, "incidence residual / scale")->capture_default_str();
  };

  CLI::App* verify = app.add_subcommand("verify", "run every construction and check on one instance");
  add_instance(verify);
  add_tolerances(verify);
  verify->add_option("--grid", config.grid, "oracle sweep resolution")->capture_default_str();
  verify->add_option("--json", config.json_path, "write the JSON report here instead of stdout");
  verify->add_option("--svg", config.svg_path, "also write the figure here");
  verify->add_option("--layers", layers_text, "figure layers: interior,exterior,circles");

  CLI::App* fuzz = app.add_subcommand("fuzz", "seeded random instances through every check");
  fuzz->add_option("--seed", config.seed, "master seed")->capture_default_str();
  fuzz->add_option("--trials", config.trials, "number of instances")->capture_default_str();
  fuzz->add_option("--grid", config.grid, "oracle sweep resolution")->capture_default_str();
  fuzz->add_option("--json", config.json_path, "write the JSON summary here instead of stdout");
  add_tolerances(fuzz);

  CLI::App* svg = app.add_subcommand("svg", "draw the six points and their circle");
  add_instance(svg);
  add_tolerances(svg);
  svg->add_option("--svg", config.svg_path, "write the figure here instead of stdout");
  svg->add_option("--layers", layers_text, "interior,exterior,circles");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return hexacycle::app::kExitUsage;
  }

  try {
    config.layers = hexacycle::app::parse_layers(layers_text);
    if (!triangle_text.empty()) config.triangle = hexacycle::app::parse_triangle(triangle_text);
    if (!angles_text.empty()) config.angles_degrees = hexacycle::app::parse_angles(angles_text);
  } catch (const hexacycle::app::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return hexacycle::app::kExitUsage;
  }

  if (verify->parsed()) {
    const int code = emit(hexacycle::app::run_verify(config), config.json_path);
    if (code != hexacycle::app::kExitUsage && !config.svg_path.empty()) {
      const CommandResult figure = hexacycle::app::run_svg(config);
      std::cerr << figure.diagnostics;
      if (!write_file(config.svg_path, figure.output)) {
        std::cerr << "error: cannot write " << config.svg_path << '\n';
        return hexacycle::app::kExitUsage;
      }
    }
    return code;
  }
  if (fuzz->parsed()) return emit(hexacycle::app::run_fuzz(config), config.json_path);
  return emit(hexacycle::app::run_svg(config), config.svg_path);
}
