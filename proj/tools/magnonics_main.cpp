#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "magnonics/commands.hpp"
#include "magnonics/errors.hpp"

using namespace magnonics;

int main(int argc, char** argv) {
  CLI::App app{"Stationary covariance and entanglement of the driven "
               "magnon-optical-microwave triad"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::string format_name = "csv";
  int workers = 0;
  app.add_option("--config", config_path, "Flat key = value configuration file");
  app.add_option("--out", out_dir, "Output directory for tables and the manifest");
  app.add_option("--workers", workers, "Concurrency cap for sweeps (0 = hardware default)");
  app.add_option("--format", format_name, "Table format")
      ->check(CLI::IsMember({"csv", "json-lines"}));

  CLI::App* point = app.add_subcommand("point", "Evaluate one operating point");
  CLI::App* sweep = app.add_subcommand("sweep", "Linked-detuning sweep from the config");
  CLI::App* figure = app.add_subcommand("figure", "Emit a named preset dataset");
  std::string figure_which;
  figure->add_option("name", figure_which, "fig2a, fig2b, fig3, fig4, or fig5")->required();
  CLI::App* validate = app.add_subcommand("validate", "Cross-check both numerical routes");
  for (CLI::App* sub : {point, sweep, figure, validate}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    CommandOptions opt;
    opt.config = config_path.empty() ? Config{} : load_config(config_path);
    opt.out_dir = out_dir;
    opt.workers = workers;
    opt.format = format_from_name(format_name);

    if (point->parsed()) return cmd_point(opt, std::cout, std::cerr);
    if (sweep->parsed()) return cmd_sweep(opt, std::cout, std::cerr);
    if (figure->parsed()) return cmd_figure(figure_which, opt, std::cout, std::cerr);
    return cmd_validate(opt, std::cout, std::cerr);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return exit_config;
  } catch (const StabilityError& e) {
    std::cerr << e.what() << "\n";
    return exit_unstable;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_internal;
  }
}
