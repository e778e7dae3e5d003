#include <CLI11.hpp>

#include <iostream>

#include "hb/errors.hpp"
#include "hb/version.hpp"

void register_project(CLI::App& app);
void register_prune(CLI::App& app);
void register_backbone(CLI::App& app);
void register_reduce(CLI::App& app);
void register_benchgen(CLI::App& app);
void register_eval(CLI::App& app);
void register_pipeline(CLI::App& app);
void register_export(CLI::App& app);

int main(int argc, char** argv) {
  CLI::App app{"hierarchical backbone extraction from object-tag data"};
  app.set_version_flag("--version", hb::version_string);
  app.require_subcommand(1);

  register_project(app);
  register_prune(app);
  register_backbone(app);
  register_reduce(app);
  register_benchgen(app);
  register_eval(app);
  register_pipeline(app);
  register_export(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const hb::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
