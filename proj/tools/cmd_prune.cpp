#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <string>

#include "hb/io.hpp"
#include "hb/prune.hpp"

namespace {

struct options {
  std::string input, out;
  double z_th = 0.0;
};

void run(const options& o) {
  const auto g = hb::load_cooccurrence(o.input);
  const auto pruned = hb::prune(g, o.z_th);
  hb::save_pruned(o.out, pruned);
  std::cout << "pairs=" << g.pairs.size() << " surviving=" << pruned.pairs.size() << "\n";
}

}  // namespace

void register_prune(CLI::App& app) {
  auto* sub = app.add_subcommand("prune", "drop co-occurrence pairs below a z-score threshold");
  auto o = std::make_shared<options>();
  sub->add_option("--input", o->input, "co-occurrence file")->required();
  sub->add_option("--z-th", o->z_th, "z-score threshold")->required();
  sub->add_option("--out", o->out, "pruned output file")->required();
  sub->callback([o] { run(*o); });
}
