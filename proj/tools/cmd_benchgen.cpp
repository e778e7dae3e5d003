#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <memory>
#include <string>

#include "hb/benchmark.hpp"
#include "hb/io.hpp"

namespace {

struct options {
  std::string hierarchy, out;
  hb::benchmark_config config;
};

void run(const options& o) {
  const auto h = hb::load_hierarchy_tsv(o.hierarchy);
  const auto b = hb::generate_benchmark(h, o.config);
  hb::save_bipartite_tsv(o.out, b);
  std::cout << "products=" << b.objects.size() << " records=" << b.edge_count << "\n";
}

}  // namespace

void register_benchgen(CLI::App& app) {
  auto* sub = app.add_subcommand("benchgen", "generate synthetic annotations from a hierarchy");
  auto o = std::make_shared<options>();
  sub->add_option("--hierarchy", o->hierarchy, "parent-child reference file")->required();
  sub->add_option("--seed", o->config.seed, "top-level random seed");
  sub->add_option("--ensemble-index", o->config.ensemble_index, "which ensemble to generate");
  sub->add_option("--n-products", o->config.n_products, "number of products")->required();
  sub->add_option("--p-rw", o->config.p_rw, "random-walk probability")->required();
  sub->add_option("--tags-min", o->config.tags_min, "fewest tags per product");
  sub->add_option("--tags-max", o->config.tags_max, "most tags per product");
  sub->add_option("--walk-min", o->config.walk_min, "shortest walk length");
  sub->add_option("--walk-max", o->config.walk_max, "longest walk length");
  sub->add_option("--out", o->out, "object-tag output file")->required();
  sub->callback([o] { run(*o); });
}
