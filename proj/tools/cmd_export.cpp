#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "hb/dot.hpp"
#include "hb/io.hpp"

namespace {

struct options {
  std::string backbone, reference, out;
  bool no_size = false;
};

void run(const options& o) {
  const auto h = hb::load_backbone(o.backbone);
  std::optional<hb::reference_hierarchy> reference;
  hb::dot_options dot;
  dot.size_by_frequency = !o.no_size;
  if (!o.reference.empty()) {
    reference = hb::load_hierarchy_tsv(o.reference);
    dot.reference = &*reference;
  }
  hb::write_file_atomic(o.out, hb::to_dot(h, dot));
  std::cout << "edges=" << h.edges.size() << "\n";
}

}  // namespace

void register_export(CLI::App& app) {
  auto* sub = app.add_subcommand("export", "render a backbone as a Graphviz DOT file");
  auto o = std::make_shared<options>();
  sub->add_option("--backbone", o->backbone, "backbone file")->required();
  sub->add_option("--reference", o->reference, "colour edges by reference reachability");
  sub->add_flag("--no-size", o->no_size, "uniform node sizes");
  sub->add_option("--out", o->out, "DOT output file")->required();
  sub->callback([o] { run(*o); });
}
