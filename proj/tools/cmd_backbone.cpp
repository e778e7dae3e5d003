#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "hb/backbone.hpp"
#include "hb/io.hpp"
#include "hb/pipeline.hpp"

namespace {

struct options {
  std::string input, out, audit_out;
  std::optional<double> alpha_th;
  std::optional<std::uint64_t> target_edges;
  bool parsimonious = false;
};

void run(const options& o) {
  if (o.alpha_th.has_value() == o.target_edges.has_value())
    throw hb::config_error("exactly one of --alpha-th and --target-edges must be set");
  const auto g = hb::load_pruned(o.input);
  const auto alpha = o.alpha_th ? *o.alpha_th : hb::alpha_for_target_edges(g, *o.target_edges);
  auto h = hb::build_backbone(g, alpha);
  if (o.parsimonious) h = hb::transitive_reduce(h);
  hb::save_backbone(o.out, h);
  if (!o.audit_out.empty()) hb::save_backbone_audit(o.audit_out, h);
  if (h.edges.empty()) std::cerr << "warning: backbone is empty\n";
  std::cout << "edges=" << h.edges.size() << " removed=" << h.removed.size()
            << " alpha_th=" << hb::fmt_double(alpha) << "\n";
}

}  // namespace

void register_backbone(CLI::App& app) {
  auto* sub = app.add_subcommand("backbone", "orient strong pairs into a hierarchical backbone");
  auto o = std::make_shared<options>();
  sub->add_option("--input", o->input, "pruned pair file")->required();
  sub->add_option("--alpha-th", o->alpha_th, "strength threshold");
  sub->add_option("--target-edges", o->target_edges, "pick the threshold admitting this many edges");
  sub->add_flag("--parsimonious", o->parsimonious, "remove transitively implied edges");
  sub->add_option("--out", o->out, "backbone output file")->required();
  sub->add_option("--audit-out", o->audit_out, "removed-edge audit file");
  sub->callback([o] { run(*o); });
}
