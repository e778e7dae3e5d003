#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <string>

#include "hb/backbone.hpp"
#include "hb/io.hpp"

namespace {

struct options {
  std::string input, out, audit_out;
};

void run(const options& o) {
  const auto h = hb::load_backbone(o.input);
  const auto reduced = hb::transitive_reduce(h);
  hb::save_backbone(o.out, reduced);
  if (!o.audit_out.empty()) hb::save_backbone_audit(o.audit_out, reduced);
  std::cout << "edges=" << reduced.edges.size() << " removed=" << reduced.removed.size() << "\n";
}

}  // namespace

void register_reduce(CLI::App& app) {
  auto* sub = app.add_subcommand("reduce", "transitively reduce an existing backbone");
  auto o = std::make_shared<options>();
  sub->add_option("--input", o->input, "backbone file")->required();
  sub->add_option("--out", o->out, "reduced backbone output file")->required();
  sub->add_option("--audit-out", o->audit_out, "removed-edge audit file");
  sub->callback([o] { run(*o); });
}
