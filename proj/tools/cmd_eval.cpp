#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <string>

#include "hb/evaluate.hpp"
#include "hb/io.hpp"
#include "hb/report_io.hpp"

namespace {

struct options {
  std::string backbone, reference, out, jsonl;
  std::string mode = "edge";
  bool restrict_to_observed = false;
};

void run(const options& o) {
  const auto predicted = hb::load_backbone(o.backbone);
  const auto reference = hb::load_hierarchy_tsv(o.reference);
  const auto mode = o.mode == "edge" ? hb::eval_mode::edge : hb::eval_mode::path;
  hb::eval_options eval;
  eval.restrict_to_observed = o.restrict_to_observed;

  const auto report = hb::score_backbone(predicted, reference, mode, eval);
  hb::write_file_atomic(o.out, hb::eval_csv({report}));
  if (!o.jsonl.empty()) hb::write_file_atomic(o.jsonl, hb::eval_jsonl({report}));
  std::cout << "tp=" << report.tp << " fp=" << report.fp
            << " precision=" << hb::fmt_double(report.precision)
            << " recall=" << hb::fmt_double(report.recall) << "\n";
}

}  // namespace

void register_eval(CLI::App& app) {
  auto* sub = app.add_subcommand("eval", "score a backbone against a reference hierarchy");
  auto o = std::make_shared<options>();
  sub->add_option("--backbone", o->backbone, "backbone file")->required();
  sub->add_option("--reference", o->reference, "parent-child reference file")->required();
  sub->add_option("--mode", o->mode, "edge or path")->check(CLI::IsMember({"edge", "path"}));
  sub->add_flag("--restrict-to-observed", o->restrict_to_observed,
                "count only reference edges between observed tags");
  sub->add_option("--out", o->out, "report CSV output")->required();
  sub->add_option("--jsonl", o->jsonl, "full report JSONL output");
  sub->callback([o] { run(*o); });
}
