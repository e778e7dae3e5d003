#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"
#include "hb/pipeline.hpp"

namespace {

struct options {
  bool benchmark = false;

  std::string input;
  std::string format = "tsv";
  std::string object_col = "1", tag_col = "2", delimiter = "\t";
  bool header = false;
  std::string obo;
  std::vector<std::string> gaf;
  std::string ns;
  std::vector<std::string> relations;
  std::vector<std::string> evidence_include, evidence_exclude;
  std::optional<double> alpha_th;
  std::optional<std::uint64_t> target_edges;
  double z_th = 0.0;
  bool parsimonious = false;
  std::string out_dir;

  std::string hierarchy;
  std::uint64_t seed = 0;
  std::uint32_t first_ensemble = 0;
  std::uint32_t ensembles = 1;
  std::uint64_t n_products = 0;
  double p_rw = 0.0;
  std::string alpha_grid;
  std::string mode = "edge";
  bool restrict_to_observed = false;
  bool no_graphs = false;
};

void run_extract_command(const options& o) {
  hb::extract_config config;
  if (o.format == "obo+gaf") {
    config.format = hb::extract_config::source::obo_gaf;
    config.obo_path = o.obo;
    for (const auto& spec : o.gaf) config.gaf_inputs.push_back(cli::split_gaf_spec(spec));
    if (!o.ns.empty()) config.domain = cli::domain_from(o.ns);
    if (!o.relations.empty()) config.obo_relations = {o.relations.begin(), o.relations.end()};
    config.evidence_include = {o.evidence_include.begin(), o.evidence_include.end()};
    config.evidence_exclude = {o.evidence_exclude.begin(), o.evidence_exclude.end()};
  } else {
    config.input_path = o.input;
    config.tsv.delimiter = cli::delimiter_from(o.delimiter);
    config.tsv.header = o.header;
    config.tsv.object_column = o.object_col;
    config.tsv.tag_column = o.tag_col;
  }
  config.z_th = o.z_th;
  config.alpha_th = o.alpha_th;
  config.target_edges = o.target_edges;
  config.parsimonious = o.parsimonious;
  config.out_dir = o.out_dir;

  const auto result = hb::run_extract(config);
  if (result.backbone.edges.empty()) std::cerr << "warning: backbone is empty\n";
  std::cout << "objects=" << result.n_objects << " tags=" << result.n_tags
            << " pairs=" << result.n_pairs << " surviving=" << result.n_surviving
            << " edges=" << result.backbone.edges.size()
            << " alpha_th=" << hb::fmt_double(result.alpha_th_effective) << "\n";
}

void run_benchmark_command(const options& o) {
  if (o.hierarchy.empty()) throw hb::config_error("--hierarchy required with --benchmark");
  if (o.alpha_grid.empty()) throw hb::config_error("--alpha-grid required with --benchmark");
  const auto reference = hb::load_hierarchy_tsv(o.hierarchy);

  hb::benchmark_eval_config config;
  config.hierarchy_path = o.hierarchy;
  config.generation.seed = o.seed;
  config.generation.ensemble_index = o.first_ensemble;
  config.generation.n_products = o.n_products;
  config.generation.p_rw = o.p_rw;
  config.n_ensembles = o.ensembles;
  config.z_th = o.z_th;
  config.alpha_grid = cli::grid_from(o.alpha_grid);
  config.mode = o.mode == "edge" ? hb::eval_mode::edge : hb::eval_mode::path;
  config.eval.restrict_to_observed = o.restrict_to_observed;
  config.parsimonious = o.parsimonious;
  config.out_dir = o.out_dir;
  config.write_graphs = !o.no_graphs;

  const auto result = hb::run_benchmark_eval(reference, config);
  std::cout << "ensembles=" << o.ensembles << " grid_points=" << config.alpha_grid.size()
            << " reports=" << result.reports.size() << "\n";
}

void run(const options& o) {
  if (o.benchmark)
    run_benchmark_command(o);
  else
    run_extract_command(o);
}

}  // namespace

void register_pipeline(CLI::App& app) {
  auto* sub = app.add_subcommand(
      "pipeline", "run extraction end to end, or a benchmark study with --benchmark");
  auto o = std::make_shared<options>();
  sub->add_flag("--benchmark", o->benchmark, "generate, extract and score synthetic ensembles");

  sub->add_option("--input", o->input, "object-tag table");
  sub->add_option("--format", o->format, "tsv or obo+gaf")
      ->check(CLI::IsMember({"tsv", "obo+gaf"}));
  sub->add_option("--object-col", o->object_col, "1-based index or header name");
  sub->add_option("--tag-col", o->tag_col, "1-based index or header name");
  sub->add_flag("--header", o->header, "first row is a header");
  sub->add_option("--delimiter", o->delimiter, "column separator (default tab)");
  sub->add_option("--obo", o->obo, "ontology file");
  sub->add_option("--gaf", o->gaf, "annotation file as species=path");
  sub->add_option("--namespace", o->ns, "BP, CC or MF");
  sub->add_option("--relations", o->relations, "ontology relations to keep as edges");
  sub->add_option("--evidence-include", o->evidence_include, "evidence codes to keep");
  sub->add_option("--evidence-exclude", o->evidence_exclude, "evidence codes to drop");
  sub->add_option("--z-th", o->z_th, "z-score threshold");
  sub->add_option("--alpha-th", o->alpha_th, "strength threshold");
  sub->add_option("--target-edges", o->target_edges, "pick the threshold admitting this many edges");
  sub->add_flag("--parsimonious", o->parsimonious, "remove transitively implied edges");
  sub->add_option("--out-dir", o->out_dir, "output directory")->required();

  sub->add_option("--hierarchy", o->hierarchy, "parent-child reference file");
  sub->add_option("--seed", o->seed, "top-level random seed");
  sub->add_option("--first-ensemble", o->first_ensemble, "index of the first ensemble");
  sub->add_option("--ensembles", o->ensembles, "number of ensembles");
  sub->add_option("--n-products", o->n_products, "products per ensemble");
  sub->add_option("--p-rw", o->p_rw, "random-walk probability");
  sub->add_option("--alpha-grid", o->alpha_grid, "comma-separated strength thresholds");
  sub->add_option("--mode", o->mode, "edge or path")->check(CLI::IsMember({"edge", "path"}));
  sub->add_flag("--restrict-to-observed", o->restrict_to_observed,
                "count only reference edges between observed tags");
  sub->add_flag("--no-graphs", o->no_graphs, "skip writing the generated object-tag tables");
  sub->callback([o] { run(*o); });
}
