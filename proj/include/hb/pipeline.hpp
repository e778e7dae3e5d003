#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hb/backbone.hpp"
#include "hb/benchmark.hpp"
#include "hb/bipartite.hpp"
#include "hb/cooccurrence.hpp"
#include "hb/errors.hpp"
#include "hb/evaluate.hpp"
#include "hb/gaf.hpp"
#include "hb/io.hpp"
#include "hb/manifest.hpp"
#include "hb/obo.hpp"
#include "hb/prune.hpp"
#include "hb/report_io.hpp"

namespace hb {

// An error wrapped with the name of the pipeline stage it escaped from.
struct pipeline_error : error {
  pipeline_error(const std::string& stage, const std::string& message)
      : error("stage " + stage + ": " + message), stage_name(stage) {}
  std::string stage_name;
};

namespace detail {

/**
 * Tracks output writes so a failing run leaves no partial artifacts:
 * everything already written is removed before the error escapes.
 */
class staged_writer {
 public:
  explicit staged_writer(std::string out_dir) : dir_(std::move(out_dir)) {
    if (dir_.empty()) throw config_error("output directory required");
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw io_error("cannot create output directory " + dir_);
  }

  std::string path(const std::string& name) const {
    return (std::filesystem::path(dir_) / name).string();
  }

  void write(run_manifest& manifest, const std::string& name, std::string_view content) {
    const auto full = path(name);
    manifest.write_output(full, content);
    written_.push_back(full);
  }

  void discard_written() {
    for (const auto& p : written_) std::remove(p.c_str());
    written_.clear();
  }

 private:
  std::string dir_;
  std::vector<std::string> written_;
};

template <typename F>
auto run_stage(const char* name, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const pipeline_error&) {
    throw;
  } catch (const error& e) {
    throw pipeline_error(name, e.what());
  }
}

// Strength values of every orientable pair, descending.
inline std::vector<double> candidate_alphas(const pruned_graph& g) {
  std::vector<double> alphas;
  alphas.reserve(g.pairs.size());
  for (const auto& p : g.pairs) {
    const auto s = hierarchy_strength(g.tag_frequency[p.u], g.tag_frequency[p.v], p.n_uv,
                                      g.degree[p.u], g.degree[p.v], g.k_max);
    if (s.direction != flow_direction::none && s.alpha > 0.0) alphas.push_back(s.alpha);
  }
  std::sort(alphas.begin(), alphas.end(), std::greater<>());
  return alphas;
}

}  // namespace detail

// Threshold that admits at least target_edges edges: the target-th largest
// strength (ties may admit more).  Falls back to the smallest strength
// when fewer candidates exist, and to 1.0 (above every attainable
// strength, hence an empty backbone) when no pair is orientable at all.
inline double alpha_for_target_edges(const pruned_graph& g, std::uint64_t target_edges) {
  if (target_edges == 0) throw config_error("target edge count must be positive");
  const auto alphas = detail::candidate_alphas(g);
  if (alphas.empty()) return 1.0;
  if (alphas.size() <= target_edges) return alphas.back();
  return alphas[target_edges - 1];
}

// ---------------------------------------------------------------------------
// End-to-end extraction: input table -> projection -> pruning -> backbone.

struct extract_config {
  enum class source { tsv, obo_gaf };
  source format = source::tsv;

  std::string input_path;  // object-tag TSV
  tsv_options tsv;

  std::string obo_path;
  std::vector<std::pair<std::string, std::string>> gaf_inputs;  // (species, path)
  std::optional<go_domain> domain;
  std::set<std::string> obo_relations = {"is_a", "part_of"};
  std::set<std::string> evidence_include;
  std::set<std::string> evidence_exclude;

  double z_th = 0.0;
  std::optional<double> alpha_th;
  std::optional<std::uint64_t> target_edges;
  bool parsimonious = false;

  std::string out_dir;
};

struct extract_result {
  std::uint64_t n_objects = 0;
  std::uint64_t n_tags = 0;
  std::uint64_t n_pairs = 0;
  std::uint64_t n_surviving = 0;
  double alpha_th_effective = 0.0;
  hierarchical_backbone backbone;
  merge_stats annotations;  // populated for obo+gaf input
};

inline extract_result run_extract(const extract_config& config) {
  if (config.alpha_th.has_value() == config.target_edges.has_value())
    throw config_error("exactly one of alpha_th and target_edges must be set");
  if (config.format == extract_config::source::obo_gaf) {
    if (config.obo_path.empty() || config.gaf_inputs.empty())
      throw config_error("ontology and annotation paths required for obo+gaf input");
    if (!config.domain) throw config_error("namespace required for obo+gaf input");
  } else if (config.input_path.empty()) {
    throw config_error("input path required");
  }

  run_manifest manifest("extract");
  detail::staged_writer out(config.out_dir);
  extract_result result;

  try {
    const auto graph = detail::run_stage("ingest", [&] {
      if (config.format == extract_config::source::tsv) {
        manifest.add_input(config.input_path);
        return load_bipartite_tsv(config.input_path, config.tsv);
      }
      manifest.add_input(config.obo_path);
      const auto parsed = parse_obo(config.obo_path, {config.obo_relations});
      const auto reference = filter_namespace(parsed, *config.domain);
      std::vector<species_annotations> sets;
      for (const auto& [species, path] : config.gaf_inputs) {
        manifest.add_input(path);
        sets.push_back({species, parse_gaf(path)});
      }
      merge_options merge;
      merge.domain = *config.domain;
      merge.evidence_include = config.evidence_include;
      merge.evidence_exclude = config.evidence_exclude;
      return merge_annotations(std::move(sets), reference, merge, &result.annotations);
    });
    result.n_objects = graph.objects.size();
    result.n_tags = graph.tags.size();

    const auto cooccurrence = detail::run_stage("project", [&] { return project(graph); });
    result.n_pairs = cooccurrence.pairs.size();

    const auto pruned =
        detail::run_stage("prune", [&] { return hb::prune(cooccurrence, config.z_th); });
    result.n_surviving = pruned.pairs.size();

    detail::run_stage("backbone", [&] {
      result.alpha_th_effective =
          config.alpha_th ? *config.alpha_th : alpha_for_target_edges(pruned, *config.target_edges);
      auto backbone = build_backbone(pruned, result.alpha_th_effective);
      result.backbone = config.parsimonious ? transitive_reduce(backbone) : std::move(backbone);
      return 0;
    });

    detail::run_stage("write", [&] {
      manifest.set_config("z_th", config.z_th);
      manifest.set_config("alpha_th", result.alpha_th_effective);
      if (config.target_edges) manifest.set_config("target_edges", *config.target_edges);
      manifest.set_config("parsimonious", config.parsimonious);
      if (config.domain) manifest.set_config("namespace", to_string(*config.domain));

      out.write(manifest, "cooccurrence.tsv", cooccurrence_tsv(cooccurrence));
      out.write(manifest, "tags.tsv",
                tag_frequency_tsv(cooccurrence.tags, cooccurrence.tag_frequency));
      out.write(manifest, "pruned.tsv", pruned_tsv(pruned));
      out.write(manifest, "backbone.tsv", backbone_tsv(result.backbone));
      if (config.parsimonious)
        out.write(manifest, "backbone_audit.tsv", backbone_audit_tsv(result.backbone));
      manifest.save(out.path("manifest.json"));
      return 0;
    });
  } catch (...) {
    out.discard_written();
    throw;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Benchmark study: generate ensembles, extract, score against the truth.

struct benchmark_eval_config {
  std::string hierarchy_path;   // recorded in the manifest when non-empty
  benchmark_config generation;  // ensemble_index names the first ensemble
  std::uint32_t n_ensembles = 1;
  double z_th = 0.0;
  std::vector<double> alpha_grid;
  eval_mode mode = eval_mode::edge;
  eval_options eval;
  bool parsimonious = false;
  std::string out_dir;
  bool write_graphs = true;
};

struct benchmark_eval_result {
  std::vector<eval_report> reports;        // n_ensembles x grid points
  std::vector<eval_aggregate> aggregates;  // grouped over ensembles
};

inline benchmark_eval_result run_benchmark_eval(const reference_hierarchy& reference,
                                                const benchmark_eval_config& config) {
  validate_alpha_grid(config.alpha_grid);
  if (config.n_ensembles == 0) throw config_error("n_ensembles must be positive");

  run_manifest manifest("benchmark");
  detail::staged_writer out(config.out_dir);
  benchmark_eval_result result;

  try {
    if (!config.hierarchy_path.empty()) manifest.add_input(config.hierarchy_path);
    const reference_scorer scorer(reference);

    for (std::uint32_t e = 0; e < config.n_ensembles; ++e) {
      auto generation = config.generation;
      generation.ensemble_index += e;

      const auto graph =
          detail::run_stage("generate", [&] { return generate_benchmark(reference, generation); });
      if (config.write_graphs)
        detail::run_stage("write", [&] {
          out.write(manifest, "bipartite_" + std::to_string(generation.ensemble_index) + ".tsv",
                    bipartite_tsv(graph));
          return 0;
        });

      const auto cooccurrence = detail::run_stage("project", [&] { return project(graph); });
      const auto pruned =
          detail::run_stage("prune", [&] { return hb::prune(cooccurrence, config.z_th); });

      detail::run_stage("evaluate", [&] {
        for (const auto alpha : config.alpha_grid) {
          auto backbone = build_backbone(pruned, alpha);
          if (config.parsimonious) backbone = transitive_reduce(backbone);
          auto report = scorer.score(backbone, config.mode, config.eval);
          report.ensemble = generation.ensemble_index;
          result.reports.push_back(std::move(report));
        }
        return 0;
      });
    }

    result.aggregates = aggregate_reports(result.reports);

    detail::run_stage("write", [&] {
      manifest.set_config("seed", config.generation.seed);
      manifest.set_config("first_ensemble", config.generation.ensemble_index);
      manifest.set_config("n_ensembles", config.n_ensembles);
      manifest.set_config("n_products", config.generation.n_products);
      manifest.set_config("p_rw", config.generation.p_rw);
      manifest.set_config("z_th", config.z_th);
      manifest.set_config("alpha_grid", config.alpha_grid);
      manifest.set_config("mode", to_string(config.mode));
      manifest.set_config("parsimonious", config.parsimonious);

      out.write(manifest, "eval.csv", eval_csv(result.reports));
      out.write(manifest, "eval.jsonl", eval_jsonl(result.reports));
      out.write(manifest, "eval_aggregate.csv", aggregate_csv(result.aggregates));
      manifest.save(out.path("manifest.json"));
      return 0;
    });
  } catch (...) {
    out.discard_written();
    throw;
  }
  return result;
}

}  // namespace hb
