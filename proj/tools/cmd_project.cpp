#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"
#include "hb/bipartite.hpp"
#include "hb/cooccurrence.hpp"
#include "hb/gaf.hpp"
#include "hb/io.hpp"
#include "hb/obo.hpp"

namespace {

struct options {
  std::string input;
  std::string format = "tsv";
  std::string object_col = "1", tag_col = "2", delimiter = "\t";
  bool header = false;
  std::string obo;
  std::vector<std::string> gaf;
  std::string ns;
  std::vector<std::string> relations;
  std::vector<std::string> evidence_include, evidence_exclude;
  std::string out, tags_out;
};

hb::bipartite_graph load(const options& o) {
  if (o.format == "tsv") {
    if (o.input.empty()) throw hb::config_error("--input required for tsv input");
    hb::tsv_options tsv;
    tsv.delimiter = cli::delimiter_from(o.delimiter);
    tsv.header = o.header;
    tsv.object_column = o.object_col;
    tsv.tag_column = o.tag_col;
    return hb::load_bipartite_tsv(o.input, tsv);
  }

  if (o.obo.empty() || o.gaf.empty())
    throw hb::config_error("--obo and --gaf required for obo+gaf input");
  if (o.ns.empty()) throw hb::config_error("--namespace required for obo+gaf input");
  hb::obo_options obo_opts;
  if (!o.relations.empty()) obo_opts.relations = {o.relations.begin(), o.relations.end()};
  const auto domain = cli::domain_from(o.ns);
  const auto reference = hb::filter_namespace(hb::parse_obo(o.obo, obo_opts), domain);

  std::vector<hb::species_annotations> sets;
  for (const auto& spec : o.gaf) {
    auto [species, path] = cli::split_gaf_spec(spec);
    sets.push_back({std::move(species), hb::parse_gaf(path)});
  }
  hb::merge_options merge;
  merge.domain = domain;
  merge.evidence_include = {o.evidence_include.begin(), o.evidence_include.end()};
  merge.evidence_exclude = {o.evidence_exclude.begin(), o.evidence_exclude.end()};
  hb::merge_stats stats;
  auto graph = hb::merge_annotations(std::move(sets), reference, merge, &stats);
  std::cerr << "annotations: used " << stats.rows_used << " of " << stats.rows_in << " rows\n";
  return graph;
}

void run(const options& o) {
  const auto g = hb::project(load(o));
  hb::save_cooccurrence(o.out, g);
  if (!o.tags_out.empty()) hb::save_tag_frequencies(o.tags_out, g.tags, g.tag_frequency);
  std::cout << "objects=" << g.n_objects << " tags=" << g.tags.size() << " pairs=" << g.pairs.size()
            << "\n";
}

}  // namespace

void register_project(CLI::App& app) {
  auto* sub = app.add_subcommand("project", "one-mode projection of an object-tag table");
  auto o = std::make_shared<options>();
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
  sub->add_option("--out", o->out, "co-occurrence output file")->required();
  sub->add_option("--tags-out", o->tags_out, "tag frequency output file");
  sub->callback([o] { run(*o); });
}
