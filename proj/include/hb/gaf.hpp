#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "hb/bipartite.hpp"
#include "hb/errors.hpp"
#include "hb/hierarchy.hpp"
#include "hb/obo.hpp"

namespace hb {

struct annotation_record {
  std::string product;   // DB object id, column 2
  std::string term;      // ontology term id, column 5
  go_domain aspect;      // column 9
  std::string evidence;  // evidence code, column 7
};

/**
 * GAF 2.x reader.  Keeps the gene-product id, term id, aspect and evidence
 * code of each annotation line; comment lines start with '!'.  Rows whose
 * qualifier contains NOT are negative statements, not memberships, and are
 * dropped here.  Every data line must have the full 17 columns.
 */
inline std::vector<annotation_record> parse_gaf(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);

  std::vector<annotation_record> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '!') continue;

    std::vector<std::string_view> cols;
    std::string_view rest = line;
    for (;;) {
      const auto tab = rest.find('\t');
      if (tab == std::string_view::npos) {
        cols.push_back(rest);
        break;
      }
      cols.push_back(rest.substr(0, tab));
      rest.remove_prefix(tab + 1);
    }
    if (cols.size() != 17)
      throw parse_error(path + ":" + std::to_string(line_no) + ": expected 17 columns, got " +
                        std::to_string(cols.size()));

    const auto qualifier = cols[3];
    bool negated = false;
    std::string_view q = qualifier;
    while (!q.empty()) {
      const auto bar = q.find('|');
      const auto part = q.substr(0, bar);
      if (part == "NOT") negated = true;
      if (bar == std::string_view::npos) break;
      q.remove_prefix(bar + 1);
    }
    if (negated) continue;

    if (cols[1].empty())
      throw parse_error(path + ":" + std::to_string(line_no) + ": empty gene-product id");
    if (cols[4].empty())
      throw parse_error(path + ":" + std::to_string(line_no) + ": empty term id");
    const auto aspect = parse_go_domain(cols[8]);
    if (!aspect)
      throw parse_error(path + ":" + std::to_string(line_no) + ": unknown aspect '" +
                        std::string(cols[8]) + "'");

    records.push_back({std::string(cols[1]), std::string(cols[4]), *aspect, std::string(cols[6])});
  }
  if (records.empty()) throw empty_input_error(path + ": no annotation rows");
  return records;
}

struct species_annotations {
  std::string species;  // label prefixed onto product ids when merging
  std::vector<annotation_record> records;
};

struct merge_options {
  go_domain domain = go_domain::biological_process;
  // Evidence-code filters; both empty means keep everything.  When
  // include is non-empty only listed codes pass; exclude then removes.
  std::set<std::string> evidence_include;
  std::set<std::string> evidence_exclude;
};

struct merge_stats {
  std::uint64_t rows_in = 0;
  std::uint64_t dropped_aspect = 0;
  std::uint64_t dropped_evidence = 0;
  std::uint64_t dropped_unknown_term = 0;
  std::uint64_t rows_used = 0;
};

/**
 * Merge per-species annotation sets into one object-tag graph for a single
 * namespace.  Objects are keyed "<species>|<product>" so the same product
 * id in two species stays distinct; species are processed in sorted label
 * order so the result does not depend on argument order.  Annotations to
 * terms outside the reference hierarchy are dropped and counted.
 */
inline bipartite_graph merge_annotations(std::vector<species_annotations> sets,
                                         const reference_hierarchy& reference,
                                         const merge_options& options,
                                         merge_stats* stats = nullptr) {
  std::sort(sets.begin(), sets.end(),
            [](const species_annotations& a, const species_annotations& b) {
              return a.species < b.species;
            });

  merge_stats local;
  bipartite_builder builder;
  for (const auto& s : sets) {
    if (s.species.empty()) throw config_error("merge_annotations: empty species label");
    for (const auto& r : s.records) {
      ++local.rows_in;
      if (r.aspect != options.domain) {
        ++local.dropped_aspect;
        continue;
      }
      if (!options.evidence_include.empty() && !options.evidence_include.count(r.evidence)) {
        ++local.dropped_evidence;
        continue;
      }
      if (options.evidence_exclude.count(r.evidence)) {
        ++local.dropped_evidence;
        continue;
      }
      if (!reference.terms.contains(r.term)) {
        ++local.dropped_unknown_term;
        continue;
      }
      builder.add(s.species + "|" + r.product, r.term);
      ++local.rows_used;
    }
  }
  if (stats) *stats = local;
  if (local.rows_used == 0)
    throw empty_input_error("no annotations survive the namespace and evidence filters");
  return builder.finish();
}

}  // namespace hb
