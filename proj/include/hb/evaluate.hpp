#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <unordered_set>
#include <vector>

#include "hb/backbone.hpp"
#include "hb/dag.hpp"
#include "hb/errors.hpp"
#include "hb/hierarchy.hpp"

namespace hb {

enum class eval_mode { edge, path };

inline const char* to_string(eval_mode m) { return m == eval_mode::edge ? "edge" : "path"; }

struct eval_options {
  // When set, the recall denominator counts only reference edges whose
  // endpoints both occur among the predicted graph's known tags, so terms
  // the data never mentions do not count as misses.
  bool restrict_to_observed = false;
};

struct eval_report {
  eval_mode mode = eval_mode::edge;
  double alpha_th = 0.0;
  double z_th = 0.0;
  std::uint32_t ensemble = 0;  // filled by callers that score several runs

  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t n_predicted = 0;
  std::uint64_t n_reference = 0;   // reference edges in the recall denominator
  std::uint64_t n_negatives = 0;   // ordered pairs that are not reference positives
  std::uint64_t recovered = 0;     // distinct reference edges found

  double precision = 1.0;  // 1.0 by convention for an empty prediction
  double recall = 0.0;
  double tpr = 0.0;
  double fpr = 0.0;
  bool empty_prediction = true;

  std::vector<std::string> unknown_tags;  // predicted tags absent from the reference
};

/**
 * Scores backbones against one reference hierarchy.  Building the scorer
 * caches the reference edge set and reachability table so a threshold
 * sweep pays the closure cost once.
 *
 * Edge mode: a predicted edge is a true positive iff it is literally a
 * reference edge; negatives are all other ordered term pairs.
 * Path mode: a predicted edge is a true positive iff the reference has a
 * directed path between its endpoints, and a reference edge counts as
 * recovered iff the predicted graph has a directed path between its
 * endpoints; negatives are the ordered pairs with no reference path.
 */
class reference_scorer {
 public:
  explicit reference_scorer(const reference_hierarchy& reference)
      : reference_(&reference),
        closure_(reference.terms.size(), reference.edge_pairs()),
        closed_pairs_(closure_.reachable_pair_count()) {
    for (const auto& e : reference.edges)
      edge_set_.insert((static_cast<std::uint64_t>(e.parent) << 32) | e.child);
  }

  eval_report score(const hierarchical_backbone& predicted, eval_mode mode,
                    const eval_options& options = {}) const {
    const auto& ref = *reference_;
    eval_report r;
    r.mode = mode;
    r.alpha_th = predicted.alpha_th;
    r.z_th = predicted.z_th;
    r.n_predicted = predicted.edges.size();
    r.empty_prediction = predicted.edges.empty();

    const auto n_terms = static_cast<std::uint64_t>(ref.terms.size());
    const std::uint64_t ordered_pairs = n_terms * (n_terms - 1);
    r.n_negatives = mode == eval_mode::edge ? ordered_pairs - ref.edges.size()
                                            : ordered_pairs - closed_pairs_;

    // Precision side: classify each predicted edge in reference id space.
    std::unordered_set<std::string> unknown;
    for (const auto& e : predicted.edges) {
      const auto parent = ref.terms.find(predicted.tags.name(e.parent));
      const auto child = ref.terms.find(predicted.tags.name(e.child));
      if (!parent || !child) {
        if (!parent) unknown.insert(predicted.tags.name(e.parent));
        if (!child) unknown.insert(predicted.tags.name(e.child));
        ++r.fp;
        continue;
      }
      const bool hit = mode == eval_mode::edge
                           ? edge_set_.count((static_cast<std::uint64_t>(*parent) << 32) | *child) > 0
                           : closure_.reachable(*parent, *child);
      if (hit)
        ++r.tp;
      else
        ++r.fp;
    }
    r.unknown_tags.assign(unknown.begin(), unknown.end());
    std::sort(r.unknown_tags.begin(), r.unknown_tags.end());

    // Recall side: which reference edges does the prediction recover?
    std::optional<dag::closure> predicted_closure;
    if (mode == eval_mode::path) {
      dag::edge_list edges;
      edges.reserve(predicted.edges.size());
      for (const auto& e : predicted.edges) edges.emplace_back(e.parent, e.child);
      predicted_closure.emplace(predicted.tags.size(), edges);
    }
    for (const auto& e : ref.edges) {
      const auto parent = predicted.tags.find(ref.terms.name(e.parent));
      const auto child = predicted.tags.find(ref.terms.name(e.child));
      const bool observed = parent && child;
      if (options.restrict_to_observed && !observed) continue;
      ++r.n_reference;
      if (!observed) continue;
      bool found;
      if (mode == eval_mode::edge) {
        const std::pair<std::uint32_t, std::uint32_t> key{*parent, *child};
        auto it = std::lower_bound(predicted.edges.begin(), predicted.edges.end(), key,
                                   [](const backbone_edge& e, const auto& k) {
                                     return e.parent < k.first ||
                                            (e.parent == k.first && e.child < k.second);
                                   });
        found = it != predicted.edges.end() && it->parent == key.first && it->child == key.second;
      } else {
        found = predicted_closure->reachable(*parent, *child);
      }
      if (found) ++r.recovered;
    }

    r.precision = r.n_predicted == 0 ? 1.0
                                     : static_cast<double>(r.tp) / static_cast<double>(r.n_predicted);
    r.recall = r.n_reference == 0 ? 1.0
                                  : static_cast<double>(r.recovered) / static_cast<double>(r.n_reference);
    r.tpr = r.recall;
    r.fpr = r.n_negatives == 0 ? 0.0
                               : static_cast<double>(r.fp) / static_cast<double>(r.n_negatives);
    return r;
  }

 private:
  const reference_hierarchy* reference_;
  dag::closure closure_;
  std::uint64_t closed_pairs_;
  std::unordered_set<std::uint64_t> edge_set_;
};

inline eval_report score_backbone(const hierarchical_backbone& predicted,
                                  const reference_hierarchy& reference, eval_mode mode,
                                  const eval_options& options = {}) {
  return reference_scorer(reference).score(predicted, mode, options);
}

// A threshold grid must be non-empty, strictly increasing and positive.
inline void validate_alpha_grid(const std::vector<double>& alpha_grid) {
  if (alpha_grid.empty()) throw config_error("empty alpha grid");
  for (std::size_t i = 0; i < alpha_grid.size(); ++i) {
    if (!(alpha_grid[i] > 0.0)) throw config_error("alpha grid values must be positive");
    if (i > 0 && !(alpha_grid[i] > alpha_grid[i - 1]))
      throw config_error("alpha grid must be strictly increasing");
  }
}

// One report per grid point.
inline std::vector<eval_report> sweep_alpha(const pruned_graph& g,
                                            const reference_hierarchy& reference,
                                            const std::vector<double>& alpha_grid, eval_mode mode,
                                            const eval_options& options = {}) {
  validate_alpha_grid(alpha_grid);
  const reference_scorer scorer(reference);
  std::vector<eval_report> reports;
  reports.reserve(alpha_grid.size());
  for (const auto alpha : alpha_grid)
    reports.push_back(scorer.score(build_backbone(g, alpha), mode, options));
  return reports;
}

struct eval_aggregate {
  eval_mode mode = eval_mode::edge;
  double alpha_th = 0.0;
  double z_th = 0.0;
  std::uint32_t n = 0;  // reports aggregated
  double precision_mean = 0.0, precision_stderr = 0.0;
  double recall_mean = 0.0, recall_stderr = 0.0;
  double tpr_mean = 0.0, tpr_stderr = 0.0;
  double fpr_mean = 0.0, fpr_stderr = 0.0;
};

// Mean and standard error over reports sharing (mode, alpha_th, z_th),
// usually one report per ensemble.  Output sorted by mode then threshold.
inline std::vector<eval_aggregate> aggregate_reports(const std::vector<eval_report>& reports) {
  if (reports.empty()) throw empty_input_error("aggregate_reports: no reports");

  auto sorted = reports;
  std::sort(sorted.begin(), sorted.end(), [](const eval_report& a, const eval_report& b) {
    if (a.mode != b.mode) return a.mode < b.mode;
    if (a.alpha_th != b.alpha_th) return a.alpha_th < b.alpha_th;
    return a.z_th < b.z_th;
  });

  std::vector<eval_aggregate> out;
  std::size_t start = 0;
  while (start < sorted.size()) {
    std::size_t stop = start;
    while (stop < sorted.size() && sorted[stop].mode == sorted[start].mode &&
           sorted[stop].alpha_th == sorted[start].alpha_th && sorted[stop].z_th == sorted[start].z_th)
      ++stop;

    eval_aggregate agg;
    agg.mode = sorted[start].mode;
    agg.alpha_th = sorted[start].alpha_th;
    agg.z_th = sorted[start].z_th;
    agg.n = static_cast<std::uint32_t>(stop - start);

    const auto stats = [&](auto field, double& mean, double& stderr_out) {
      double sum = 0.0;
      for (std::size_t i = start; i < stop; ++i) sum += field(sorted[i]);
      mean = sum / static_cast<double>(agg.n);
      if (agg.n < 2) {
        stderr_out = 0.0;
        return;
      }
      double ss = 0.0;
      for (std::size_t i = start; i < stop; ++i) {
        const double d = field(sorted[i]) - mean;
        ss += d * d;
      }
      stderr_out = std::sqrt(ss / static_cast<double>(agg.n - 1)) /
                   std::sqrt(static_cast<double>(agg.n));
    };
    stats([](const eval_report& r) { return r.precision; }, agg.precision_mean, agg.precision_stderr);
    stats([](const eval_report& r) { return r.recall; }, agg.recall_mean, agg.recall_stderr);
    stats([](const eval_report& r) { return r.tpr; }, agg.tpr_mean, agg.tpr_stderr);
    stats([](const eval_report& r) { return r.fpr; }, agg.fpr_mean, agg.fpr_stderr);
    out.push_back(agg);
    start = stop;
  }
  return out;
}

}  // namespace hb
