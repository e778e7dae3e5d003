#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hb/backbone.hpp"
#include "hb/dag.hpp"
#include "hb/hierarchy.hpp"
#include "hb/io.hpp"

namespace hb {

struct dot_options {
  // With a reference, edges the reference connects by a directed path are
  // drawn in blue ("documented"), the rest in red ("inferred").
  const reference_hierarchy* reference = nullptr;
  bool size_by_frequency = true;
};

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (const char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

// Graphviz rendering of a backbone.  Node width tracks tag frequency;
// every edge carries its strength as a tooltip-friendly label attribute.
inline std::string to_dot(const hierarchical_backbone& h, const dot_options& options = {}) {
  std::vector<bool> in_use(h.tags.size(), false);
  std::uint64_t max_frequency = 1;
  for (const auto& e : h.edges) {
    in_use[e.parent] = in_use[e.child] = true;
    max_frequency = std::max({max_frequency, e.n_parent, e.n_child});
  }

  std::optional<dag::closure> reference_closure;
  if (options.reference)
    reference_closure.emplace(options.reference->terms.size(), options.reference->edge_pairs());

  std::string out = "digraph backbone {\n";
  out += "  rankdir=TB;\n  node [shape=ellipse, style=filled, fillcolor=\"#f0f0f0\"];\n";

  std::vector<std::uint64_t> frequency(h.tags.size(), 0);
  for (const auto& e : h.edges) {
    frequency[e.parent] = e.n_parent;
    frequency[e.child] = e.n_child;
  }
  for (std::uint32_t t = 0; t < h.tags.size(); ++t) {
    if (!in_use[t]) continue;
    out += "  \"" + detail::dot_escape(h.tags.name(t)) + "\"";
    if (options.size_by_frequency) {
      const double rel = static_cast<double>(frequency[t]) / static_cast<double>(max_frequency);
      const double width = 0.4 + 1.6 * std::sqrt(rel);
      out += " [width=" + fmt_double(width) + ", fixedsize=false]";
    }
    out += ";\n";
  }

  for (const auto& e : h.edges) {
    out += "  \"" + detail::dot_escape(h.tags.name(e.parent)) + "\" -> \"" +
           detail::dot_escape(h.tags.name(e.child)) + "\"";
    out += " [label=\"" + fmt_double(e.alpha) + "\"";
    if (options.reference) {
      const auto parent = options.reference->terms.find(h.tags.name(e.parent));
      const auto child = options.reference->terms.find(h.tags.name(e.child));
      const bool documented = parent && child && reference_closure->reachable(*parent, *child);
      out += documented ? ", color=\"#1f77b4\"" : ", color=\"#d62728\"";
    }
    out += "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace hb
