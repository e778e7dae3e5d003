#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hb/errors.hpp"
#include "hb/hierarchy.hpp"

namespace hb {

enum class go_domain {
  biological_process,
  cellular_component,
  molecular_function,
};

inline const char* to_string(go_domain d) {
  switch (d) {
    case go_domain::biological_process: return "biological_process";
    case go_domain::cellular_component: return "cellular_component";
    case go_domain::molecular_function: return "molecular_function";
  }
  return "?";
}

// Accepts the long namespace names, the GAF aspect letters P/C/F and the
// usual abbreviations BP/CC/MF.
inline std::optional<go_domain> parse_go_domain(std::string_view s) {
  if (s == "biological_process" || s == "P" || s == "BP") return go_domain::biological_process;
  if (s == "cellular_component" || s == "C" || s == "CC") return go_domain::cellular_component;
  if (s == "molecular_function" || s == "F" || s == "MF") return go_domain::molecular_function;
  return std::nullopt;
}

struct ontology_term {
  std::string id;
  std::string name;
  go_domain domain = go_domain::biological_process;
  bool obsolete = false;
};

struct obo_options {
  // Relation types imported as parent links.  Every is_a and relationship
  // line parses; only listed types become edges.
  std::set<std::string> relations = {"is_a", "part_of"};
};

struct obo_result {
  std::vector<ontology_term> terms;  // every [Term] stanza, in file order
  reference_hierarchy hierarchy;     // non-obsolete terms, imported edges
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Strip an OBO trailing comment (unescaped '!').
inline std::string_view strip_obo_comment(std::string_view s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '!' && (i == 0 || s[i - 1] != '\\')) return s.substr(0, i);
  }
  return s;
}

}  // namespace detail

/**
 * Minimal OBO 1.2 reader covering ontology term stanzas.  Understands the
 * id, name, namespace, is_a, relationship and is_obsolete tags; stanzas
 * other than [Term] and all remaining tags are ignored.  Obsolete terms
 * are kept in the term table but excluded from the hierarchy along with
 * their edges.  An imported edge naming an id that never appears as a
 * stanza is an integrity error.
 */
inline obo_result parse_obo(const std::string& path, const obo_options& options = {}) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);

  struct raw_term {
    ontology_term term;
    bool has_namespace = false;
    std::vector<std::pair<std::string, std::string>> parents;  // (relation, parent id)
    std::size_t line = 0;
  };
  std::vector<raw_term> stanzas;
  bool in_term = false;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto text = detail::trim(detail::strip_obo_comment(line));
    if (text.empty()) continue;
    if (text.front() == '[') {
      in_term = text == "[Term]";
      if (in_term) {
        stanzas.emplace_back();
        stanzas.back().line = line_no;
      }
      continue;
    }
    if (!in_term) continue;

    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
      throw parse_error(path + ":" + std::to_string(line_no) + ": expected 'tag: value'");
    const auto tag = detail::trim(text.substr(0, colon));
    const auto value = detail::trim(text.substr(colon + 1));
    auto& cur = stanzas.back();

    if (tag == "id") {
      cur.term.id = value;
    } else if (tag == "name") {
      cur.term.name = value;
    } else if (tag == "namespace") {
      const auto domain = parse_go_domain(value);
      if (!domain)
        throw parse_error(path + ":" + std::to_string(line_no) + ": unknown namespace '" +
                          std::string(value) + "'");
      cur.term.domain = *domain;
      cur.has_namespace = true;
    } else if (tag == "is_a") {
      cur.parents.emplace_back("is_a", std::string(value));
    } else if (tag == "relationship") {
      std::istringstream fields{std::string(value)};
      std::string relation, target;
      if (!(fields >> relation >> target))
        throw parse_error(path + ":" + std::to_string(line_no) + ": malformed relationship");
      cur.parents.emplace_back(relation, target);
    } else if (tag == "is_obsolete") {
      cur.term.obsolete = value == "true";
    }
  }
  if (stanzas.empty()) throw empty_input_error(path + ": no term stanzas");

  obo_result out;
  std::unordered_map<std::string, std::size_t> by_id;
  for (const auto& s : stanzas) {
    if (s.term.id.empty())
      throw parse_error(path + ":" + std::to_string(s.line) + ": term stanza without id");
    if (!by_id.emplace(s.term.id, out.terms.size()).second)
      throw integrity_error(path + ": duplicate term " + s.term.id);
    if (!s.term.obsolete && !s.has_namespace)
      throw integrity_error(path + ": term " + s.term.id + " has no namespace");
    out.terms.push_back(s.term);
  }

  for (const auto& s : stanzas) {
    if (s.term.obsolete) continue;
    out.hierarchy.terms.intern(s.term.id);
  }
  for (const auto& s : stanzas) {
    if (s.term.obsolete) continue;
    const auto child = *out.hierarchy.terms.find(s.term.id);
    for (const auto& [relation, parent_id] : s.parents) {
      if (!options.relations.count(relation)) continue;
      auto it = by_id.find(parent_id);
      if (it == by_id.end())
        throw integrity_error(path + ": term " + s.term.id + " links to unknown term " + parent_id);
      if (out.terms[it->second].obsolete) continue;
      const auto parent = *out.hierarchy.terms.find(parent_id);
      out.hierarchy.edges.push_back({parent, child, relation});
    }
  }

  // Same (parent, child) pair may arrive via is_a and a relationship line.
  std::sort(out.hierarchy.edges.begin(), out.hierarchy.edges.end(),
            [](const hierarchy_edge& a, const hierarchy_edge& b) {
              return std::tie(a.parent, a.child, a.relation) < std::tie(b.parent, b.child, b.relation);
            });
  out.hierarchy.edges.erase(
      std::unique(out.hierarchy.edges.begin(), out.hierarchy.edges.end(),
                  [](const hierarchy_edge& a, const hierarchy_edge& b) {
                    return a.parent == b.parent && a.child == b.child;
                  }),
      out.hierarchy.edges.end());
  out.hierarchy.validate();
  return out;
}

// Restrict to one namespace; edges with a filtered-out endpoint drop.
inline reference_hierarchy filter_namespace(const obo_result& parsed, go_domain domain) {
  reference_hierarchy out;
  std::unordered_map<std::string, bool> keep;
  for (const auto& t : parsed.terms)
    if (!t.obsolete && t.domain == domain) {
      keep.emplace(t.id, true);
      out.terms.intern(t.id);
    }
  for (const auto& e : parsed.hierarchy.edges) {
    const auto& parent_name = parsed.hierarchy.terms.name(e.parent);
    const auto& child_name = parsed.hierarchy.terms.name(e.child);
    if (!keep.count(parent_name) || !keep.count(child_name)) continue;
    out.edges.push_back({*out.terms.find(parent_name), *out.terms.find(child_name), e.relation});
  }
  out.validate();
  return out;
}

}  // namespace hb
