#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "hb/errors.hpp"
#include "hb/io.hpp"
#include "hb/obo.hpp"

namespace cli {

// "--gaf human=goa_human.gaf"; without a species label the file stem is used.
inline std::pair<std::string, std::string> split_gaf_spec(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos) return {std::filesystem::path(spec).stem().string(), spec};
  auto species = spec.substr(0, eq);
  auto path = spec.substr(eq + 1);
  if (species.empty() || path.empty()) throw hb::config_error("bad --gaf value: " + spec);
  return {std::move(species), std::move(path)};
}

inline hb::go_domain domain_from(const std::string& name) {
  const auto domain = hb::parse_go_domain(name);
  if (!domain) throw hb::config_error("unknown namespace: " + name);
  return *domain;
}

inline std::vector<double> grid_from(const std::string& csv) {
  std::vector<double> grid;
  for (const auto part : hb::detail::split(csv, ','))
    grid.push_back(hb::parse_double(part, "--alpha-grid"));
  return grid;
}

inline char delimiter_from(const std::string& s) {
  if (s == "\\t" || s == "tab") return '\t';
  if (s.size() != 1) throw hb::config_error("--delimiter must be a single character");
  return s[0];
}

}  // namespace cli
