#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hb/errors.hpp"
#include "hb/ids.hpp"

namespace hb {

/**
 * Object-tag membership graph.  Objects and tags live in separate id
 * spaces; each object row is a sorted, duplicate-free list of tag ids.
 */
struct bipartite_graph {
  id_map objects;
  id_map tags;
  std::vector<std::vector<std::uint32_t>> object_tags;
  std::uint64_t edge_count = 0;

  // Number of distinct objects carrying each tag.
  std::vector<std::uint64_t> tag_frequency() const {
    std::vector<std::uint64_t> freq(tags.size(), 0);
    for (const auto& row : object_tags)
      for (auto t : row) ++freq[t];
    return freq;
  }
};

/**
 * Incremental constructor.  add() accepts rows in any order; finish()
 * sorts and deduplicates each object's tag list.
 */
class bipartite_builder {
 public:
  void add(std::string_view object, std::string_view tag) {
    if (object.empty()) throw parse_error("record " + std::to_string(n_added_) + ": empty object identifier");
    if (tag.empty()) throw parse_error("record " + std::to_string(n_added_) + ": empty tag identifier");
    const auto obj = graph_.objects.intern(object);
    const auto tg = graph_.tags.intern(tag);
    if (obj >= graph_.object_tags.size()) graph_.object_tags.resize(obj + 1);
    graph_.object_tags[obj].push_back(tg);
    ++n_added_;
  }

  std::uint64_t records_added() const { return n_added_; }

  bipartite_graph finish() {
    if (n_added_ == 0) throw empty_input_error("no object-tag records");
    graph_.edge_count = 0;
    for (auto& row : graph_.object_tags) {
      std::sort(row.begin(), row.end());
      row.erase(std::unique(row.begin(), row.end()), row.end());
      graph_.edge_count += row.size();
    }
    return std::move(graph_);
  }

 private:
  bipartite_graph graph_;
  std::uint64_t n_added_ = 0;
};

inline bipartite_graph build_bipartite(
    const std::vector<std::pair<std::string, std::string>>& records) {
  bipartite_builder builder;
  for (const auto& [object, tag] : records) builder.add(object, tag);
  return builder.finish();
}

}  // namespace hb
