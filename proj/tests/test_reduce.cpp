#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hb/backbone.hpp"
#include "hb/dag.hpp"
#include "hb/rng.hpp"
#include "support.hpp"

using namespace hb;

namespace {

// Backbone over nodes t0..t{n-1} with edges pointing from lower to higher
// index; frequencies decrease with the index so the descent invariant
// holds by construction.
hierarchical_backbone synthetic_backbone(std::uint32_t n, const dag::edge_list& edges) {
  hierarchical_backbone h;
  for (std::uint32_t i = 0; i < n; ++i) h.tags.intern("t" + std::to_string(i));
  h.n_objects = 10 * n;
  h.alpha_th = 0.1;
  for (const auto& [from, to] : edges) {
    REQUIRE(from < to);
    h.edges.push_back({from, to, 0.5, 1.0, static_cast<std::uint64_t>(2 * n - from),
                       static_cast<std::uint64_t>(2 * n - to), 1});
  }
  std::sort(h.edges.begin(), h.edges.end(), [](const auto& a, const auto& b) {
    return a.parent < b.parent || (a.parent == b.parent && a.child < b.child);
  });
  return h;
}

dag::edge_list edge_pairs(const std::vector<backbone_edge>& edges) {
  dag::edge_list out;
  for (const auto& e : edges) out.emplace_back(e.parent, e.child);
  return out;
}

dag::edge_list random_increasing_edges(std::uint32_t n, double p, split_rng& rng) {
  dag::edge_list edges;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (rng.next_double() < p) edges.emplace_back(i, j);
  return edges;
}

}  // namespace

TEST_CASE("removes the edge a longer path implies") {
  const auto h = synthetic_backbone(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto reduced = transitive_reduce(h);

  REQUIRE(reduced.parsimonious);
  REQUIRE(reduced.edges.size() == 2);
  REQUIRE(reduced.removed.size() == 1);
  REQUIRE(reduced.removed[0].parent == 0);
  REQUIRE(reduced.removed[0].child == 2);
}

TEST_CASE("a path graph is already minimal") {
  const auto h = synthetic_backbone(4, {{0, 1}, {1, 2}, {2, 3}});
  const auto reduced = transitive_reduce(h);
  REQUIRE(reduced.edges.size() == 3);
  REQUIRE(reduced.removed.empty());
}

TEST_CASE("reduction preserves reachability and is minimal") {
  split_rng rng(3100);
  for (int round = 0; round < 40; ++round) {
    const std::uint32_t n = 3 + static_cast<std::uint32_t>(rng.below(10));
    const auto h = synthetic_backbone(n, random_increasing_edges(n, 0.4, rng));
    const auto reduced = transitive_reduce(h);

    const auto before = test_support::brute_reachability(n, edge_pairs(h.edges));
    const auto after = test_support::brute_reachability(n, edge_pairs(reduced.edges));
    REQUIRE(before == after);

    // Minimality: dropping any surviving edge loses its own connection.
    for (std::size_t skip = 0; skip < reduced.edges.size(); ++skip) {
      auto edges = edge_pairs(reduced.edges);
      const auto removed_edge = edges[skip];
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(skip));
      const auto partial = test_support::brute_reachability(n, edges);
      REQUIRE_FALSE(partial[removed_edge.first][removed_edge.second]);
    }

    // The reduction partitions the original edge set.
    REQUIRE(reduced.edges.size() + reduced.removed.size() == h.edges.size());
  }
}

TEST_CASE("reduction is idempotent and accumulates its audit list") {
  split_rng rng(3101);
  const auto h = synthetic_backbone(10, random_increasing_edges(10, 0.5, rng));
  const auto once = transitive_reduce(h);
  const auto twice = transitive_reduce(once);

  REQUIRE(once.edges.size() == twice.edges.size());
  for (std::size_t i = 0; i < once.edges.size(); ++i) {
    REQUIRE(once.edges[i].parent == twice.edges[i].parent);
    REQUIRE(once.edges[i].child == twice.edges[i].child);
  }
  REQUIRE(twice.removed.size() == once.removed.size());
}

TEST_CASE("rejects a cyclic input") {
  hierarchical_backbone h;
  h.tags.intern("a");
  h.tags.intern("b");
  h.edges.push_back({0, 1, 0.5, 1.0, 10, 5, 3});
  h.edges.push_back({1, 0, 0.5, 1.0, 5, 10, 3});
  REQUIRE_THROWS_AS(transitive_reduce(h), integrity_error);
}

TEST_CASE("empty backbone reduces to itself") {
  hierarchical_backbone h;
  const auto reduced = transitive_reduce(h);
  REQUIRE(reduced.edges.empty());
  REQUIRE(reduced.parsimonious);
}
