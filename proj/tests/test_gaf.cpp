#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "hb/gaf.hpp"
#include "hb/obo.hpp"

using namespace hb;

namespace {

const std::string data_dir = HB_TEST_DATA_DIR;

reference_hierarchy fixture_reference() {
  return filter_namespace(parse_obo(data_dir + "/mini.obo"), go_domain::molecular_function);
}

std::vector<species_annotations> fixture_sets() {
  return {{"human", parse_gaf(data_dir + "/mini_a.gaf")},
          {"mouse", parse_gaf(data_dir + "/mini_b.gaf")}};
}

}  // namespace

TEST_CASE("parses annotation rows and drops negations") {
  const auto records = parse_gaf(data_dir + "/mini_a.gaf");

  // Six data rows; the NOT-qualified one vanishes.
  REQUIRE(records.size() == 5);
  REQUIRE(records[0].product == "P001");
  REQUIRE(records[0].term == "GO:0000004");
  REQUIRE(records[0].aspect == go_domain::molecular_function);
  REQUIRE(records[0].evidence == "IDA");
  for (const auto& r : records) REQUIRE_FALSE((r.product == "P002" && r.term == "GO:0000004"));

  const auto bp_row = records[3];
  REQUIRE(bp_row.product == "P003");
  REQUIRE(bp_row.aspect == go_domain::biological_process);
}

TEST_CASE("enforces the 17-column layout") {
  const std::string path = "/tmp/hb_test_short_row.gaf";
  {
    std::ofstream out(path);
    out << "!gaf-version: 2.2\n";
    out << "DB\tP1\tg\t\tGO:1\tref\tIDA\t\tF\tname\t\tprotein\ttaxon:1\t20240101\tsrc\n";
  }
  REQUIRE_THROWS_AS(parse_gaf(path), parse_error);
  try {
    parse_gaf(path);
  } catch (const parse_error& e) {
    REQUIRE(std::string(e.what()).find(":2") != std::string::npos);
  }
  std::remove(path.c_str());
}

TEST_CASE("comment-only file has no records") {
  const std::string path = "/tmp/hb_test_comments.gaf";
  {
    std::ofstream out(path);
    out << "!gaf-version: 2.2\n!only comments here\n";
  }
  REQUIRE_THROWS_AS(parse_gaf(path), empty_input_error);
  std::remove(path.c_str());
}

TEST_CASE("merges species into a namespaced graph") {
  merge_options options;
  options.domain = go_domain::molecular_function;
  merge_stats stats;
  const auto graph = merge_annotations(fixture_sets(), fixture_reference(), options, &stats);

  REQUIRE(stats.rows_in == 7);
  REQUIRE(stats.dropped_aspect == 1);        // the biological_process row
  REQUIRE(stats.dropped_unknown_term == 1);  // GO:9999999
  REQUIRE(stats.dropped_evidence == 0);
  REQUIRE(stats.rows_used == 5);

  REQUIRE(graph.objects.size() == 4);
  REQUIRE(graph.tags.size() == 3);
  REQUIRE(graph.edge_count == 5);
  REQUIRE(graph.objects.contains("human|P001"));
  REQUIRE(graph.objects.contains("human|P002"));
  REQUIRE(graph.objects.contains("mouse|M001"));
  REQUIRE(graph.objects.contains("mouse|P001"));

  const auto freq = graph.tag_frequency();
  REQUIRE(freq[*graph.tags.find("GO:0000004")] == 2);
  REQUIRE(freq[*graph.tags.find("GO:0000002")] == 2);
  REQUIRE(freq[*graph.tags.find("GO:0000005")] == 1);
}

TEST_CASE("merge result is independent of species order") {
  merge_options options;
  options.domain = go_domain::molecular_function;
  auto sets = fixture_sets();
  std::swap(sets[0], sets[1]);
  const auto a = merge_annotations(fixture_sets(), fixture_reference(), options);
  const auto b = merge_annotations(sets, fixture_reference(), options);

  REQUIRE(a.objects.size() == b.objects.size());
  for (std::uint32_t i = 0; i < a.objects.size(); ++i)
    REQUIRE(a.objects.name(i) == b.objects.name(i));
  REQUIRE(a.edge_count == b.edge_count);
}

TEST_CASE("evidence filters include and exclude codes") {
  merge_options options;
  options.domain = go_domain::molecular_function;

  SECTION("exclude IEA") {
    options.evidence_exclude = {"IEA"};
    merge_stats stats;
    const auto graph = merge_annotations(fixture_sets(), fixture_reference(), options, &stats);
    REQUIRE(stats.dropped_evidence == 1);
    REQUIRE_FALSE(graph.tags.contains("GO:0000005"));
  }
  SECTION("include only IDA") {
    options.evidence_include = {"IDA"};
    merge_stats stats;
    const auto graph = merge_annotations(fixture_sets(), fixture_reference(), options, &stats);
    REQUIRE(stats.rows_used == 2);
    REQUIRE(graph.objects.size() == 2);
    REQUIRE(graph.tags.size() == 1);
    REQUIRE(graph.tags.contains("GO:0000004"));
  }
}

TEST_CASE("merge with nothing left is an error") {
  merge_options options;
  options.domain = go_domain::cellular_component;
  REQUIRE_THROWS_AS(merge_annotations(fixture_sets(), fixture_reference(), options),
                    empty_input_error);
}
