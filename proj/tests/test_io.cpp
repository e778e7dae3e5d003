#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <string>
#include <tuple>

#include "hb/backbone.hpp"
#include "hb/bipartite.hpp"
#include "hb/cooccurrence.hpp"
#include "hb/io.hpp"
#include "hb/prune.hpp"
#include "hb/rng.hpp"

using namespace hb;

namespace {

struct temp_file {
  std::string path;
  explicit temp_file(const std::string& name, const std::string& content = "")
      : path("/tmp/hb_io_" + name) {
    if (!content.empty()) {
      std::ofstream out(path);
      out << content;
    }
  }
  ~temp_file() { std::remove(path.c_str()); }
};

pruned_graph sample_pruned() {
  std::vector<std::pair<std::string, std::string>> records;
  split_rng rng(555);
  for (int i = 0; i < 300; ++i)
    records.emplace_back("o" + std::to_string(rng.below(30)), "t" + std::to_string(rng.below(10)));
  return prune(project(build_bipartite(records)), 0.2);
}

}  // namespace

TEST_CASE("loads two-column tables by position") {
  temp_file file("basic.tsv", "1\tu\n1\tv\n2\tu\n2\tv\n3\tu\n");
  const auto b = load_bipartite_tsv(file.path);
  REQUIRE(b.objects.size() == 3);
  REQUIRE(b.tags.size() == 2);
  REQUIRE(b.edge_count == 5);
}

TEST_CASE("column selection by index and by header name") {
  SECTION("reordered columns by index") {
    temp_file file("cols.tsv", "x\tobj1\ttagA\nx\tobj2\ttagA\n");
    tsv_options options;
    options.object_column = "2";
    options.tag_column = "3";
    const auto b = load_bipartite_tsv(file.path, options);
    REQUIRE(b.objects.size() == 2);
    REQUIRE(b.tags.size() == 1);
  }
  SECTION("header names") {
    temp_file file("named.tsv", "member\tgroup\nalice\tadmins\nbob\tadmins\n");
    tsv_options options;
    options.header = true;
    options.object_column = "member";
    options.tag_column = "group";
    const auto b = load_bipartite_tsv(file.path, options);
    REQUIRE(b.objects.size() == 2);
    REQUIRE(b.tags.contains("admins"));
  }
  SECTION("header row is skipped as data") {
    temp_file file("hdr.tsv", "object\ttag\n1\tu\n");
    tsv_options options;
    options.header = true;
    const auto b = load_bipartite_tsv(file.path, options);
    REQUIRE(b.objects.size() == 1);
    REQUIRE_FALSE(b.tags.contains("tag"));
  }
  SECTION("unknown header name") {
    temp_file file("badname.tsv", "a\tb\n1\tu\n");
    tsv_options options;
    options.header = true;
    options.object_column = "missing";
    REQUIRE_THROWS_AS(load_bipartite_tsv(file.path, options), config_error);
  }
}

TEST_CASE("alternative delimiter") {
  temp_file file("commas.csv", "1,u\n2,u\n");
  tsv_options options;
  options.delimiter = ',';
  const auto b = load_bipartite_tsv(file.path, options);
  REQUIRE(b.objects.size() == 2);
}

TEST_CASE("table errors carry the line number") {
  SECTION("short row") {
    temp_file file("short.tsv", "1\tu\n2\n");
    try {
      load_bipartite_tsv(file.path);
      FAIL("expected parse_error");
    } catch (const parse_error& e) {
      REQUIRE(std::string(e.what()).find(":2") != std::string::npos);
    }
  }
  SECTION("empty file") {
    temp_file file("empty.tsv", "\n\n");
    REQUIRE_THROWS_AS(load_bipartite_tsv(file.path), empty_input_error);
  }
  SECTION("missing file") {
    REQUIRE_THROWS_AS(load_bipartite_tsv("/tmp/hb_io_missing.tsv"), io_error);
  }
}

TEST_CASE("bipartite writer round-trips") {
  const auto b = build_bipartite({{"1", "u"}, {"1", "v"}, {"2", "u"}});
  temp_file file("bip_rt.tsv");
  save_bipartite_tsv(file.path, b);
  const auto loaded = load_bipartite_tsv(file.path);
  REQUIRE(loaded.objects.size() == b.objects.size());
  REQUIRE(loaded.edge_count == b.edge_count);
  REQUIRE(bipartite_tsv(loaded) == bipartite_tsv(b));
}

TEST_CASE("co-occurrence stage file round-trips") {
  const auto g = project(build_bipartite({{"1", "u"}, {"1", "v"}, {"2", "u"}, {"2", "v"}, {"3", "u"}}));
  temp_file file("cooc_rt.tsv");
  save_cooccurrence(file.path, g);
  const auto loaded = load_cooccurrence(file.path);

  REQUIRE(loaded.n_objects == 3);
  REQUIRE(loaded.pairs.size() == 1);
  REQUIRE(loaded.joint_count(*loaded.tags.find("u"), *loaded.tags.find("v")) == 2);
  REQUIRE(loaded.tag_frequency[*loaded.tags.find("u")] == 3);
  REQUIRE(cooccurrence_tsv(loaded) == cooccurrence_tsv(g));
}

TEST_CASE("pruned stage file round-trips with exact scores") {
  const auto g = sample_pruned();
  REQUIRE_FALSE(g.pairs.empty());
  temp_file file("pruned_rt.tsv");
  save_pruned(file.path, g);
  const auto loaded = load_pruned(file.path);

  REQUIRE(loaded.n_objects == g.n_objects);
  REQUIRE(loaded.z_th == g.z_th);
  REQUIRE(loaded.pairs.size() == g.pairs.size());
  REQUIRE(loaded.k_max == g.k_max);

  // Loading assigns ids in row order, so compare pairs by name.  z must
  // survive exactly, not approximately.
  using pair_row = std::tuple<std::uint64_t, std::uint64_t, std::uint64_t, double>;
  const auto content = [](const pruned_graph& p) {
    std::map<std::pair<std::string, std::string>, pair_row> rows;
    for (const auto& pr : p.pairs) {
      auto a = p.tags.name(pr.u);
      auto b = p.tags.name(pr.v);
      auto fa = p.tag_frequency[pr.u];
      auto fb = p.tag_frequency[pr.v];
      if (b < a) {
        std::swap(a, b);
        std::swap(fa, fb);
      }
      rows[{a, b}] = {fa, fb, pr.n_uv, pr.z};
    }
    return rows;
  };
  REQUIRE(content(loaded) == content(g));

  // A second trip through the file preserves the content too.
  temp_file again("pruned_rt2.tsv");
  save_pruned(again.path, loaded);
  REQUIRE(content(load_pruned(again.path)) == content(loaded));
}

TEST_CASE("backbone stage file round-trips") {
  const auto g = sample_pruned();
  const auto h = build_backbone(g, 0.02);
  REQUIRE_FALSE(h.edges.empty());
  temp_file file("backbone_rt.tsv");
  save_backbone(file.path, h);
  const auto loaded = load_backbone(file.path);

  REQUIRE(loaded.z_th == h.z_th);
  REQUIRE(loaded.alpha_th == h.alpha_th);
  REQUIRE(loaded.parsimonious == h.parsimonious);
  REQUIRE(loaded.edges.size() == h.edges.size());

  using edge_row = std::tuple<double, double, std::uint64_t, std::uint64_t, std::uint64_t>;
  const auto content = [](const hierarchical_backbone& b) {
    std::map<std::pair<std::string, std::string>, edge_row> rows;
    for (const auto& e : b.edges)
      rows[{b.tags.name(e.parent), b.tags.name(e.child)}] = {e.alpha, e.z, e.n_parent, e.n_child,
                                                             e.n_joint};
    return rows;
  };
  REQUIRE(content(loaded) == content(h));

  temp_file again("backbone_rt2.tsv");
  save_backbone(again.path, loaded);
  REQUIRE(content(load_backbone(again.path)) == content(loaded));
}

TEST_CASE("stage readers reject broken files") {
  SECTION("missing metadata") {
    temp_file file("nometa.tsv", "u\tv\tn_u\tn_v\tn_uv\na\tb\t2\t2\t1\n");
    REQUIRE_THROWS_AS(load_cooccurrence(file.path), parse_error);
  }
  SECTION("wrong header") {
    temp_file file("badhdr.tsv", "#n_objects\t5\nwrong\theader\n");
    REQUIRE_THROWS_AS(load_cooccurrence(file.path), parse_error);
  }
  SECTION("inconsistent frequency") {
    temp_file file("incons.tsv",
                   "#n_objects\t10\nu\tv\tn_u\tn_v\tn_uv\na\tb\t3\t4\t2\na\tc\t5\t4\t2\n");
    REQUIRE_THROWS_AS(load_cooccurrence(file.path), integrity_error);
  }
  SECTION("duplicate pair") {
    temp_file file("dup.tsv", "#n_objects\t10\nu\tv\tn_u\tn_v\tn_uv\na\tb\t3\t4\t2\nb\ta\t4\t3\t2\n");
    REQUIRE_THROWS_AS(load_cooccurrence(file.path), integrity_error);
  }
  SECTION("bad number") {
    temp_file file("nan.tsv", "#n_objects\t10\nu\tv\tn_u\tn_v\tn_uv\na\tb\tthree\t4\t2\n");
    REQUIRE_THROWS_AS(load_cooccurrence(file.path), parse_error);
  }
}

TEST_CASE("atomic writer leaves no temporary behind") {
  const std::string path = "/tmp/hb_io_atomic.txt";
  write_file_atomic(path, "payload");
  REQUIRE(read_file(path) == "payload");
  std::ifstream tmp(path + ".tmp");
  REQUIRE_FALSE(tmp.good());
  std::remove(path.c_str());
}

TEST_CASE("doubles survive the shortest-form formatting") {
  split_rng rng(9001);
  for (int i = 0; i < 2000; ++i) {
    const double v = (rng.next_double() - 0.5) * std::pow(10.0, double(rng.below(13)) - 6.0);
    REQUIRE(parse_double(fmt_double(v), "test") == v);
  }
}
