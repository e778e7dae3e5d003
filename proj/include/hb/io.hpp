#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "hb/backbone.hpp"
#include "hb/bipartite.hpp"
#include "hb/cooccurrence.hpp"
#include "hb/errors.hpp"
#include "hb/hierarchy.hpp"
#include "hb/prune.hpp"

namespace hb {

// Shortest decimal form that parses back to the same double.
inline std::string fmt_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view s, const std::string& where) {
  double v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw parse_error(where + ": bad number '" + std::string(s) + "'");
  return v;
}

inline std::uint64_t parse_u64(std::string_view s, const std::string& where) {
  std::uint64_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw parse_error(where + ": bad count '" + std::string(s) + "'");
  return v;
}

// Write via a temporary file plus rename so readers never observe a
// partially written artifact.
inline void write_file_atomic(const std::string& path, std::string_view content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot open " + tmp + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw io_error("write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw io_error("cannot rename " + tmp + " to " + path);
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace detail {

inline std::vector<std::string_view> split(std::string_view line, char delimiter) {
  std::vector<std::string_view> cols;
  for (;;) {
    const auto pos = line.find(delimiter);
    if (pos == std::string_view::npos) {
      cols.push_back(line);
      return cols;
    }
    cols.push_back(line.substr(0, pos));
    line.remove_prefix(pos + 1);
  }
}

inline std::string_view chomp(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

// Stage files open with "#key<TAB>value" lines, then one header row.
struct stage_reader {
  std::ifstream in;
  std::string path;
  std::size_t line_no = 0;
  std::map<std::string, std::string> meta;
  std::string pending;  // first non-meta line (the header row)

  explicit stage_reader(const std::string& p) : in(p), path(p) {
    if (!in) throw io_error("cannot open " + p);
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      auto text = chomp(line);
      if (text.empty()) continue;
      if (text.front() != '#') {
        pending = text;
        return;
      }
      const auto cols = split(text.substr(1), '\t');
      if (cols.size() != 2)
        throw parse_error(p + ":" + std::to_string(line_no) + ": malformed metadata line");
      meta.emplace(std::string(cols[0]), std::string(cols[1]));
    }
    throw empty_input_error(p + ": no data rows");
  }

  const std::string& require_meta(const std::string& key) {
    auto it = meta.find(key);
    if (it == meta.end()) throw parse_error(path + ": missing metadata key " + key);
    return it->second;
  }

  void require_header(std::string_view expected) {
    if (pending != expected)
      throw parse_error(path + ":" + std::to_string(line_no) + ": expected header '" +
                        std::string(expected) + "'");
  }

  // Next data row split on tabs; false at end of file.
  bool next_row(std::vector<std::string_view>& cols, std::string& storage) {
    while (std::getline(in, storage)) {
      ++line_no;
      const auto text = chomp(storage);
      if (text.empty()) continue;
      cols = split(text, '\t');
      return true;
    }
    return false;
  }

  std::string where() const { return path + ":" + std::to_string(line_no); }
};

inline void require_cols(const std::vector<std::string_view>& cols, std::size_t n,
                         const std::string& where) {
  if (cols.size() != n)
    throw parse_error(where + ": expected " + std::to_string(n) + " columns, got " +
                      std::to_string(cols.size()));
}

// Records a tag's frequency, insisting any repeat mention agrees.
inline void note_frequency(std::vector<std::uint64_t>& freq, std::uint32_t id, std::uint64_t n,
                           const std::string& where) {
  if (freq.size() <= id) freq.resize(id + 1, 0);
  if (freq[id] != 0 && freq[id] != n)
    throw integrity_error(where + ": inconsistent frequency for tag id " + std::to_string(id));
  freq[id] = n;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Object-tag input tables.

struct tsv_options {
  char delimiter = '\t';
  bool header = false;
  // 1-based positions, or header names when header is true.
  std::string object_column = "1";
  std::string tag_column = "2";
};

namespace detail {

inline std::size_t resolve_column(const std::string& spec, const std::vector<std::string_view>* header,
                                  const std::string& path) {
  if (header) {
    for (std::size_t i = 0; i < header->size(); ++i)
      if ((*header)[i] == spec) return i;
  }
  std::size_t idx = 0;
  const auto res = std::from_chars(spec.data(), spec.data() + spec.size(), idx);
  if (res.ec != std::errc{} || res.ptr != spec.data() + spec.size() || idx == 0)
    throw config_error(path + ": column '" + spec + "' is neither a header name nor a 1-based index");
  return idx - 1;
}

}  // namespace detail

inline bipartite_graph load_bipartite_tsv(const std::string& path, const tsv_options& options = {}) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);

  bipartite_builder builder;
  std::string line;
  std::size_t line_no = 0;
  std::size_t obj_col = 0, tag_col = 0;
  bool resolved = false;

  while (std::getline(in, line)) {
    ++line_no;
    const auto text = detail::chomp(line);
    if (text.empty()) continue;
    auto cols = detail::split(text, options.delimiter);
    if (!resolved) {
      const auto* header = options.header ? &cols : nullptr;
      obj_col = detail::resolve_column(options.object_column, header, path);
      tag_col = detail::resolve_column(options.tag_column, header, path);
      resolved = true;
      if (options.header) continue;
    }
    const auto needed = std::max(obj_col, tag_col) + 1;
    if (cols.size() < needed)
      throw parse_error(path + ":" + std::to_string(line_no) + ": expected at least " +
                        std::to_string(needed) + " columns, got " + std::to_string(cols.size()));
    try {
      builder.add(cols[obj_col], cols[tag_col]);
    } catch (const parse_error&) {
      throw parse_error(path + ":" + std::to_string(line_no) + ": empty identifier");
    }
  }
  if (builder.records_added() == 0) throw empty_input_error(path + ": no data rows");
  return builder.finish();
}

inline std::string bipartite_tsv(const bipartite_graph& b) {
  std::string out;
  for (std::uint32_t obj = 0; obj < b.objects.size(); ++obj)
    for (const auto tag : b.object_tags[obj]) {
      out += b.objects.name(obj);
      out += '\t';
      out += b.tags.name(tag);
      out += '\n';
    }
  return out;
}

inline void save_bipartite_tsv(const std::string& path, const bipartite_graph& b) {
  write_file_atomic(path, bipartite_tsv(b));
}

// ---------------------------------------------------------------------------
// Reference hierarchies: two-column parent -> child TSV, no header.

inline reference_hierarchy load_hierarchy_tsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);

  reference_hierarchy h;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto text = detail::chomp(line);
    if (text.empty()) continue;
    const auto cols = detail::split(text, '\t');
    detail::require_cols(cols, 2, path + ":" + std::to_string(line_no));
    if (cols[0].empty() || cols[1].empty())
      throw parse_error(path + ":" + std::to_string(line_no) + ": empty term name");
    const auto parent = h.terms.intern(cols[0]);
    const auto child = h.terms.intern(cols[1]);
    h.edges.push_back({parent, child, ""});
  }
  if (h.edges.empty()) throw empty_input_error(path + ": no edges");
  h.validate();
  return h;
}

inline std::string hierarchy_tsv(const reference_hierarchy& h) {
  std::string out;
  for (const auto& e : h.edges) {
    out += h.terms.name(e.parent);
    out += '\t';
    out += h.terms.name(e.child);
    out += '\n';
  }
  return out;
}

inline void save_hierarchy_tsv(const std::string& path, const reference_hierarchy& h) {
  write_file_atomic(path, hierarchy_tsv(h));
}

// ---------------------------------------------------------------------------
// Co-occurrence stage file.

inline std::string cooccurrence_tsv(const cooccurrence_graph& g) {
  std::string out = "#n_objects\t" + std::to_string(g.n_objects) + "\n";
  out += "u\tv\tn_u\tn_v\tn_uv\n";
  for (const auto& p : g.pairs) {
    out += g.tags.name(p.u);
    out += '\t';
    out += g.tags.name(p.v);
    out += '\t';
    out += std::to_string(g.tag_frequency[p.u]);
    out += '\t';
    out += std::to_string(g.tag_frequency[p.v]);
    out += '\t';
    out += std::to_string(p.n_uv);
    out += '\n';
  }
  return out;
}

inline void save_cooccurrence(const std::string& path, const cooccurrence_graph& g) {
  write_file_atomic(path, cooccurrence_tsv(g));
}

// Tags absent from every pair do not appear in the file, so the loaded
// graph covers exactly the co-occurring tags.
inline cooccurrence_graph load_cooccurrence(const std::string& path) {
  detail::stage_reader reader(path);
  cooccurrence_graph g;
  g.n_objects = parse_u64(reader.require_meta("n_objects"), path);
  reader.require_header("u\tv\tn_u\tn_v\tn_uv");

  std::vector<std::string_view> cols;
  std::string storage;
  while (reader.next_row(cols, storage)) {
    detail::require_cols(cols, 5, reader.where());
    const auto u = g.tags.intern(cols[0]);
    const auto v = g.tags.intern(cols[1]);
    if (u == v) throw integrity_error(reader.where() + ": pair with identical tags");
    detail::note_frequency(g.tag_frequency, u, parse_u64(cols[2], reader.where()), reader.where());
    detail::note_frequency(g.tag_frequency, v, parse_u64(cols[3], reader.where()), reader.where());
    const auto n_uv = parse_u64(cols[4], reader.where());
    g.pairs.push_back({std::min(u, v), std::max(u, v), n_uv});
  }
  g.tag_frequency.resize(g.tags.size(), 0);
  std::sort(g.pairs.begin(), g.pairs.end(), [](const auto& a, const auto& b) {
    return a.u < b.u || (a.u == b.u && a.v < b.v);
  });
  for (std::size_t i = 1; i < g.pairs.size(); ++i)
    if (g.pairs[i - 1].u == g.pairs[i].u && g.pairs[i - 1].v == g.pairs[i].v)
      throw integrity_error(path + ": duplicate pair " + g.tags.name(g.pairs[i].u) + ", " +
                            g.tags.name(g.pairs[i].v));
  return g;
}

inline std::string tag_frequency_tsv(const id_map& tags,
                                     const std::vector<std::uint64_t>& frequency) {
  std::string out = "tag\tn\n";
  for (std::uint32_t t = 0; t < tags.size(); ++t) {
    out += tags.name(t);
    out += '\t';
    out += std::to_string(frequency[t]);
    out += '\n';
  }
  return out;
}

inline void save_tag_frequencies(const std::string& path, const id_map& tags,
                                 const std::vector<std::uint64_t>& frequency) {
  write_file_atomic(path, tag_frequency_tsv(tags, frequency));
}

// ---------------------------------------------------------------------------
// Pruned stage file.

inline std::string pruned_tsv(const pruned_graph& g) {
  std::string out = "#n_objects\t" + std::to_string(g.n_objects) + "\n";
  out += "#z_th\t" + fmt_double(g.z_th) + "\n";
  out += "u\tv\tn_u\tn_v\tn_uv\tz\n";
  for (const auto& p : g.pairs) {
    out += g.tags.name(p.u);
    out += '\t';
    out += g.tags.name(p.v);
    out += '\t';
    out += std::to_string(g.tag_frequency[p.u]);
    out += '\t';
    out += std::to_string(g.tag_frequency[p.v]);
    out += '\t';
    out += std::to_string(p.n_uv);
    out += '\t';
    out += fmt_double(p.z);
    out += '\n';
  }
  return out;
}

inline void save_pruned(const std::string& path, const pruned_graph& g) {
  write_file_atomic(path, pruned_tsv(g));
}

inline pruned_graph load_pruned(const std::string& path) {
  detail::stage_reader reader(path);
  pruned_graph g;
  g.n_objects = parse_u64(reader.require_meta("n_objects"), path);
  g.z_th = parse_double(reader.require_meta("z_th"), path);
  reader.require_header("u\tv\tn_u\tn_v\tn_uv\tz");

  std::vector<std::string_view> cols;
  std::string storage;
  while (reader.next_row(cols, storage)) {
    detail::require_cols(cols, 6, reader.where());
    const auto u = g.tags.intern(cols[0]);
    const auto v = g.tags.intern(cols[1]);
    if (u == v) throw integrity_error(reader.where() + ": pair with identical tags");
    detail::note_frequency(g.tag_frequency, u, parse_u64(cols[2], reader.where()), reader.where());
    detail::note_frequency(g.tag_frequency, v, parse_u64(cols[3], reader.where()), reader.where());
    g.pairs.push_back({std::min(u, v), std::max(u, v), parse_u64(cols[4], reader.where()),
                       parse_double(cols[5], reader.where())});
  }
  g.tag_frequency.resize(g.tags.size(), 0);
  std::sort(g.pairs.begin(), g.pairs.end(), [](const auto& a, const auto& b) {
    return a.u < b.u || (a.u == b.u && a.v < b.v);
  });
  for (std::size_t i = 1; i < g.pairs.size(); ++i)
    if (g.pairs[i - 1].u == g.pairs[i].u && g.pairs[i - 1].v == g.pairs[i].v)
      throw integrity_error(path + ": duplicate pair " + g.tags.name(g.pairs[i].u) + ", " +
                            g.tags.name(g.pairs[i].v));

  g.degree.assign(g.tags.size(), 0);
  for (const auto& p : g.pairs) {
    ++g.degree[p.u];
    ++g.degree[p.v];
  }
  if (!g.degree.empty()) g.k_max = *std::max_element(g.degree.begin(), g.degree.end());
  return g;
}

// ---------------------------------------------------------------------------
// Backbone stage file.

namespace detail {

inline void append_backbone_rows(std::string& out, const hierarchical_backbone& h,
                                 const std::vector<backbone_edge>& edges) {
  for (const auto& e : edges) {
    out += h.tags.name(e.parent);
    out += '\t';
    out += h.tags.name(e.child);
    out += '\t';
    out += fmt_double(e.alpha);
    out += '\t';
    out += fmt_double(e.z);
    out += '\t';
    out += std::to_string(e.n_parent);
    out += '\t';
    out += std::to_string(e.n_child);
    out += '\t';
    out += std::to_string(e.n_joint);
    out += '\n';
  }
}

inline constexpr std::string_view backbone_header = "u\tv\talpha\tz\tn_u\tn_v\tn_uv";

}  // namespace detail

inline std::string backbone_tsv(const hierarchical_backbone& h) {
  std::string out = "#n_objects\t" + std::to_string(h.n_objects) + "\n";
  out += "#z_th\t" + fmt_double(h.z_th) + "\n";
  out += "#alpha_th\t" + fmt_double(h.alpha_th) + "\n";
  out += "#parsimonious\t" + std::string(h.parsimonious ? "1" : "0") + "\n";
  out += detail::backbone_header;
  out += '\n';
  detail::append_backbone_rows(out, h, h.edges);
  return out;
}

inline void save_backbone(const std::string& path, const hierarchical_backbone& h) {
  write_file_atomic(path, backbone_tsv(h));
}

// The audit list of transitively implied edges, same columns.
inline std::string backbone_audit_tsv(const hierarchical_backbone& h) {
  std::string out{detail::backbone_header};
  out += '\n';
  detail::append_backbone_rows(out, h, h.removed);
  return out;
}

inline void save_backbone_audit(const std::string& path, const hierarchical_backbone& h) {
  write_file_atomic(path, backbone_audit_tsv(h));
}

inline hierarchical_backbone load_backbone(const std::string& path) {
  detail::stage_reader reader(path);
  hierarchical_backbone h;
  h.n_objects = parse_u64(reader.require_meta("n_objects"), path);
  h.z_th = parse_double(reader.require_meta("z_th"), path);
  h.alpha_th = parse_double(reader.require_meta("alpha_th"), path);
  h.parsimonious = reader.require_meta("parsimonious") == "1";
  reader.require_header(detail::backbone_header);

  std::vector<std::string_view> cols;
  std::string storage;
  std::vector<std::uint64_t> freq;
  while (reader.next_row(cols, storage)) {
    detail::require_cols(cols, 7, reader.where());
    const auto parent = h.tags.intern(cols[0]);
    const auto child = h.tags.intern(cols[1]);
    const auto alpha = parse_double(cols[2], reader.where());
    const auto z = parse_double(cols[3], reader.where());
    const auto n_parent = parse_u64(cols[4], reader.where());
    const auto n_child = parse_u64(cols[5], reader.where());
    const auto n_joint = parse_u64(cols[6], reader.where());
    detail::note_frequency(freq, parent, n_parent, reader.where());
    detail::note_frequency(freq, child, n_child, reader.where());
    h.edges.push_back({parent, child, alpha, z, n_parent, n_child, n_joint});
  }
  std::sort(h.edges.begin(), h.edges.end(), [](const auto& a, const auto& b) {
    return a.parent < b.parent || (a.parent == b.parent && a.child < b.child);
  });
  detail::check_backbone_integrity(h);
  return h;
}

}  // namespace hb
