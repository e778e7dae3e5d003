#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hb/io.hpp"
#include "hb/version.hpp"

namespace hb {

inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (const unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

inline std::string content_digest(std::string_view data) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(data)));
  return "fnv1a64:" + std::string(buf);
}

/**
 * Run manifest: tool version, effective configuration, and a content
 * digest for every input and output file.  Contains nothing volatile
 * (no timestamps, no host names), so identical runs write identical
 * manifests.
 */
class run_manifest {
 public:
  explicit run_manifest(const std::string& command) {
    data_["tool"] = "hb";
    data_["version"] = version_string;
    data_["command"] = command;
    data_["config"] = nlohmann::json::object();
    data_["inputs"] = nlohmann::json::array();
    data_["outputs"] = nlohmann::json::array();
  }

  template <typename T>
  void set_config(const std::string& key, const T& value) {
    data_["config"][key] = value;
  }

  void add_input(const std::string& path) { add(data_["inputs"], path, read_file(path)); }
  void add_input(const std::string& path, std::string_view content) {
    add(data_["inputs"], path, content);
  }
  void add_output(const std::string& path, std::string_view content) {
    add(data_["outputs"], path, content);
  }

  // Writes the output file and records it in one step.
  void write_output(const std::string& path, std::string_view content) {
    write_file_atomic(path, content);
    add_output(path, content);
  }

  void save(const std::string& path) const { write_file_atomic(path, data_.dump(2) + "\n"); }

  const nlohmann::json& json() const { return data_; }

 private:
  static void add(nlohmann::json& list, const std::string& path, std::string_view content) {
    list.push_back({{"path", path}, {"digest", content_digest(content)}});
  }

  nlohmann::json data_;
};

}  // namespace hb
